#ifndef GREENMESH_CSV_HPP
#define GREENMESH_CSV_HPP

#include <string>

namespace greenmesh {

// Shortest decimal that round-trips the exact double value.
std::string format_double(double v);

} // namespace greenmesh

#endif
