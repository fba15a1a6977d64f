#ifndef GREENMESH_ERRORS_HPP
#define GREENMESH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace greenmesh {

// Bad user-supplied configuration (dimensions, counts, solver parameters).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A loaded or constructed object violates a type invariant.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Unparseable input file.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched vector/matrix sizes between collaborating values.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Problem too large for an exact method.
class ResourceGuardError : public std::runtime_error {
public:
    explicit ResourceGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace greenmesh

#endif
