#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"
#include "rng.hpp"

namespace greenmesh {

using nlohmann::json;

bool Scenario::is_daylight(int slot) const {
    return std::find(daylight_slots.begin(), daylight_slots.end(), slot) !=
           daylight_slots.end();
}

void Scenario::validate() const {
    if (field_width <= 0.0 || field_height <= 0.0)
        throw ValidationError("field_width/field_height must be positive");
    if (grid_rows <= 0 || grid_cols <= 0)
        throw ValidationError("grid_rows/grid_cols must be positive");
    if (grid_rows * grid_cols != num_candidates())
        throw ValidationError("candidate_locations: size must equal grid_rows * grid_cols");
    for (int j = 0; j < num_candidates(); ++j) {
        const auto& c = candidate_locations[j];
        if (c.index != j)
            throw ValidationError("candidate_locations: indices must be contiguous from 0");
        if (c.x < 0.0 || c.x > field_width || c.y < 0.0 || c.y > field_height)
            throw ValidationError("candidate_locations: position outside field bounds");
    }
    if (clients.empty())
        throw ValidationError("clients: at least one client required");
    if (num_slots < 1)
        throw ValidationError("num_slots must be >= 1");
    for (const auto& cl : clients) {
        if (cl.x < 0.0 || cl.x > field_width || cl.y < 0.0 || cl.y > field_height)
            throw ValidationError("clients: position outside field bounds");
        if (static_cast<int>(cl.demand.size()) != num_slots)
            throw ValidationError("clients: demand length must equal num_slots");
        for (double d : cl.demand)
            if (d < 0.0 || !std::isfinite(d))
                throw ValidationError("clients: demand values must be nonnegative");
    }
    for (int s : daylight_slots)
        if (s < 0 || s >= num_slots)
            throw ValidationError("daylight_slots: slot index out of range");
    if (coverage_radius <= 0.0)
        throw ValidationError("coverage_radius must be positive");
    if (failure_threshold < 0.0 || failure_threshold > 1.0)
        throw ValidationError("failure_threshold must be in [0, 1]");
}

static std::vector<int> default_daylight(int num_slots) {
    // Slots 6..17 of a 24-slot day; scale the window for other horizons.
    std::vector<int> out;
    int lo = num_slots * 6 / 24;
    int hi = num_slots * 18 / 24;
    if (hi <= lo) hi = std::min(lo + 1, num_slots);
    for (int s = lo; s < hi; ++s) out.push_back(s);
    return out;
}

Scenario generate_scenario(const GeneratorConfig& config, std::uint64_t seed) {
    if (config.field_width <= 0.0 || config.field_height <= 0.0)
        throw ConfigError("field dimensions must be positive");
    if (config.grid_rows <= 0 || config.grid_cols <= 0)
        throw ConfigError("grid dimensions must be positive");
    if (config.num_clients < 1)
        throw ConfigError("num_clients must be >= 1");
    if (config.num_slots < 1)
        throw ConfigError("num_slots must be >= 1");
    if (config.demand_high < 0.0)
        throw ConfigError("demand_high must be nonnegative");

    Scenario sc;
    sc.field_width = config.field_width;
    sc.field_height = config.field_height;
    sc.grid_rows = config.grid_rows;
    sc.grid_cols = config.grid_cols;
    sc.num_slots = config.num_slots;
    sc.failure_threshold = config.failure_threshold;
    sc.gateway_demand_threshold = config.gateway_demand_threshold;
    sc.daylight_slots = config.daylight_slots.empty()
                            ? default_daylight(config.num_slots)
                            : config.daylight_slots;

    const double cell_w = config.field_width / config.grid_cols;
    const double cell_h = config.field_height / config.grid_rows;
    sc.coverage_radius = config.coverage_radius > 0.0
                             ? config.coverage_radius
                             : std::hypot(cell_w, cell_h);

    int j = 0;
    for (int r = 0; r < config.grid_rows; ++r)
        for (int c = 0; c < config.grid_cols; ++c)
            sc.candidate_locations.push_back(
                {j++, (c + 0.5) * cell_w, (r + 0.5) * cell_h});

    Rng rng(seed);
    std::set<int> day(sc.daylight_slots.begin(), sc.daylight_slots.end());
    for (int i = 0; i < config.num_clients; ++i) {
        Client cl;
        cl.id = i;
        cl.x = rng.uniform() * config.field_width;
        cl.y = rng.uniform() * config.field_height;
        cl.demand.resize(config.num_slots);
        for (int l = 0; l < config.num_slots; ++l)
            cl.demand[l] = day.count(l) ? config.demand_high
                                        : 0.2 * config.demand_high;
        sc.clients.push_back(std::move(cl));
    }

    sc.validate();
    return sc;
}

std::string scenario_to_json(const Scenario& sc) {
    json doc;
    doc["field_width"] = sc.field_width;
    doc["field_height"] = sc.field_height;
    doc["grid_rows"] = sc.grid_rows;
    doc["grid_cols"] = sc.grid_cols;
    json cands = json::array();
    for (const auto& c : sc.candidate_locations)
        cands.push_back(json::array({c.x, c.y}));
    doc["candidate_locations"] = cands;
    json clients = json::array();
    for (const auto& cl : sc.clients) {
        json jc;
        jc["id"] = cl.id;
        jc["position"] = json::array({cl.x, cl.y});
        jc["demand"] = cl.demand;
        clients.push_back(jc);
    }
    doc["clients"] = clients;
    doc["num_slots"] = sc.num_slots;
    doc["daylight_slots"] = sc.daylight_slots;
    doc["coverage_radius"] = sc.coverage_radius;
    doc["failure_threshold"] = sc.failure_threshold;
    doc["gateway_demand_threshold"] = sc.gateway_demand_threshold;
    return doc.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("scenario parse error: ") + e.what());
    }
    Scenario sc;
    try {
        doc.at("field_width").get_to(sc.field_width);
        doc.at("field_height").get_to(sc.field_height);
        doc.at("grid_rows").get_to(sc.grid_rows);
        doc.at("grid_cols").get_to(sc.grid_cols);
        int j = 0;
        for (const auto& jc : doc.at("candidate_locations"))
            sc.candidate_locations.push_back(
                {j++, jc.at(0).get<double>(), jc.at(1).get<double>()});
        for (const auto& jc : doc.at("clients")) {
            Client cl;
            cl.id = jc.at("id").get<int>();
            cl.x = jc.at("position").at(0).get<double>();
            cl.y = jc.at("position").at(1).get<double>();
            jc.at("demand").get_to(cl.demand);
            sc.clients.push_back(std::move(cl));
        }
        doc.at("num_slots").get_to(sc.num_slots);
        doc.at("daylight_slots").get_to(sc.daylight_slots);
        doc.at("coverage_radius").get_to(sc.coverage_radius);
        doc.at("failure_threshold").get_to(sc.failure_threshold);
        if (doc.contains("gateway_demand_threshold"))
            doc.at("gateway_demand_threshold").get_to(sc.gateway_demand_threshold);
    } catch (const json::exception& e) {
        throw FormatError(std::string("scenario field error: ") + e.what());
    }
    sc.validate();
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return scenario_from_json(ss.str());
}

void save_scenario(const Scenario& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write scenario file: " + path);
    out << scenario_to_json(sc) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

std::vector<int> clients_in_range(const Scenario& sc, int j) {
    if (j < 0 || j >= sc.num_candidates())
        throw DimensionError("clients_in_range: candidate index out of range");
    const auto& c = sc.candidate_locations[j];
    const double r2 = sc.coverage_radius * sc.coverage_radius;
    std::vector<int> out;
    for (const auto& cl : sc.clients) {
        const double dx = cl.x - c.x, dy = cl.y - c.y;
        if (dx * dx + dy * dy <= r2) out.push_back(cl.id);
    }
    return out;
}

} // namespace greenmesh
