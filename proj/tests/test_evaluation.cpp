#include <doctest.h>

#include <algorithm>

#include "../src/errors.hpp"
#include "../src/evaluation.hpp"
#include "../src/rng.hpp"
#include "helpers.hpp"

using namespace greenmesh;

TEST_CASE("failure_rate is the exact unserved-pair ratio") {
    SUBCASE("fully served") {
        AssociationMatrix m{{0, 1, 0}, {1, 1, 0}};
        auto fr = failure_rate(m, 3, 2);
        CHECK(fr.num == 0);
        CHECK(fr.den == 6);
    }
    SUBCASE("nobody served") {
        AssociationMatrix m{{-1, -1}, {-1, -1}};
        auto fr = failure_rate(m, 2, 2);
        CHECK(fr.num == 4);
        CHECK(fr.den == 4);
    }
    SUBCASE("two unserved of eight") {
        AssociationMatrix m{{0, -1, 0, 0}, {0, 0, -1, 0}};
        auto fr = failure_rate(m, 4, 2);
        CHECK(fr.num == 2);
        CHECK(fr.den == 8);
        CHECK(static_cast<double>(fr.num) / fr.den == 0.25);
    }
    SUBCASE("empty domains are errors") {
        CHECK_THROWS_AS(failure_rate({}, 0, 1), DimensionError);
        CHECK_THROWS_AS(failure_rate({}, 1, 0), DimensionError);
    }
}

TEST_CASE("objective counts placed nodes once") {
    Placement p(36);
    CHECK(objective(p) == 0);
    std::fill(p.placed.begin(), p.placed.end(), 1);
    std::fill(p.gateway_flags.begin(), p.gateway_flags.end(), 1);
    CHECK(objective(p) == 36);
    Placement q(36);
    q.placed[1] = q.placed[4] = q.placed[9] = 1;
    CHECK(objective(q) == 3);
}

TEST_CASE("evaluate on the default scenario") {
    GeneratorConfig cfg;
    Scenario sc = generate_scenario(cfg, 42);
    EnergyParams params = gmtest::easy_energy();

    SUBCASE("full placement is feasible with zero failures") {
        Placement full(sc.num_candidates());
        std::fill(full.placed.begin(), full.placed.end(), 1);
        FeasibilityReport rep = evaluate(sc, full, params, AssocPolicy::NearestCell);
        CHECK(rep.node_count == 36);
        CHECK(rep.fr_num == 0);
        CHECK(rep.sustainable);
        CHECK(rep.feasible);
    }
    SUBCASE("empty placement fails every client-slot pair") {
        Placement empty(sc.num_candidates());
        FeasibilityReport rep = evaluate(sc, empty, params, AssocPolicy::NearestCell);
        CHECK(rep.node_count == 0);
        CHECK(rep.failure_rate() == 1.0);
        CHECK(!rep.feasible);
    }
    SUBCASE("single node with tiny radius covers nobody") {
        Scenario tiny = sc;
        tiny.coverage_radius = 1e-6;
        Placement one(sc.num_candidates());
        one.placed[0] = 1;
        FeasibilityReport rep = evaluate(tiny, one, params, AssocPolicy::NearestCell);
        CHECK(rep.failure_rate() == 1.0);
    }
}

TEST_CASE("evaluate is deterministic") {
    Scenario sc = gmtest::random_scenario(3, 3, 15, 9);
    Placement p(9);
    p.placed[0] = p.placed[4] = p.placed[8] = 1;
    FeasibilityReport a = evaluate(sc, p, gmtest::easy_energy(), AssocPolicy::NearestCell);
    FeasibilityReport b = evaluate(sc, p, gmtest::easy_energy(), AssocPolicy::NearestCell);
    CHECK(a.fr_num == b.fr_num);
    CHECK(a.charge_trace == b.charge_trace);
    CHECK(a.per_slot_fr == b.per_slot_fr);
}

TEST_CASE("depleting batteries raise the failure rate") {
    Scenario sc = gmtest::toy_scenario();
    EnergyParams drain;
    drain.capacity = 10.0;
    drain.charge_rate = 0.0;
    drain.discharge_rate_base = 5.0; // dead after two slots of four
    Placement p(4);
    p.placed[0] = p.placed[3] = 1;
    FeasibilityReport rep = evaluate(sc, p, drain, AssocPolicy::NearestCell);
    CHECK(rep.fr_num == 2 * sc.num_clients()); // slots 2 and 3 unserved
    CHECK(!rep.sustainable);
    CHECK(!rep.feasible);
}

TEST_CASE("gateway flags trip on served demand above the threshold") {
    Scenario sc = gmtest::toy_scenario();
    sc.gateway_demand_threshold = 3.5; // four clients at demand 1 each
    Placement p(4);
    p.placed[0] = p.placed[3] = 1;
    FeasibilityReport rep = evaluate(sc, p, gmtest::easy_energy(), AssocPolicy::NearestCell);
    REQUIRE(rep.gateway_flags.size() == 2);
    CHECK(rep.gateway_flags[0] == 1);
    CHECK(rep.gateway_flags[1] == 1);

    sc.gateway_demand_threshold = 100.0;
    rep = evaluate(sc, p, gmtest::easy_energy(), AssocPolicy::NearestCell);
    CHECK(rep.gateway_flags == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("fitness equals node count exactly when feasible") {
    Scenario sc = gmtest::toy_scenario();
    Placement p(4);
    p.placed[0] = p.placed[3] = 1;
    FeasibilityReport rep = evaluate(sc, p, gmtest::easy_energy(), AssocPolicy::NearestCell);
    REQUIRE(rep.feasible);
    CHECK(fitness(rep, 40.0).value == 2.0);
}

TEST_CASE("fitness penalty arithmetic") {
    FeasibilityReport rep;
    rep.node_count = 5;
    rep.fr_num = 3;
    rep.fr_den = 20; // FR 0.15
    rep.failure_threshold = 0.05;
    rep.sustainable = true;
    rep.feasible = false;
    CHECK(fitness(rep, 360.0).value == doctest::Approx(5.0 + 360.0 * 0.1));
    CHECK_THROWS_AS(fitness(rep, 0.0), ConfigError);
}

TEST_CASE("feasible reports score strictly below infeasible ones") {
    // Dominance regime: lambda >= |S| * |V| * |T_s| and FR excess at least one
    // client-slot pair.
    const double lambda = 4.0 * 8 * 4;
    Scenario sc = gmtest::toy_scenario();
    EnergyParams params = gmtest::easy_energy();
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        Placement a = gmtest::placement_from_mask(
            static_cast<std::uint32_t>(rng.index(16)), 4);
        Placement b = gmtest::placement_from_mask(
            static_cast<std::uint32_t>(rng.index(16)), 4);
        FeasibilityReport ra = evaluate(sc, a, params, AssocPolicy::NearestCell);
        FeasibilityReport rb = evaluate(sc, b, params, AssocPolicy::NearestCell);
        if (ra.feasible && !rb.feasible)
            CHECK(fitness(ra, lambda).value < fitness(rb, lambda).value);
        if (rb.feasible && !ra.feasible)
            CHECK(fitness(rb, lambda).value < fitness(ra, lambda).value);
    }
}

TEST_CASE("failure rate is monotone under placement growth") {
    Scenario sc = gmtest::random_scenario(3, 3, 20, 13);
    EnergyParams params = gmtest::easy_energy(); // flat discharge
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t small = static_cast<std::uint32_t>(rng.index(512));
        const std::uint32_t extra = static_cast<std::uint32_t>(rng.index(512));
        Placement p = gmtest::placement_from_mask(small, 9);
        Placement q = gmtest::placement_from_mask(small | extra, 9);
        FeasibilityReport rp = evaluate(sc, p, params, AssocPolicy::NearestCell);
        FeasibilityReport rq = evaluate(sc, q, params, AssocPolicy::NearestCell);
        CHECK(rq.fr_num <= rp.fr_num);
    }
}

TEST_CASE("gateway threshold resolves to the served-demand percentile") {
    Scenario sc = gmtest::random_scenario(3, 3, 20, 21);
    const double th =
        resolve_gateway_threshold(sc, gmtest::easy_energy(), AssocPolicy::NearestCell);
    CHECK(th >= 0.0);
    // The percentile must be one of the observed served-demand values.
    Placement full(9);
    std::fill(full.placed.begin(), full.placed.end(), 1);
    Scenario ref = sc;
    ref.gateway_demand_threshold = 1e18;
    FeasibilityReport rep = evaluate(ref, full, gmtest::easy_energy(), AssocPolicy::NearestCell);
    bool found = false;
    for (const auto& trace : rep.served_trace)
        for (double v : trace)
            if (v == th) found = true;
    CHECK(found);
}
