#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "legprod/feasibility.hpp"
#include "legprod/fixtures.hpp"

namespace legprod {

struct SearchReport {
    std::optional<long long> min_found;
    std::optional<long long> max_found;
    std::map<long long, Assignment> witnesses;  // one verified action assignment per tb value
    std::set<long long> values_seen;
    int draws = 0;        // cells drawn, including inconsistent ones
    int evaluations = 0;  // triple_tb evaluations that produced a value

    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

using FixtureTriple = std::array<KnotFixture, 3>;

// Union of the three fixtures' constraint systems.
LinearSystem fixture_system(const FixtureTriple& fixtures);

// tb of the triple product for one action assignment covering all three fixtures' chords.
// nullopt when the assignment is degenerate (hits a triangle hyperplane).
std::optional<long long> evaluate_triple(const FixtureTriple& fixtures, const Assignment& actions);

// Explores tb over cells of the triangle-hyperplane arrangement intersected with sys.
// Deterministic in (budget, seed). Throws InfeasibleBase if sys has no solution.
SearchReport tb_range_search(const FixtureTriple& fixtures, const LinearSystem& sys, int budget, std::uint64_t seed);

}  // namespace legprod
