// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "generators.hpp"
#include "legprod/diagram.hpp"
#include "legprod/errors.hpp"
#include "legprod/explore.hpp"
#include "legprod/feasibility.hpp"
#include "legprod/fixtures.hpp"
#include "legprod/model.hpp"
#include "legprod/product.hpp"
#include "legprod/triple.hpp"

#ifndef LEGPROD_FIXTURE_DIR
#error "LEGPROD_FIXTURE_DIR must be defined"
#endif

namespace {

using namespace legprod;
using legprod::testing::Rng;

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome check(bool ok, std::string detail) { return {ok, std::move(detail)}; }

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(LEGPROD_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome whitney_1x2() {
    long long lo = product_tb(whitney(1, 1), whitney(2, 2));
    long long hi = product_tb(whitney(1, 2), whitney(2, 1));
    return check(lo == 2 && hi == 0, "a<b: " + std::to_string(lo) + ", a>b: " + std::to_string(hi));
}

Outcome whitney_1x4() {
    // Only one sign of the top-dimensional Whitney chord reproduces (-2, 0).
    std::vector<int> fitting;
    for (Sign s : {Sign::Negative, Sign::Positive}) {
        long long lo = product_tb(whitney(1, 1), whitney(4, 2, s));
        long long hi = product_tb(whitney(1, 2), whitney(4, 1, s));
        if (lo == -2 && hi == 0) fitting.push_back(value(s));
    }
    long long lo = product_tb(whitney(1, 1), whitney(4, 2));
    long long hi = product_tb(whitney(1, 2), whitney(4, 1));
    bool derived = fitting == std::vector<int>{-1} && whitney(4, 1).chords.at(0).sign == Sign::Negative;
    return check(derived && lo == -2 && hi == 0,
                 "a<b: " + std::to_string(lo) + ", a>b: " + std::to_string(hi) +
                     ", fitting W4 signs: " + std::to_string(fitting.size()) + (derived ? " (-1)" : ""));
}

Outcome torus() {
    auto p = perturb_product(whitney(1, 1), whitney(1, 2));
    std::multiset<Rational> actions;
    long long sum = 0;
    for (const auto& c : p.chords) {
        actions.insert(c.action);
        sum += value(c.sign);
    }
    std::multiset<Rational> expected{1, 1, 2, 2, 1, 3};
    return check(p.chords.size() == 6 && actions == expected && sum == 0,
                 std::to_string(p.chords.size()) + " chords, sign sum " + std::to_string(sum));
}

Outcome triple_whitney() {
    auto a1 = triple_vs_iterated(whitney(1, 3), whitney(1, 4), whitney(1, 5));
    auto a2 = triple_vs_iterated(whitney(1, 1), whitney(1, 2), whitney(1, 5));
    return check(a1.closed_form == 2 && a2.closed_form == 0,
                 "(3,4,5): " + std::to_string(a1.closed_form) + " (iterated " + std::to_string(a1.iterated) +
                     "), (1,2,5): " + std::to_string(a2.closed_form) + " (iterated " + std::to_string(a2.iterated) + ")");
}

long long fixture_triple(int a, int bp, int bm, int cp, int cm) {
    auto [k1, s1] = knot_fixture(KnotFixture::StabilizedUnknot, {{"a1", a}, {"a2", a}});
    auto [k2, s2] = knot_fixture(KnotFixture::R1Unknot, {{"b1", bp}, {"b2", bp}, {"b3", bm}});
    auto [k3, s3] = knot_fixture(KnotFixture::Trefoil,
                                 {{"c1", cp}, {"c2", cp}, {"c3", cm}, {"c4", cm}, {"c5", cm}});
    return triple_tb(k1, k2, k3);
}

Outcome fixture_endpoints() {
    long long lo = fixture_triple(5, 10, 3, 10, 3);
    long long hi = fixture_triple(5, 6, 2, 12, 2);
    return check(lo == -28 && hi == 24, "min instance " + std::to_string(lo) + ", max instance " + std::to_string(hi));
}

Outcome formula_vs_enumeration() {
    Rng rng(20260601);
    int trials = 1200, mismatches = 0;
    for (int t = 0; t < trials; ++t) {
        testing::ModelShape sk{testing::uniform(rng, 1, 4), 6, testing::uniform(rng, 0, 1) == 1};
        testing::ModelShape sl{testing::uniform(rng, 1, 4), 6, testing::uniform(rng, 0, 1) == 1};
        auto K = testing::random_model(rng, sk, {}, "a");
        auto L = testing::random_model(rng, sl, testing::actions_of(K), "b");
        if (product_tb(K, L) != chord_sum_tb(perturb_product(K, L).model)) ++mismatches;
    }
    return check(mismatches == 0, std::to_string(trials) + " pairs, " + std::to_string(mismatches) + " mismatches");
}

Outcome parity() {
    Rng rng(7);
    int odd_bad = 0, even_bad = 0, n = 500;
    for (int t = 0; t < n; ++t) {
        auto K = testing::random_model(rng, {2 * testing::uniform(rng, 0, 1) + 1, 6, false}, {}, "a");
        auto L = testing::random_model(rng, {2 * testing::uniform(rng, 0, 1) + 1, 6, false}, testing::actions_of(K), "b");
        if (product_tb(K, L) != 0) ++odd_bad;
    }
    for (int t = 0; t < n; ++t) {
        auto K = testing::random_model(rng, {2 * testing::uniform(rng, 1, 2), 6, true}, {}, "a");
        auto L = testing::random_model(rng, {2 * testing::uniform(rng, 1, 2), 6, true}, testing::actions_of(K), "b");
        long long expected = -(K.cotangent_euler * L.cotangent_euler) / 2;
        if (product_tb(K, L) != expected) ++even_bad;
    }
    return check(odd_bad == 0 && even_bad == 0, "odd x odd failures " + std::to_string(odd_bad) +
                                                    ", even x even failures " + std::to_string(even_bad));
}

Outcome triple_agreement() {
    Rng rng(99);
    int agreed = 0, target = 200;
    while (agreed < target) {
        auto K1 = testing::random_knot(rng, {}, "a");
        auto K2 = testing::random_knot(rng, testing::actions_of(K1), "b");
        auto taken = testing::actions_of(K1);
        taken.merge(testing::actions_of(K2));
        auto K3 = testing::random_knot(rng, taken, "c");
        TripleAudit audit;
        try {
            audit = triple_vs_iterated(K1, K2, K3);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::DegenerateTriple) continue;
            throw;
        }
        if (!audit.agree)
            return check(false, "disagreement after " + std::to_string(agreed) + " triples: closed " +
                                    std::to_string(audit.closed_form) + " vs iterated " +
                                    std::to_string(audit.iterated));
        ++agreed;
    }
    return check(true, std::to_string(agreed) + " generic triples agree");
}

Outcome infinite_family() {
    auto values = infinite_family_tb(whitney(1, 1), whitney(2, 2), "w", 10, 3, Rational(3, 2), Sign::Positive);
    std::set<long long> distinct(values.begin(), values.end());
    bool ap = values.size() == 11;
    long long step = ap ? values[1] - values[0] : 0;
    for (std::size_t i = 1; ap && i < values.size(); ++i) ap = values[i] - values[i - 1] == step;
    std::string listing;
    for (auto v : values) listing += (listing.empty() ? "" : ",") + std::to_string(v);
    return check(ap && distinct.size() == 11 && (step == 2 || step == -2), "[" + listing + "]");
}

// a implies b: a together with the negation of any constraint of b is infeasible.
int implication_failures(const LinearSystem& a, const LinearSystem& b, std::vector<std::string>& witnesses) {
    int failures = 0;
    for (const auto& c : b.constraints) {
        LinearSystem test = a;
        test.add(negate(c));
        if (is_feasible(test)) {
            ++failures;
            witnesses.push_back(describe(c));
        }
    }
    return failures;
}

Outcome diagram_fixtures() {
    auto su = parse_pd(read_fixture("stabilized_unknot.pd"));
    auto r1 = parse_pd(read_fixture("r1_unknot.pd"));
    auto tr = parse_pd(read_fixture("trefoil.pd"));
    std::vector<long long> tbs{diagram_tb(su), diagram_tb(r1), diagram_tb(tr)};
    bool tb_ok = tbs == std::vector<long long>{-2, -1, 1};
    auto tr_faces = faces(tr);
    // Euler formula: a connected 4-valent plane graph with V crossings has 2V edges and V + 2 faces.
    bool faces_ok = tr_faces.size() == 7 && tr_faces.size() == tr.size() + 2;

    std::ostringstream detail;
    detail << "tb " << tbs[0] << "," << tbs[1] << "," << tbs[2] << "; trefoil faces " << tr_faces.size();
    bool equiv_ok = true;
    for (auto [pd, fixture, prefix] : {std::tuple{r1, KnotFixture::R1Unknot, "b"},
                                       std::tuple{tr, KnotFixture::Trefoil, "c"}}) {
        auto derived = area_constraints(pd, prefix);
        auto reference = fixture_constraints(fixture);
        std::vector<std::string> fwd, bwd;
        int f = implication_failures(derived, reference, fwd);
        int b = implication_failures(reference, derived, bwd);
        detail << "; " << fixture_name(fixture) << ": diagram=>reference fails " << f << ", reference=>diagram fails " << b;
        for (const auto& w : bwd) detail << " [" << w << "]";
        equiv_ok = equiv_ok && f == 0 && b == 0;
    }
    return check(tb_ok && faces_ok && equiv_ok, detail.str());
}

// Grid oracle on the box [-4, 4]^k with step 1/2, evaluated in integers (coordinates doubled).
struct GridSystem {
    int vars = 0;
    std::vector<std::vector<int>> coeffs;
    std::vector<Relation> rels;
    std::vector<int> rhs;
};

bool grid_witness(const GridSystem& g) {
    std::vector<int> k(g.vars, -8);
    while (true) {
        bool ok = true;
        for (std::size_t c = 0; ok && c < g.coeffs.size(); ++c) {
            long long lhs = 0;
            for (int v = 0; v < g.vars; ++v) lhs += static_cast<long long>(g.coeffs[c][v]) * k[v];
            long long r = 2LL * g.rhs[c];
            ok = g.rels[c] == Relation::Greater ? lhs > r : g.rels[c] == Relation::GreaterEqual ? lhs >= r : lhs == r;
        }
        if (ok) return true;
        int v = 0;
        while (v < g.vars && ++k[v] > 8) k[v++] = -8;
        if (v == g.vars) return false;
    }
}

Outcome solver_oracle() {
    Rng rng(424242);
    int systems = 250, disagreements = 0, bad_witnesses = 0, grid_feasible = 0;
    for (int s = 0; s < systems; ++s) {
        GridSystem g;
        g.vars = testing::uniform(rng, 1, 4);
        LinearSystem sys;
        for (int v = 0; v < g.vars; ++v) sys.declare("v" + std::to_string(v));
        int rows = testing::uniform(rng, 1, 6);
        for (int r = 0; r < rows; ++r) {
            std::vector<int> co(g.vars);
            LinearConstraint c;
            for (int v = 0; v < g.vars; ++v) {
                co[v] = testing::uniform(rng, -3, 3);
                if (co[v] != 0) c.coefficients["v" + std::to_string(v)] = co[v];
            }
            if (c.coefficients.empty()) continue;
            int rel = testing::uniform(rng, 0, 9);
            c.relation = rel < 5 ? Relation::Greater : rel < 9 ? Relation::GreaterEqual : Relation::Equal;
            int rhs = testing::uniform(rng, -4, 4);
            c.rhs = rhs;
            g.coeffs.push_back(co);
            g.rels.push_back(c.relation);
            g.rhs.push_back(rhs);
            sys.add(c);
        }
        bool grid = grid_witness(g);
        bool feasible = is_feasible(sys);
        grid_feasible += grid;
        if (grid && !feasible) ++disagreements;
        auto point = sample_point(sys);
        if (point.has_value() != feasible) ++disagreements;
        if (point && !satisfies(sys, *point)) ++bad_witnesses;
    }
    return check(disagreements == 0 && bad_witnesses == 0,
                 std::to_string(systems) + " systems (" + std::to_string(grid_feasible) + " grid-feasible), " +
                     std::to_string(disagreements) + " disagreements, " + std::to_string(bad_witnesses) +
                     " invalid witnesses");
}

Outcome explorer() {
    FixtureTriple fx{KnotFixture::StabilizedUnknot, KnotFixture::R1Unknot, KnotFixture::Trefoil};
    auto sys = fixture_system(fx);
    auto report = tb_range_search(fx, sys, 10000, 20260101);
    // Re-verify every witness independently of the search.
    int verified_between = 0, bad = 0;
    for (const auto& [tb, point] : report.witnesses) {
        Assignment a1, a2, a3;
        for (const auto& [k, v] : point) (k[0] == 'a' ? a1 : k[0] == 'b' ? a2 : a3)[k] = v;
        long long again = triple_tb(knot_fixture(fx[0], a1).first, knot_fixture(fx[1], a2).first,
                                    knot_fixture(fx[2], a3).first);
        if (again != tb || !satisfies(sys, point)) {
            ++bad;
            continue;
        }
        if (tb > -28 && tb < 24) ++verified_between;
    }
    bool ok = bad == 0 && report.min_found && report.max_found && *report.min_found <= -28 &&
              *report.max_found >= 24 && verified_between >= 5;
    std::ostringstream d;
    d << "min " << (report.min_found ? std::to_string(*report.min_found) : "none") << ", max "
      << (report.max_found ? std::to_string(*report.max_found) : "none") << ", " << verified_between
      << " verified intermediate values, " << report.values_seen.size() << " distinct, " << bad
      << " unverified witnesses, " << report.draws << " draws";
    return check(ok, d.str());
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"whitney 1x2 product", whitney_1x2},
        {"whitney 1x4 product and derived W4 sign", whitney_1x4},
        {"torus chord enumeration", torus},
        {"triple whitney dichotomy", triple_whitney},
        {"knot fixture triple endpoints", fixture_endpoints},
        {"formula vs enumeration", formula_vs_enumeration},
        {"parity properties", parity},
        {"triple vs iterated", triple_agreement},
        {"infinite family progression", infinite_family},
        {"diagram fixtures", diagram_fixtures},
        {"solver grid oracle", solver_oracle},
        {"explorer range", explorer},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, fn] = criteria[i];
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << name << " (" << o.detail << ") ["
                  << std::fixed << std::setprecision(2) << secs << "s]\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
