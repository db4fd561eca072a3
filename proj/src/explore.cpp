#include "legprod/explore.hpp"

#include <algorithm>
#include <random>

#include "legprod/errors.hpp"
#include "legprod/triple.hpp"

namespace legprod {

namespace {

std::vector<std::string> labels_of(KnotFixture f) {
    std::vector<std::string> out;
    for (const auto& [label, sign] : fixture_chords(f)) out.push_back(label);
    return out;
}

// Action assignments exhibiting the extreme values for the (stabilized unknot, R1 unknot, trefoil) triple.
std::vector<Assignment> pinned_instances(const FixtureTriple& fixtures) {
    if (fixtures != FixtureTriple{KnotFixture::StabilizedUnknot, KnotFixture::R1Unknot, KnotFixture::Trefoil}) return {};
    auto make = [](int a, int bp, int bm, int cp, int cm) {
        return Assignment{{"a1", a},  {"a2", a},  {"b1", bp}, {"b2", bp}, {"b3", bm},
                          {"c1", cp}, {"c2", cp}, {"c3", cm}, {"c4", cm}, {"c5", cm}};
    };
    return {make(5, 10, 3, 10, 3), make(5, 6, 2, 12, 2)};
}

struct Hyperplane {
    std::string x, y, z;  // form x + y - z
};

LinearConstraint oriented(const Hyperplane& h, bool above) {
    LinearConstraint c;
    Rational s(above ? 1 : -1);
    c.coefficients[h.x] += s;
    c.coefficients[h.y] += s;
    c.coefficients[h.z] -= s;
    c.relation = Relation::Greater;
    return c;
}

Rational form_value(const Hyperplane& h, const Assignment& p) { return p.at(h.x) + p.at(h.y) - p.at(h.z); }

void record(SearchReport& report, long long tb, const Assignment& point) {
    ++report.evaluations;
    report.values_seen.insert(tb);
    report.witnesses.try_emplace(tb, point);
    if (!report.min_found || tb < *report.min_found) report.min_found = tb;
    if (!report.max_found || tb > *report.max_found) report.max_found = tb;
}

}  // namespace

LinearSystem fixture_system(const FixtureTriple& fixtures) {
    LinearSystem sys;
    for (auto f : fixtures) sys = merge(sys, fixture_constraints(f));
    return sys;
}

std::optional<long long> evaluate_triple(const FixtureTriple& fixtures, const Assignment& actions) {
    std::array<LegendrianModel, 3> models;
    for (int i = 0; i < 3; ++i) {
        Assignment part;
        for (const auto& label : labels_of(fixtures[i])) {
            auto it = actions.find(label);
            if (it == actions.end()) throw Error(ErrorKind::UnknownChord, "missing action for '" + label + "'");
            part.emplace(label, it->second);
        }
        models[i] = knot_fixture(fixtures[i], part).first;
    }
    try {
        return triple_tb(models[0], models[1], models[2]);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DegenerateTriple) return std::nullopt;
        throw;
    }
}

SearchReport tb_range_search(const FixtureTriple& fixtures, const LinearSystem& sys, int budget, std::uint64_t seed) {
    if (budget < 1) throw Error(ErrorKind::InvalidModel, "budget must be positive");
    if (!is_feasible(sys)) throw Error(ErrorKind::InfeasibleBase, "the base constraint system has no solution");

    SearchReport report;
    for (const auto& point : pinned_instances(fixtures)) {
        if (report.draws >= budget) break;
        ++report.draws;
        if (!satisfies(sys, point)) continue;
        if (auto tb = evaluate_triple(fixtures, point)) record(report, *tb, point);
    }

    std::vector<Hyperplane> planes;
    for (const auto& a : labels_of(fixtures[0])) {
        for (const auto& b : labels_of(fixtures[1])) {
            for (const auto& c : labels_of(fixtures[2])) {
                planes.push_back({a, b, c});
                planes.push_back({a, c, b});
                planes.push_back({b, c, a});
            }
        }
    }
    const int max_subset = std::min<int>(6, static_cast<int>(planes.size()));

    for (int cell = 0; report.draws < budget; ++cell) {
        ++report.draws;
        // Each cell gets its own stream so draws do not depend on earlier outcomes.
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(cell)};
        std::mt19937_64 rng(seq);

        LinearSystem cell_sys = sys;
        std::vector<std::size_t> order(planes.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        int k = std::uniform_int_distribution<int>(1, max_subset)(rng);
        std::bernoulli_distribution coin(0.5);
        for (int i = 0; i < k; ++i) cell_sys.add(oriented(planes[order[i]], coin(rng)));

        // A witness on a hyperplane is degenerate; refine the cell through that hyperplane and resample.
        while (true) {
            auto point = sample_point(cell_sys);
            if (!point) break;
            auto hit = std::find_if(planes.begin(), planes.end(),
                                    [&](const Hyperplane& h) { return form_value(h, *point).is_zero(); });
            if (hit == planes.end()) {
                auto tb = evaluate_triple(fixtures, *point);
                if (tb) record(report, *tb, *point);
                break;
            }
            cell_sys.add(oriented(*hit, coin(rng)));
        }
    }
    return report;
}

}  // namespace legprod
