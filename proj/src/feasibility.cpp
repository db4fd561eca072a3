#include "legprod/feasibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "legprod/errors.hpp"

namespace legprod {

std::string relation_symbol(Relation rel) {
    switch (rel) {
        case Relation::Greater: return ">";
        case Relation::GreaterEqual: return ">=";
        case Relation::Equal: return "=";
    }
    return "?";
}

Relation parse_relation(const std::string& text) {
    if (text == ">") return Relation::Greater;
    if (text == ">=" || text == "≥") return Relation::GreaterEqual;
    if (text == "=" || text == "==") return Relation::Equal;
    throw Error(ErrorKind::ParseError, "unknown relation '" + text + "'");
}

bool LinearConstraint::holds(const Assignment& point) const {
    Rational lhs;
    for (const auto& [var, coef] : coefficients) {
        auto it = point.find(var);
        if (it == point.end()) throw Error(ErrorKind::UnknownVariable, "no value for '" + var + "'");
        lhs += coef * it->second;
    }
    switch (relation) {
        case Relation::Greater: return lhs > rhs;
        case Relation::GreaterEqual: return lhs >= rhs;
        case Relation::Equal: return lhs == rhs;
    }
    return false;
}

bool LinearSystem::declares(const std::string& var) const {
    return std::find(variables.begin(), variables.end(), var) != variables.end();
}

void LinearSystem::declare(const std::string& var) {
    if (!declares(var)) variables.push_back(var);
}

void LinearSystem::add(LinearConstraint c) {
    for (const auto& [var, coef] : c.coefficients) declare(var);
    constraints.push_back(std::move(c));
}

LinearConstraint greater_than(const std::string& lhs, const std::string& rhs) {
    return {{{lhs, Rational(1)}, {rhs, Rational(-1)}}, Relation::Greater, Rational(0)};
}

LinearConstraint positive(const std::string& var) { return {{{var, Rational(1)}}, Relation::Greater, Rational(0)}; }

LinearConstraint negate(const LinearConstraint& c) {
    if (c.relation == Relation::Equal) throw std::invalid_argument("cannot negate an equality as one constraint");
    LinearConstraint out;
    for (const auto& [var, coef] : c.coefficients) out.coefficients[var] = -coef;
    out.rhs = -c.rhs;
    out.relation = c.relation == Relation::Greater ? Relation::GreaterEqual : Relation::Greater;
    return out;
}

LinearSystem merge(const LinearSystem& a, const LinearSystem& b) {
    LinearSystem out = a;
    for (const auto& v : b.variables) out.declare(v);
    for (const auto& c : b.constraints) out.add(c);
    return out;
}

namespace {

// a . x + c0 > 0 (strict) or >= 0.
struct Row {
    std::vector<Rational> a;
    Rational c0;
    bool strict = true;
};

struct Indexed {
    std::vector<std::string> names;  // index -> name
    std::vector<Row> rows;
};

class RowSet {
public:
    explicit RowSet(std::size_t width) : width_(width) {}

    // Normalizes the leading coefficient to +-1 and keeps only the tightest row per direction.
    void insert(Row row) {
        auto lead = std::find_if(row.a.begin(), row.a.end(), [](const Rational& r) { return !r.is_zero(); });
        if (lead == row.a.end()) {
            bool ok = row.strict ? row.c0.sign() > 0 : row.c0.sign() >= 0;
            if (!ok) contradiction_ = true;
            return;
        }
        Rational scale = lead->abs();
        for (auto& x : row.a) x /= scale;
        row.c0 /= scale;
        auto [it, fresh] = best_.try_emplace(row.a, row);
        if (!fresh) {
            Row& cur = it->second;
            if (row.c0 < cur.c0 || (row.c0 == cur.c0 && row.strict && !cur.strict)) cur = std::move(row);
        }
    }

    bool contradiction() const { return contradiction_; }

    std::vector<Row> rows() const {
        std::vector<Row> out;
        out.reserve(best_.size() + (contradiction_ ? 1 : 0));
        if (contradiction_) out.push_back({std::vector<Rational>(width_), Rational(0), true});
        for (const auto& [key, row] : best_) out.push_back(row);
        return out;
    }

private:
    std::size_t width_;
    bool contradiction_ = false;
    std::map<std::vector<Rational>, Row> best_;
};

Indexed index_system(const LinearSystem& sys, bool sort_names) {
    Indexed out;
    out.names = sys.variables;
    for (const auto& c : sys.constraints) {
        for (const auto& [var, coef] : c.coefficients) {
            if (std::find(out.names.begin(), out.names.end(), var) == out.names.end()) {
                throw Error(ErrorKind::UnknownVariable, "constraint references undeclared '" + var + "'");
            }
        }
    }
    if (sort_names) std::sort(out.names.begin(), out.names.end());
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < out.names.size(); ++i) pos[out.names[i]] = i;

    auto emit = [&](const LinearConstraint& c, Rational sign, bool strict) {
        Row r{std::vector<Rational>(out.names.size()), -c.rhs * sign, strict};
        for (const auto& [var, coef] : c.coefficients) r.a[pos[var]] += coef * sign;
        out.rows.push_back(std::move(r));
    };
    for (const auto& c : sys.constraints) {
        switch (c.relation) {
            case Relation::Greater: emit(c, Rational(1), true); break;
            case Relation::GreaterEqual: emit(c, Rational(1), false); break;
            case Relation::Equal:
                emit(c, Rational(1), false);
                emit(c, Rational(-1), false);
                break;
        }
    }
    return out;
}

RowSet eliminate(const std::vector<Row>& rows, std::size_t var, std::size_t width) {
    RowSet out(width);
    std::vector<const Row*> lower, upper;
    for (const auto& r : rows) {
        int s = r.a[var].sign();
        if (s > 0) lower.push_back(&r);
        else if (s < 0) upper.push_back(&r);
        else out.insert(r);
    }
    for (const Row* lo : lower) {
        for (const Row* hi : upper) {
            // (-hi_k) * lo + lo_k * hi cancels var.
            Rational wl = -hi->a[var];
            const Rational& wh = lo->a[var];
            Row r{std::vector<Rational>(width), lo->c0 * wl + hi->c0 * wh, lo->strict || hi->strict};
            for (std::size_t j = 0; j < width; ++j) {
                if (j == var) continue;
                r.a[j] = lo->a[j] * wl + hi->a[j] * wh;
            }
            out.insert(std::move(r));
        }
    }
    return out;
}

std::vector<Row> normalized(const std::vector<Row>& rows, std::size_t width) {
    RowSet set(width);
    for (const auto& r : rows) set.insert(r);
    return set.rows();
}

bool any_contradiction(const std::vector<Row>& rows) {
    for (const auto& r : rows) {
        if (std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x.is_zero(); })) return true;
    }
    return false;
}

LinearConstraint to_constraint(const Row& r, const std::vector<std::string>& names) {
    LinearConstraint c;
    for (std::size_t j = 0; j < names.size(); ++j) {
        if (!r.a[j].is_zero()) c.coefficients[names[j]] = r.a[j];
    }
    c.relation = r.strict ? Relation::Greater : Relation::GreaterEqual;
    c.rhs = -r.c0;
    return c;
}

// stages[k] holds the rows after eliminating variables 0..k-1 (sorted-name order).
std::optional<std::vector<std::vector<Row>>> eliminate_all(const Indexed& sys) {
    std::size_t width = sys.names.size();
    std::vector<std::vector<Row>> stages;
    stages.push_back(normalized(sys.rows, width));
    if (any_contradiction(stages.back())) return std::nullopt;
    for (std::size_t v = 0; v < width; ++v) {
        RowSet next = eliminate(stages.back(), v, width);
        if (next.contradiction()) return std::nullopt;
        stages.push_back(next.rows());
    }
    return stages;
}

}  // namespace

LinearSystem fm_eliminate(const LinearSystem& sys, const std::string& var) {
    if (!sys.declares(var)) throw Error(ErrorKind::UnknownVariable, "'" + var + "' is not a variable of the system");
    Indexed idx = index_system(sys, false);
    std::size_t v = std::find(idx.names.begin(), idx.names.end(), var) - idx.names.begin();
    RowSet reduced = eliminate(idx.rows, v, idx.names.size());

    LinearSystem out;
    for (const auto& name : sys.variables) {
        if (name != var) out.variables.push_back(name);
    }
    for (const auto& r : reduced.rows()) out.constraints.push_back(to_constraint(r, idx.names));
    return out;
}

bool is_feasible(const LinearSystem& sys) {
    return eliminate_all(index_system(sys, true)).has_value();
}

std::optional<Assignment> sample_point(const LinearSystem& sys) {
    Indexed idx = index_system(sys, true);
    auto stages = eliminate_all(idx);
    if (!stages) return std::nullopt;

    std::size_t width = idx.names.size();
    std::vector<Rational> x(width);
    for (std::size_t k = width; k-- > 0;) {
        // A feasible stage never pins a variable through a strict bound, so strictness can be ignored here.
        std::optional<Rational> lo, hi;
        for (const auto& r : (*stages)[k]) {
            int s = r.a[k].sign();
            if (s == 0) continue;
            Rational rest = r.c0;
            for (std::size_t j = k + 1; j < width; ++j) rest += r.a[j] * x[j];
            Rational bound = -rest / r.a[k];
            if (s > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else if (!hi || bound < *hi) {
                hi = bound;
            }
        }
        if (lo && hi) x[k] = *lo == *hi ? *lo : (*lo + *hi) / Rational(2);
        else if (lo) x[k] = *lo + Rational(1);
        else if (hi) x[k] = *hi - Rational(1);
        else x[k] = Rational(0);
    }

    Assignment out;
    for (std::size_t j = 0; j < width; ++j) out[idx.names[j]] = x[j];
    return out;
}

bool satisfies(const LinearSystem& sys, const Assignment& point) {
    return std::all_of(sys.constraints.begin(), sys.constraints.end(),
                       [&](const LinearConstraint& c) { return c.holds(point); });
}

namespace {

bool implies(const LinearSystem& premise, const LinearConstraint& c) {
    auto refuted = [&](const LinearConstraint& counter) {
        LinearSystem probe = premise;
        probe.add(counter);
        return !is_feasible(probe);
    };
    if (c.relation != Relation::Equal) return refuted(negate(c));
    LinearConstraint above = c, below;
    above.relation = Relation::Greater;
    for (const auto& [var, coef] : c.coefficients) below.coefficients[var] = -coef;
    below.rhs = -c.rhs;
    below.relation = Relation::Greater;
    return refuted(above) && refuted(below);
}

}  // namespace

bool equivalent(const LinearSystem& a, const LinearSystem& b) {
    return std::all_of(b.constraints.begin(), b.constraints.end(), [&](const auto& c) { return implies(a, c); }) &&
           std::all_of(a.constraints.begin(), a.constraints.end(), [&](const auto& c) { return implies(b, c); });
}

}  // namespace legprod
