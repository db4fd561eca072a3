#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legprod/rational.hpp"

namespace legprod {

enum class Relation { Greater, GreaterEqual, Equal };

std::string relation_symbol(Relation rel);       // ">", ">=", "="
Relation parse_relation(const std::string& text);  // also accepts "<", "<=" via negation helpers below

using Assignment = std::map<std::string, Rational>;

// sum(coefficients[v] * v) rel rhs. An empty coefficient map is a ground fact.
struct LinearConstraint {
    std::map<std::string, Rational> coefficients;
    Relation relation = Relation::Greater;
    Rational rhs;

    bool is_ground() const { return coefficients.empty(); }
    bool holds(const Assignment& point) const;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct LinearSystem {
    std::vector<std::string> variables;  // declaration order, no duplicates
    std::vector<LinearConstraint> constraints;

    bool declares(const std::string& var) const;
    void declare(const std::string& var);           // no-op if present
    void add(LinearConstraint c);                   // declares every referenced variable

    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

// Convenience builders.
LinearConstraint greater_than(const std::string& lhs, const std::string& rhs);  // lhs - rhs > 0
LinearConstraint positive(const std::string& var);                              // var > 0
// Logical negation of a single inequality: not(e > r) is (-e >= -r), not(e >= r) is (-e > -r).
// Equalities have no single-constraint negation; throws std::invalid_argument.
LinearConstraint negate(const LinearConstraint& c);

// Union of two systems; variables merged in order of first appearance.
LinearSystem merge(const LinearSystem& a, const LinearSystem& b);

// One Fourier–Motzkin step. Ground contradictions are kept (as e.g. "0 > 0"), ground tautologies dropped.
LinearSystem fm_eliminate(const LinearSystem& sys, const std::string& var);

bool is_feasible(const LinearSystem& sys);

// Deterministic witness by back substitution in ascending-name elimination order; nullopt when infeasible.
std::optional<Assignment> sample_point(const LinearSystem& sys);

bool satisfies(const LinearSystem& sys, const Assignment& point);

// true iff every solution of a satisfies every constraint of b and vice versa.
bool equivalent(const LinearSystem& a, const LinearSystem& b);

}  // namespace legprod
