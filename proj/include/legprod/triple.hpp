#pragma once

#include <array>

#include "legprod/model.hpp"

namespace legprod {

// 2 if (a, b, c) satisfy all strict triangle inequalities, else 0. Throws DegenerateTriple on any equality.
int triple_tau(const Rational& a, const Rational& b, const Rational& c);

// Closed-form tb of K1 x K2 x K3 for three Legendrian knots (dim 1 models).
long long triple_tb(const LegendrianModel& K1, const LegendrianModel& K2, const LegendrianModel& K3);

struct TripleAudit {
    long long closed_form = 0;
    long long iterated = 0;
    bool agree = false;
    // tau-sum contribution of each chord family (A, B, C, D) of K1 x K2 against K3.
    std::array<long long, 4> tau_by_kind{};
};

// Closed form against product_tb(perturb_product(K1, K2), K3), the latter with actions separated away from K3's.
TripleAudit triple_vs_iterated(const LegendrianModel& K1, const LegendrianModel& K2, const LegendrianModel& K3);

}  // namespace legprod
