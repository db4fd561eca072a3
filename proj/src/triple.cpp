#include "legprod/triple.hpp"

#include "legprod/errors.hpp"
#include "legprod/product.hpp"

namespace legprod {

int triple_tau(const Rational& a, const Rational& b, const Rational& c) {
    if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) throw Error(ErrorKind::InvalidModel, "actions must be positive");
    if (a + b == c || a + c == b || b + c == a) {
        throw Error(ErrorKind::DegenerateTriple, "(" + a.str() + ", " + b.str() + ", " + c.str() + ") lies on a triangle hyperplane");
    }
    return (a + b > c && a + c > b && b + c > a) ? 2 : 0;
}

namespace {

void require_knot(const LegendrianModel& m, const char* which) {
    require_valid(m);
    if (m.dim != 1) throw Error(ErrorKind::InvalidModel, std::string(which) + " must be one-dimensional");
}

}  // namespace

long long triple_tb(const LegendrianModel& K1, const LegendrianModel& K2, const LegendrianModel& K3) {
    require_knot(K1, "K1");
    require_knot(K2, "K2");
    require_knot(K3, "K3");
    long long tb = 0;
    for (const auto& a : K1.chords) {
        for (const auto& b : K2.chords) {
            for (const auto& c : K3.chords) {
                tb += triple_tau(a.action, b.action, c.action) * value(a.sign * b.sign * c.sign);
            }
        }
    }
    return tb;
}

TripleAudit triple_vs_iterated(const LegendrianModel& K1, const LegendrianModel& K2, const LegendrianModel& K3) {
    TripleAudit audit;
    audit.closed_form = triple_tb(K1, K2, K3);

    PerturbOptions opts;
    opts.duplicates = DuplicatePolicy::Separate;
    for (const auto& c : K3.chords) opts.reference_actions.push_back(c.action);
    PerturbedProduct torus = perturb_product(K1, K2, opts);
    audit.iterated = product_tb(torus.model, K3);
    audit.agree = audit.closed_form == audit.iterated;

    for (const auto& p : torus.chords) {
        for (const auto& e : K3.chords) {
            audit.tau_by_kind[static_cast<int>(p.kind)] +=
                value(tau(p.action, e.action, torus.model.dim, K3.dim) * p.sign * e.sign);
        }
    }
    return audit;
}

}  // namespace legprod
