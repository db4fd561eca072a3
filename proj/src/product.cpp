#include "legprod/product.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

#include "legprod/errors.hpp"

namespace legprod {

char kind_letter(ChordKind k) { return "ABCD"[static_cast<int>(k)]; }

ChordKind parse_kind(char c) {
    if (c < 'A' || c > 'D') throw Error(ErrorKind::ParseError, std::string("unknown chord kind '") + c + "'");
    return static_cast<ChordKind>(c - 'A');
}

std::string PerturbedChord::label() const {
    return std::string(1, kind_letter(kind)) + "(" + parent_k + "," + parent_l + ")";
}

Sign tau(const Rational& za, const Rational& zb, int n, int m) {
    if (za.sign() <= 0 || zb.sign() <= 0) throw Error(ErrorKind::InvalidModel, "actions must be positive");
    if (za == zb) throw Error(ErrorKind::ActionTie, "both chords have action " + za.str());
    return za < zb ? parity_sign(n) : parity_sign(m);
}

void require_disjoint_actions(const LegendrianModel& K, const LegendrianModel& L) {
    std::set<Rational> seen;
    for (const auto& a : K.chords) seen.insert(a.action);
    for (const auto& b : L.chords) {
        if (seen.contains(b.action)) {
            throw Error(ErrorKind::ActionCollision, "chord '" + b.label + "' of L shares action " +
                                                        b.action.str() + " with a chord of K");
        }
    }
}

long long product_tb(const LegendrianModel& K, const LegendrianModel& L) {
    require_valid(K);
    require_valid(L);
    require_disjoint_actions(K, L);
    long long tbK = chord_sum_tb(K), tbL = chord_sum_tb(L);
    long long cross = 0;
    for (const auto& a : K.chords) {
        for (const auto& b : L.chords) cross += value(tau(a.action, b.action, K.dim, L.dim) * a.sign * b.sign);
    }
    long long inner = tbK * L.cotangent_euler + K.cotangent_euler * tbL + tbK * tbL + cross;
    return value(parity_sign(static_cast<long long>(K.dim) * L.dim)) * inner;
}

MaslovClass maslov_product(const LegendrianModel& K, const LegendrianModel& L) {
    MaslovClass out;
    for (const auto& [label, v] : K.maslov) out["K." + label] = v;
    for (const auto& [label, v] : L.maslov) out["L." + label] = v;
    return out;
}

namespace {

void separate_actions(std::vector<PerturbedChord>& chords, const std::vector<Rational>& reference) {
    if (chords.empty()) return;
    std::set<Rational> values(reference.begin(), reference.end());
    values.insert(Rational(0));
    for (const auto& c : chords) values.insert(c.action);
    std::optional<Rational> gap;
    for (auto it = values.begin(), nx = std::next(it); nx != values.end(); ++it, ++nx) {
        Rational d = *nx - *it;
        if (!gap || d < *gap) gap = d;
    }
    // Offsets stay below gap / 2, so no two distinct nominal values swap order.
    Rational step = *gap / Rational(2 * (static_cast<std::int64_t>(chords.size()) + 1));
    for (std::size_t r = 0; r < chords.size(); ++r) chords[r].action += step * Rational(static_cast<std::int64_t>(r + 1));
}

void reject_duplicates(const std::vector<PerturbedChord>& chords, const std::vector<Rational>& reference) {
    std::set<Rational> seen(reference.begin(), reference.end());
    std::set<Rational> refs = seen;
    for (const auto& c : chords) {
        if (!seen.insert(c.action).second) {
            throw Error(ErrorKind::DuplicateProductAction,
                        "chord " + c.label() + " repeats action " + c.action.str() +
                            (refs.contains(c.action) ? " of the reference factor" : ""));
        }
    }
}

}  // namespace

PerturbedProduct perturb_product(const LegendrianModel& K, const LegendrianModel& L, const PerturbOptions& opts) {
    require_valid(K);
    require_valid(L);
    require_disjoint_actions(K, L);
    const int n = K.dim, m = L.dim;
    const Sign global = parity_sign(static_cast<long long>(n) * m);

    std::vector<PerturbedChord> chords;
    for (const auto& a : K.chords) {
        for (const auto& p : L.morse) {
            chords.push_back({ChordKind::A, a.label, p.label, a.action, global * a.sign * morse_sign(m, p.index)});
        }
    }
    for (const auto& p : K.morse) {
        for (const auto& b : L.chords) {
            chords.push_back({ChordKind::B, p.label, b.label, b.action, global * morse_sign(n, p.index) * b.sign});
        }
    }
    for (const auto& a : K.chords) {
        for (const auto& b : L.chords) {
            Sign t = tau(a.action, b.action, n, m);
            chords.push_back({ChordKind::C, a.label, b.label, (a.action - b.action).abs(), global * a.sign * b.sign * t});
            chords.push_back({ChordKind::D, a.label, b.label, a.action + b.action, global * a.sign * b.sign});
        }
    }
    std::sort(chords.begin(), chords.end(), [](const PerturbedChord& x, const PerturbedChord& y) {
        return std::tie(x.kind, x.parent_k, x.parent_l) < std::tie(y.kind, y.parent_k, y.parent_l);
    });

    switch (opts.duplicates) {
        case DuplicatePolicy::Keep: break;
        case DuplicatePolicy::Separate: separate_actions(chords, opts.reference_actions); break;
        case DuplicatePolicy::Reject: reject_duplicates(chords, opts.reference_actions); break;
    }

    LegendrianModel model;
    model.dim = n + m;
    model.euler = K.euler * L.euler;
    model.cotangent_euler = K.cotangent_euler * L.cotangent_euler;
    for (const auto& c : chords) model.chords.push_back({c.label(), c.action, c.sign});
    for (const auto& p : K.morse) {
        for (const auto& q : L.morse) model.morse.push_back({"(" + p.label + "," + q.label + ")", p.index + q.index});
    }
    model.maslov = maslov_product(K, L);
    require_valid(model);
    return {std::move(chords), std::move(model)};
}

LegendrianModel frontspin(const LegendrianModel& L) {
    require_valid(L);
    Rational top(0);
    for (const auto& c : L.chords) top = std::max(top, c.action);
    Rational unknot_action = L.chords.empty() ? Rational(1) : Rational(1) + Rational(2) * top;
    return perturb_product(whitney(1, unknot_action), L).model;
}

std::vector<long long> infinite_family_tb(const LegendrianModel& K, const LegendrianModel& L,
                                          const std::string& e_label, int pairs, const Rational& za,
                                          const Rational& zb, Sign lead_sign) {
    require_valid(K);
    require_valid(L);
    if ((K.dim + L.dim) % 2 == 0) {
        throw Error(ErrorKind::ParityViolation, "factor dimensions " + std::to_string(K.dim) + " and " +
                                                    std::to_string(L.dim) + " have the same parity");
    }
    if (pairs < 0) throw Error(ErrorKind::InvalidModel, "pairs must be nonnegative");
    auto e = std::find_if(L.chords.begin(), L.chords.end(), [&](const ReebChord& c) { return c.label == e_label; });
    if (e == L.chords.end()) throw Error(ErrorKind::UnknownChord, "L has no chord '" + e_label + "'");
    if (!(za > zb) || zb.sign() <= 0) throw Error(ErrorKind::BadChordOrder, "need za > zb > 0");
    if (!(za > e->action && e->action > zb)) {
        throw Error(ErrorKind::WindowViolation, "chord '" + e_label + "' does not lie strictly between zb and za");
    }
    for (const auto& c : L.chords) {
        if (c.label != e_label && c.action >= zb && c.action <= za) {
            throw Error(ErrorKind::WindowViolation, "chord '" + c.label + "' of L also lies in [zb, za]");
        }
    }

    // Pair j sits at (za + j*step, zb - j*step); the step keeps every shifted action inside its gap.
    std::optional<Rational> gap;
    auto consider = [&](const Rational& anchor, const Rational& other) {
        Rational d = (anchor - other).abs();
        if (d.sign() > 0 && (!gap || d < *gap)) gap = d;
    };
    for (const Rational* anchor : {&za, &zb}) {
        consider(*anchor, Rational(0));
        for (const auto& c : K.chords) consider(*anchor, c.action);
        for (const auto& c : L.chords) consider(*anchor, c.action);
    }
    consider(za, zb);
    Rational step = *gap / Rational(2 * (static_cast<std::int64_t>(pairs) + 1));

    std::vector<long long> out;
    LegendrianModel current = K;
    out.push_back(product_tb(current, L));
    for (int j = 0; j < pairs; ++j) {
        Rational shift = step * Rational(j);
        current = stabilize_with_cancelling_pair(current, za + shift, zb - shift, lead_sign);
        out.push_back(product_tb(current, L));
    }
    return out;
}

}  // namespace legprod
