#pragma once

#include <string>
#include <vector>

#include "legprod/model.hpp"

namespace legprod {

// Chord families of the Morse-perturbed product:
// A = (chord of K, critical point of L), B = (critical point of K, chord of L),
// C = difference-action pair, D = sum-action pair.
enum class ChordKind { A, B, C, D };

char kind_letter(ChordKind k);
ChordKind parse_kind(char c);

struct PerturbedChord {
    ChordKind kind = ChordKind::A;
    std::string parent_k;
    std::string parent_l;
    Rational action;
    Sign sign = Sign::Positive;

    std::string label() const;  // e.g. "C(a1,b2)"

    friend bool operator==(const PerturbedChord&, const PerturbedChord&) = default;
};

// How perturb_product treats emitted chords that share an action.
enum class DuplicatePolicy {
    Keep,      // nominal actions, duplicates allowed (only signs matter for tb)
    Separate,  // shift every action up by a rank-ordered offset far below every action gap
    Reject,    // throw DuplicateProductAction
};

struct PerturbOptions {
    DuplicatePolicy duplicates = DuplicatePolicy::Keep;
    // Actions of a later factor. Separate keeps every emitted chord off these values without reordering
    // any distinct values; Reject treats a coincidence with them as a duplicate.
    std::vector<Rational> reference_actions;
};

struct PerturbedProduct {
    std::vector<PerturbedChord> chords;  // ordered by kind, then parent_k, then parent_l
    LegendrianModel model;
};

// (-1)^n if za < zb, (-1)^m if za > zb. Throws ActionTie on equality.
Sign tau(const Rational& za, const Rational& zb, int n, int m);

// Throws ActionCollision if some chord action of K equals one of L.
void require_disjoint_actions(const LegendrianModel& K, const LegendrianModel& L);

// Closed-form Thurston–Bennequin number of K x L.
long long product_tb(const LegendrianModel& K, const LegendrianModel& L);

// mu_K (+) mu_L, labels prefixed "K." and "L.".
MaslovClass maslov_product(const LegendrianModel& K, const LegendrianModel& L);

// Enumerates the Reeb chords of the perturbed product and assembles the product model.
PerturbedProduct perturb_product(const LegendrianModel& K, const LegendrianModel& L, const PerturbOptions& opts = {});

// Product with a Whitney circle whose chord dominates every chord of L.
LegendrianModel frontspin(const LegendrianModel& L);

// tb of K_i x L for i = 0..pairs, where K_i carries i extra cancelling chord pairs straddling the chord e of L.
std::vector<long long> infinite_family_tb(const LegendrianModel& K, const LegendrianModel& L,
                                          const std::string& e_label, int pairs, const Rational& za,
                                          const Rational& zb, Sign lead_sign);

}  // namespace legprod
