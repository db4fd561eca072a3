#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "legprod/feasibility.hpp"
#include "legprod/model.hpp"

namespace legprod {

// The three Legendrian knots used for triple-product experiments.
enum class KnotFixture { StabilizedUnknot, R1Unknot, Trefoil };

KnotFixture parse_fixture_name(std::string_view name);  // "stabilized_unknot" | "r1_unknot" | "trefoil"
std::string_view fixture_name(KnotFixture f);

// Chord labels with their fixed signs, in order (a1, a2 / b1, b2, b3 / c1..c5).
std::vector<std::pair<std::string, Sign>> fixture_chords(KnotFixture f);

// Area constraints for the fixture, including positivity of every action.
LinearSystem fixture_constraints(KnotFixture f);

// Builds the knot model from an action assignment. Throws ConstraintViolated naming the failing inequality,
// UnknownChord for a missing or extra label.
std::pair<LegendrianModel, LinearSystem> knot_fixture(KnotFixture f, const Assignment& actions);

std::string describe(const LinearConstraint& c);  // e.g. "b1 - b3 > 0"

}  // namespace legprod
