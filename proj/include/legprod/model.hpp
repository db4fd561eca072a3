#pragma once

#include <map>
#include <string>
#include <vector>

#include "legprod/rational.hpp"

namespace legprod {

enum class Sign : int { Negative = -1, Positive = 1 };

inline int value(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) { return value(a) == value(b) ? Sign::Positive : Sign::Negative; }
inline Sign operator-(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
inline Sign parity_sign(long long exponent) { return exponent % 2 == 0 ? Sign::Positive : Sign::Negative; }
Sign sign_from_int(int v);  // accepts +1 / -1 only

struct ReebChord {
    std::string label;
    Rational action;
    Sign sign = Sign::Positive;

    friend bool operator==(const ReebChord&, const ReebChord&) = default;
};

struct MorseCritical {
    std::string label;
    int index = 0;

    friend bool operator==(const MorseCritical&, const MorseCritical&) = default;
};

using MaslovClass = std::map<std::string, long long>;

// A chord-generic Legendrian reduced to the data its classical invariants depend on.
struct LegendrianModel {
    int dim = 1;
    long long euler = 0;
    long long cotangent_euler = 0;
    std::vector<ReebChord> chords;
    std::vector<MorseCritical> morse;
    MaslovClass maslov;

    friend bool operator==(const LegendrianModel&, const LegendrianModel&) = default;
};

// Names used in validation reports.
namespace violation {
inline constexpr const char* kDimension = "positive dimension";
inline constexpr const char* kChordLabels = "distinct chord labels";
inline constexpr const char* kMorseLabels = "distinct Morse labels";
inline constexpr const char* kPositiveAction = "positive chord action";
inline constexpr const char* kMorseNonempty = "nonempty Morse data";
inline constexpr const char* kMorseIndex = "Morse index range";
inline constexpr const char* kMorseEuler = "Morse–Euler consistency";
inline constexpr const char* kCotangent = "cotangent consistency";
inline constexpr const char* kOddEuler = "odd dimension forces euler 0";
}  // namespace violation

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_model(const LegendrianModel& m);

// Throws Error(InvalidModel) listing every violation.
void require_valid(const LegendrianModel& m);

// (-1)^{dim(dim+1)/2} * euler, the Euler number of the cotangent bundle in our orientation convention.
long long cotangent_euler(int dim, long long euler);

// Sign carried by a Morse critical point in the perturbed product; sums to cotangent_euler over a valid model.
Sign morse_sign(int dim, int index);

// Signed count of Reeb chords.
long long chord_sum_tb(const LegendrianModel& m);

// Standard Whitney sphere with one chord. The sign table covers n in {1, 2, 4}.
LegendrianModel whitney(int n, const Rational& action);
LegendrianModel whitney(int n, const Rational& action, Sign sign);

// Adds a cancelling chord pair (za, lead_sign), (zb, -lead_sign); requires za > zb > 0.
LegendrianModel stabilize_with_cancelling_pair(const LegendrianModel& m, const Rational& za, const Rational& zb,
                                               Sign lead_sign);

// First label of the form prefix + k (k = 1, 2, ...) not used by any chord of m.
std::string fresh_chord_label(const LegendrianModel& m, const std::string& prefix);

}  // namespace legprod
