#include "legprod/model.hpp"

#include <set>

#include "legprod/errors.hpp"

namespace legprod {

Sign sign_from_int(int v) {
    if (v == 1) return Sign::Positive;
    if (v == -1) return Sign::Negative;
    throw Error(ErrorKind::ParseError, "sign must be +1 or -1, got " + std::to_string(v));
}

long long cotangent_euler(int dim, long long euler) {
    long long e = static_cast<long long>(dim) * (dim + 1) / 2;
    return value(parity_sign(e)) * euler;
}

Sign morse_sign(int dim, int index) {
    long long e = static_cast<long long>(dim) * (dim + 1) / 2 + index;
    return parity_sign(e);
}

ValidationReport validate_model(const LegendrianModel& m) {
    ValidationReport report;
    auto flag = [&](const char* name) { report.violations.emplace_back(name); };

    if (m.dim < 1) flag(violation::kDimension);

    std::set<std::string> labels;
    bool dup = false, nonpositive = false;
    for (const auto& c : m.chords) {
        dup |= !labels.insert(c.label).second;
        nonpositive |= c.action.sign() <= 0;
    }
    if (dup) flag(violation::kChordLabels);
    if (nonpositive) flag(violation::kPositiveAction);

    labels.clear();
    dup = false;
    bool bad_index = false;
    long long alternating = 0;
    for (const auto& p : m.morse) {
        dup |= !labels.insert(p.label).second;
        bad_index |= p.index < 0 || p.index > m.dim;
        alternating += p.index % 2 == 0 ? 1 : -1;
    }
    if (dup) flag(violation::kMorseLabels);
    if (m.morse.empty()) flag(violation::kMorseNonempty);
    if (bad_index) flag(violation::kMorseIndex);
    if (alternating != m.euler) flag(violation::kMorseEuler);
    if (m.dim >= 1 && m.cotangent_euler != cotangent_euler(m.dim, m.euler)) flag(violation::kCotangent);
    if (m.dim % 2 == 1 && (m.euler != 0 || m.cotangent_euler != 0)) flag(violation::kOddEuler);
    return report;
}

void require_valid(const LegendrianModel& m) {
    auto report = validate_model(m);
    if (report.ok()) return;
    std::string detail;
    for (const auto& v : report.violations) {
        if (!detail.empty()) detail += "; ";
        detail += v;
    }
    throw Error(ErrorKind::InvalidModel, detail);
}

long long chord_sum_tb(const LegendrianModel& m) {
    require_valid(m);
    long long tb = 0;
    for (const auto& c : m.chords) tb += value(c.sign);
    return tb;
}

LegendrianModel whitney(int n, const Rational& action) {
    switch (n) {
        case 1: return whitney(n, action, Sign::Negative);
        case 2: return whitney(n, action, Sign::Positive);
        case 4: return whitney(n, action, Sign::Negative);
        default:
            throw Error(ErrorKind::UnknownWhitneySign,
                        "no built-in chord sign for the Whitney " + std::to_string(n) + "-sphere; pass one");
    }
}

LegendrianModel whitney(int n, const Rational& action, Sign sign) {
    if (n < 1) throw Error(ErrorKind::InvalidModel, "Whitney sphere dimension must be positive");
    LegendrianModel m;
    m.dim = n;
    m.euler = n % 2 == 0 ? 2 : 0;
    m.cotangent_euler = cotangent_euler(n, m.euler);
    m.chords.push_back({"w", action, sign});
    m.morse = {{"m0", 0}, {"m" + std::to_string(n), n}};
    m.maslov = {{"mu", 0}};
    require_valid(m);
    return m;
}

std::string fresh_chord_label(const LegendrianModel& m, const std::string& prefix) {
    std::set<std::string> used;
    for (const auto& c : m.chords) used.insert(c.label);
    for (int k = 1;; ++k) {
        auto candidate = prefix + std::to_string(k);
        if (!used.contains(candidate)) return candidate;
    }
}

LegendrianModel stabilize_with_cancelling_pair(const LegendrianModel& m, const Rational& za, const Rational& zb,
                                               Sign lead_sign) {
    require_valid(m);
    if (!(za > zb)) throw Error(ErrorKind::BadChordOrder, "need za > zb, got " + za.str() + " and " + zb.str());
    if (zb.sign() <= 0) throw Error(ErrorKind::BadChordOrder, "actions must be positive");
    LegendrianModel out = m;
    auto upper = fresh_chord_label(out, "s");
    out.chords.push_back({upper, za, lead_sign});
    auto lower = fresh_chord_label(out, "s");
    out.chords.push_back({lower, zb, -lead_sign});
    return out;
}

}  // namespace legprod
