#include "legprod/fixtures.hpp"

#include "legprod/errors.hpp"

namespace legprod {

KnotFixture parse_fixture_name(std::string_view name) {
    if (name == "stabilized_unknot") return KnotFixture::StabilizedUnknot;
    if (name == "r1_unknot") return KnotFixture::R1Unknot;
    if (name == "trefoil") return KnotFixture::Trefoil;
    throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

std::string_view fixture_name(KnotFixture f) {
    switch (f) {
        case KnotFixture::StabilizedUnknot: return "stabilized_unknot";
        case KnotFixture::R1Unknot: return "r1_unknot";
        case KnotFixture::Trefoil: return "trefoil";
    }
    return "";
}

std::vector<std::pair<std::string, Sign>> fixture_chords(KnotFixture f) {
    constexpr Sign neg = Sign::Negative, pos = Sign::Positive;
    switch (f) {
        case KnotFixture::StabilizedUnknot: return {{"a1", neg}, {"a2", neg}};
        case KnotFixture::R1Unknot: return {{"b1", neg}, {"b2", neg}, {"b3", pos}};
        case KnotFixture::Trefoil: return {{"c1", neg}, {"c2", neg}, {"c3", pos}, {"c4", pos}, {"c5", pos}};
    }
    return {};
}

LinearSystem fixture_constraints(KnotFixture f) {
    LinearSystem sys;
    for (const auto& [label, sign] : fixture_chords(f)) sys.add(positive(label));
    switch (f) {
        case KnotFixture::StabilizedUnknot:
            break;
        case KnotFixture::R1Unknot:
            sys.add(greater_than("b1", "b3"));
            sys.add(greater_than("b2", "b3"));
            break;
        case KnotFixture::Trefoil:
            for (const char* big : {"c1", "c2"}) {
                for (const char* small : {"c3", "c4", "c5"}) sys.add(greater_than(big, small));
            }
            break;
    }
    return sys;
}

std::string describe(const LinearConstraint& c) {
    std::string out;
    for (const auto& [var, coef] : c.coefficients) {
        bool neg = coef.sign() < 0;
        Rational mag = coef.abs();
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (mag != Rational(1)) out += (mag.is_integer() ? mag.numerator_str() : mag.str()) + "*";
        out += var;
    }
    if (out.empty()) out = "0";
    out += " " + relation_symbol(c.relation) + " ";
    out += c.rhs.is_integer() ? c.rhs.numerator_str() : c.rhs.str();
    return out;
}

std::pair<LegendrianModel, LinearSystem> knot_fixture(KnotFixture f, const Assignment& actions) {
    auto chords = fixture_chords(f);
    for (const auto& [label, value] : actions) {
        bool known = false;
        for (const auto& c : chords) known |= c.first == label;
        if (!known) {
            throw Error(ErrorKind::UnknownChord,
                        "'" + label + "' is not a chord of " + std::string(fixture_name(f)));
        }
    }

    LegendrianModel m;
    m.dim = 1;
    m.euler = 0;
    m.cotangent_euler = 0;
    m.morse = {{"m0", 0}, {"m1", 1}};
    // Twice the rotation number; the stabilized unknot is taken with a positive stabilization.
    m.maslov = {{"gamma", f == KnotFixture::StabilizedUnknot ? 2 : 0}};
    for (const auto& [label, sign] : chords) {
        auto it = actions.find(label);
        if (it == actions.end()) throw Error(ErrorKind::UnknownChord, "missing action for '" + label + "'");
        m.chords.push_back({label, it->second, sign});
    }

    LinearSystem sys = fixture_constraints(f);
    for (const auto& c : sys.constraints) {
        if (!c.holds(actions)) throw Error(ErrorKind::ConstraintViolated, describe(c));
    }
    require_valid(m);
    return {std::move(m), std::move(sys)};
}

}  // namespace legprod
