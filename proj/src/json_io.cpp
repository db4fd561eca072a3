#include "legprod/json_io.hpp"

#include "legprod/errors.hpp"

namespace legprod::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

long long integer(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long long>();
}

std::string string_of(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) bad("rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

json to_json(const LegendrianModel& m) {
    json chords = json::array();
    for (const auto& c : m.chords) chords.push_back({{"label", c.label}, {"action", to_json(c.action)}, {"sign", value(c.sign)}});
    json morse = json::array();
    for (const auto& p : m.morse) morse.push_back({{"label", p.label}, {"index", p.index}});
    json maslov = json::object();
    for (const auto& [label, v] : m.maslov) maslov[label] = v;
    return {{"dim", m.dim},         {"euler", m.euler}, {"cotangent_euler", m.cotangent_euler},
            {"chords", chords},     {"morse", morse},   {"maslov", maslov}};
}

LegendrianModel model_from_json(const json& j) {
    LegendrianModel m;
    m.dim = static_cast<int>(integer(field(j, "dim"), "dim"));
    m.euler = integer(field(j, "euler"), "euler");
    m.cotangent_euler = integer(field(j, "cotangent_euler"), "cotangent_euler");
    const json& chords = field(j, "chords");
    if (!chords.is_array()) bad("chords must be an array");
    for (const auto& c : chords) {
        m.chords.push_back({string_of(field(c, "label"), "chord label"), rational_from_json(field(c, "action")),
                            sign_from_int(static_cast<int>(integer(field(c, "sign"), "sign")))});
    }
    const json& morse = field(j, "morse");
    if (!morse.is_array()) bad("morse must be an array");
    for (const auto& p : morse) {
        m.morse.push_back({string_of(field(p, "label"), "morse label"), static_cast<int>(integer(field(p, "index"), "index"))});
    }
    const json& maslov = field(j, "maslov");
    if (!maslov.is_object()) bad("maslov must be an object");
    for (const auto& [label, v] : maslov.items()) m.maslov[label] = integer(v, "maslov value");
    return m;
}

json to_json(const ValidationReport& r) {
    return {{"ok", r.ok()}, {"violations", r.violations}};
}

json to_json(const PerturbedChord& c) {
    return {{"kind", std::string(1, kind_letter(c.kind))},
            {"parent_k", c.parent_k},
            {"parent_l", c.parent_l},
            {"action", to_json(c.action)},
            {"sign", value(c.sign)}};
}

json to_json(const std::vector<PerturbedChord>& chords) {
    json out = json::array();
    for (const auto& c : chords) out.push_back(to_json(c));
    return out;
}

std::vector<PerturbedChord> chords_from_json(const json& j) {
    if (!j.is_array()) bad("perturbed chord list must be an array");
    std::vector<PerturbedChord> out;
    for (const auto& c : j) {
        auto kind = string_of(field(c, "kind"), "kind");
        if (kind.size() != 1) bad("kind must be one of A, B, C, D");
        out.push_back({parse_kind(kind[0]), string_of(field(c, "parent_k"), "parent_k"),
                       string_of(field(c, "parent_l"), "parent_l"), rational_from_json(field(c, "action")),
                       sign_from_int(static_cast<int>(integer(field(c, "sign"), "sign")))});
    }
    return out;
}

json to_json(const Assignment& a) {
    json out = json::object();
    for (const auto& [var, v] : a) out[var] = to_json(v);
    return out;
}

Assignment assignment_from_json(const json& j) {
    if (!j.is_object()) bad("assignment must be an object");
    Assignment out;
    for (const auto& [var, v] : j.items()) out[var] = rational_from_json(v);
    return out;
}

json to_json(const LinearSystem& sys) {
    json constraints = json::array();
    for (const auto& c : sys.constraints) {
        json lhs = json::object();
        for (const auto& [var, coef] : c.coefficients) lhs[var] = to_json(coef);
        constraints.push_back({{"lhs", lhs}, {"rel", relation_symbol(c.relation)}, {"rhs", to_json(c.rhs)}});
    }
    return {{"vars", sys.variables}, {"constraints", constraints}};
}

LinearSystem system_from_json(const json& j) {
    LinearSystem sys;
    const json& vars = field(j, "vars");
    if (!vars.is_array()) bad("vars must be an array");
    for (const auto& v : vars) sys.declare(string_of(v, "variable"));
    const json& constraints = field(j, "constraints");
    if (!constraints.is_array()) bad("constraints must be an array");
    for (const auto& c : constraints) {
        LinearConstraint lc;
        const json& lhs = field(c, "lhs");
        if (!lhs.is_object()) bad("lhs must be an object");
        for (const auto& [var, coef] : lhs.items()) {
            if (!sys.declares(var)) throw Error(ErrorKind::UnknownVariable, "constraint references undeclared '" + var + "'");
            lc.coefficients[var] = rational_from_json(coef);
        }
        std::erase_if(lc.coefficients, [](const auto& kv) { return kv.second.is_zero(); });
        if (lc.coefficients.empty()) bad("constraint needs a nonzero coefficient");
        auto rel = string_of(field(c, "rel"), "rel");
        lc.rhs = rational_from_json(field(c, "rhs"));
        if (rel == "<" || rel == "<=") {
            // a < b  is  -a > -b
            for (auto& [var, coef] : lc.coefficients) coef = -coef;
            lc.rhs = -lc.rhs;
            rel = rel == "<" ? ">" : ">=";
        }
        lc.relation = parse_relation(rel);
        sys.constraints.push_back(std::move(lc));
    }
    return sys;
}

json to_json(const Face& f) {
    json corners = json::array();
    for (const auto& c : f.corners) {
        corners.push_back({{"crossing", c.crossing + 1}, {"quadrant", c.quadrant}, {"sign", c.positive ? "positive" : "negative"}});
    }
    return {{"corners", corners}, {"arcs", f.arcs}, {"unbounded", f.unbounded}};
}

json to_json(const SearchReport& r) {
    json witnesses = json::array();
    for (const auto& [tb, point] : r.witnesses) witnesses.push_back({{"tb", tb}, {"actions", to_json(point)}});
    json out = {{"values_seen", r.values_seen}, {"witnesses", witnesses}, {"draws", r.draws}, {"evaluations", r.evaluations}};
    out["min_found"] = r.min_found ? json(*r.min_found) : json(nullptr);
    out["max_found"] = r.max_found ? json(*r.max_found) : json(nullptr);
    return out;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

LegendrianModel parse_model(const std::string& text) { return model_from_json(parse(text)); }
LinearSystem parse_system(const std::string& text) { return system_from_json(parse(text)); }

}  // namespace legprod::json
