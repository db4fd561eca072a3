#include "legprod/diagram.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "legprod/errors.hpp"
#include "legprod/fixtures.hpp"

namespace legprod {

namespace {

struct Slot {
    int crossing;
    int pos;
    friend bool operator==(const Slot&, const Slot&) = default;
};

// For every slot, the slot at the other end of its arc.
std::vector<std::array<Slot, 4>> partner_slots(const PDCode& pd) {
    const int n = static_cast<int>(pd.size());
    std::map<int, std::vector<Slot>> where;
    for (int c = 0; c < n; ++c) {
        for (int p = 0; p < 4; ++p) where[pd.crossings[c][p]].push_back({c, p});
    }
    for (const auto& [arc, slots] : where) {
        if (arc < 1 || arc > 2 * n) {
            throw Error(ErrorKind::InvalidDiagram, "arc label " + std::to_string(arc) + " outside 1.." + std::to_string(2 * n));
        }
        if (slots.size() != 2) {
            throw Error(ErrorKind::InvalidDiagram,
                        "arc " + std::to_string(arc) + " occurs " + std::to_string(slots.size()) + " times");
        }
    }
    std::vector<std::array<Slot, 4>> partner(n);
    for (const auto& [arc, slots] : where) {
        partner[slots[0].crossing][slots[0].pos] = slots[1];
        partner[slots[1].crossing][slots[1].pos] = slots[0];
    }
    return partner;
}

struct Orientation {
    std::vector<int> over_in;                 // entering slot (1 or 3) of the over-strand, per crossing
    std::map<int, Slot> head, tail;           // arc -> entering / leaving slot
};

Orientation orient(const PDCode& pd, const std::vector<std::array<Slot, 4>>& partner) {
    const int n = static_cast<int>(pd.size());
    Orientation o;
    o.over_in.assign(n, -1);
    std::set<std::pair<int, int>> visited;
    Slot in{0, 0};
    for (int step = 0; step < 2 * n; ++step) {
        if (in.pos == 2) throw Error(ErrorKind::InvalidDiagram, "under-strand of crossing " + std::to_string(in.crossing + 1) + " is traversed backwards");
        if (!visited.insert({in.crossing, in.pos}).second) break;
        if (in.pos % 2 == 1) {
            if (o.over_in[in.crossing] != -1) throw Error(ErrorKind::InvalidDiagram, "over-strand visited twice");
            o.over_in[in.crossing] = in.pos;
        }
        Slot out{in.crossing, (in.pos + 2) % 4};
        int arc = pd.crossings[out.crossing][out.pos];
        o.tail[arc] = out;
        in = partner[out.crossing][out.pos];
        o.head[arc] = in;
    }
    if (visited.size() != static_cast<std::size_t>(2 * n) || !(in == Slot{0, 0})) {
        throw Error(ErrorKind::InvalidDiagram, "diagram is not a single connected, consistently oriented component");
    }
    return o;
}

struct Traced {
    std::vector<Face> faces;
};

Traced trace_faces(const PDCode& pd, const std::vector<std::array<Slot, 4>>& partner, const Orientation& o) {
    const int n = static_cast<int>(pd.size());
    std::vector<std::array<int, 4>> face_of(n, {-1, -1, -1, -1});  // leaving slot -> face id
    Traced t;
    for (int c = 0; c < n; ++c) {
        for (int s = 0; s < 4; ++s) {
            if (face_of[c][s] != -1) continue;
            Face f;
            int id = static_cast<int>(t.faces.size());
            Slot d{c, s};
            while (face_of[d.crossing][d.pos] == -1) {
                face_of[d.crossing][d.pos] = id;
                f.arcs.push_back(pd.crossings[d.crossing][d.pos]);
                Slot arrive = partner[d.crossing][d.pos];
                f.corners.push_back({arrive.crossing, arrive.pos, arrive.pos % 2 == 0});
                d = {arrive.crossing, (arrive.pos + 3) % 4};
            }
            t.faces.push_back(std::move(f));
        }
    }
    // A dart has its face on the left; the face right of an arc is left of the dart running against it.
    const Slot& start = pd.outer_side == Side::Right ? o.head.at(pd.outer_arc) : o.tail.at(pd.outer_arc);
    t.faces[face_of[start.crossing][start.pos]].unbounded = true;
    return t;
}

struct Analysis {
    Orientation orientation;
    std::vector<Face> faces;
};

Analysis analyze(const PDCode& pd) {
    if (pd.crossings.empty()) throw Error(ErrorKind::InvalidDiagram, "diagram has no crossings");
    auto partner = partner_slots(pd);
    const int n = static_cast<int>(pd.size());
    if (pd.outer_arc < 1 || pd.outer_arc > 2 * n) {
        throw Error(ErrorKind::InvalidDiagram, "outer arc " + std::to_string(pd.outer_arc) + " does not exist");
    }
    Analysis a{orient(pd, partner), {}};
    a.faces = trace_faces(pd, partner, a.orientation).faces;
    if (static_cast<int>(a.faces.size()) != n + 2) {
        throw Error(ErrorKind::InvalidDiagram, "rotation system has " + std::to_string(a.faces.size()) +
                                                   " faces, a planar diagram needs " + std::to_string(n + 2));
    }
    return a;
}

int parse_int(std::string_view s, std::string_view token) {
    if (s.empty()) throw Error(ErrorKind::ParseError, "malformed token '" + std::string(token) + "'");
    int v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) || v > 100000000) {
            throw Error(ErrorKind::ParseError, "malformed token '" + std::string(token) + "'");
        }
        v = v * 10 + (ch - '0');
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

PDCode PDCode::reversed() const {
    PDCode out;
    for (const auto& x : crossings) out.crossings.push_back({x[2], x[3], x[0], x[1]});
    out.outer_arc = outer_arc;
    out.outer_side = outer_side == Side::Right ? Side::Left : Side::Right;
    return out;
}

PDCode parse_pd(std::string_view text) {
    std::string cleaned;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            cleaned += '\n';
        } else {
            cleaned += text[i];
        }
    }

    PDCode pd;
    bool have_outer = false;
    std::istringstream in(cleaned);
    std::string token;
    while (in >> token) {
        std::string_view t = token;
        if (have_outer) throw Error(ErrorKind::ParseError, "'" + token + "' after the outer= directive");
        if (t.starts_with("X[")) {
            if (!t.ends_with("]")) throw Error(ErrorKind::ParseError, "malformed token '" + token + "'");
            std::string_view body = t.substr(2, t.size() - 3);
            std::array<int, 4> arcs{};
            for (int k = 0; k < 4; ++k) {
                auto comma = body.find(',');
                if ((k < 3) != (comma != std::string_view::npos)) {
                    throw Error(ErrorKind::ParseError, "crossing '" + token + "' needs exactly four arcs");
                }
                arcs[k] = parse_int(trim(body.substr(0, comma)), token);
                body = k < 3 ? body.substr(comma + 1) : std::string_view{};
            }
            pd.crossings.push_back(arcs);
        } else if (t.starts_with("outer=")) {
            std::string_view v = t.substr(6);
            auto colon = v.find(':');
            pd.outer_arc = parse_int(v.substr(0, colon), token);
            if (colon != std::string_view::npos) {
                auto side = v.substr(colon + 1);
                if (side == "left") pd.outer_side = Side::Left;
                else if (side == "right") pd.outer_side = Side::Right;
                else throw Error(ErrorKind::ParseError, "unknown side in '" + token + "'");
            }
            have_outer = true;
        } else {
            throw Error(ErrorKind::ParseError, "unexpected token '" + token + "'");
        }
    }
    if (!have_outer) throw Error(ErrorKind::ParseError, "missing outer= directive");
    validate_diagram(pd);
    return pd;
}

std::string format_pd(const PDCode& pd) {
    std::string out;
    for (const auto& x : pd.crossings) {
        out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
               std::to_string(x[3]) + "]\n";
    }
    out += "outer=" + std::to_string(pd.outer_arc) + (pd.outer_side == Side::Left ? ":left" : "") + "\n";
    return out;
}

void validate_diagram(const PDCode& pd) { analyze(pd); }

std::vector<Sign> crossing_signs(const PDCode& pd) {
    auto a = analyze(pd);
    std::vector<Sign> signs;
    // Under-strand points from arm 0 to arm 2; an over-strand entering at arm 3 crosses it left to right.
    for (int in : a.orientation.over_in) signs.push_back(in == 3 ? Sign::Positive : Sign::Negative);
    return signs;
}

long long diagram_tb(const PDCode& pd) {
    long long tb = 0;
    for (Sign s : crossing_signs(pd)) tb += value(s);
    return tb;
}

std::vector<Face> faces(const PDCode& pd) { return analyze(pd).faces; }

std::string crossing_label(const std::string& prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

LinearSystem area_constraints(const PDCode& pd, const std::string& prefix) {
    auto a = analyze(pd);
    LinearSystem sys;
    for (std::size_t i = 0; i < pd.size(); ++i) sys.add(positive(crossing_label(prefix, i)));
    for (const auto& f : a.faces) {
        if (f.unbounded) continue;
        LinearConstraint c;
        for (const auto& corner : f.corners) {
            auto& coef = c.coefficients[crossing_label(prefix, corner.crossing)];
            coef += Rational(corner.positive ? 1 : -1);
        }
        std::erase_if(c.coefficients, [](const auto& kv) { return kv.second.is_zero(); });
        c.relation = Relation::Greater;
        c.rhs = Rational(0);
        sys.add(std::move(c));
    }
    return sys;
}

LegendrianModel diagram_model(const PDCode& pd, const Assignment& actions, const std::string& prefix) {
    auto signs = crossing_signs(pd);
    LegendrianModel m;
    m.dim = 1;
    m.morse = {{"m0", 0}, {"m1", 1}};
    for (std::size_t i = 0; i < signs.size(); ++i) {
        auto label = crossing_label(prefix, i);
        auto it = actions.find(label);
        if (it == actions.end()) throw Error(ErrorKind::UnknownChord, "missing action for '" + label + "'");
        m.chords.push_back({label, it->second, signs[i]});
    }
    for (const auto& c : area_constraints(pd, prefix).constraints) {
        if (!c.holds(actions)) throw Error(ErrorKind::ConstraintViolated, describe(c));
    }
    require_valid(m);
    return m;
}

}  // namespace legprod
