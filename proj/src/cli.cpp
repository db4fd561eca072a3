#include "legprod/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "legprod/diagram.hpp"
#include "legprod/errors.hpp"
#include "legprod/explore.hpp"
#include "legprod/fixtures.hpp"
#include "legprod/json_io.hpp"
#include "legprod/product.hpp"
#include "legprod/triple.hpp"

namespace legprod::cli {

namespace {


std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LegendrianModel load_model(const std::string& path) { return json::parse_model(read_file(path)); }

// "a1=5,a2=7/2" -> assignment
Assignment parse_assignments(const std::string& text) {
    Assignment out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::ParseError, "expected label=value, got '" + item + "'");
        out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
    }
    return out;
}

FixtureTriple parse_fixture_triple(const std::string& text) {
    std::vector<std::string> names;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
    if (names.size() != 3) throw Error(ErrorKind::ParseError, "--fixtures needs three comma-separated names");
    return {parse_fixture_name(names[0]), parse_fixture_name(names[1]), parse_fixture_name(names[2])};
}

class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& os) const {
        std::vector<std::size_t> width(rows_[0].size(), 0);
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        }
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            for (std::size_t i = 0; i < rows_[k].size(); ++i) {
                os << std::left << std::setw(static_cast<int>(width[i]) + 2) << rows_[k][i];
            }
            os << "\n";
            if (k == 0) {
                std::size_t total = 0;
                for (auto w : width) total += w + 2;
                os << std::string(total, '-') << "\n";
            }
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string signed_str(Sign s) { return s == Sign::Positive ? "+1" : "-1"; }

std::string rational_text(const Rational& r) { return r.is_integer() ? r.numerator_str() : r.str(); }

void print_chords(std::ostream& os, const std::vector<PerturbedChord>& chords) {
    Table t({"kind", "parent_k", "parent_l", "action", "sign"});
    for (const auto& c : chords) t.add({std::string(1, kind_letter(c.kind)), c.parent_k, c.parent_l, rational_text(c.action), signed_str(c.sign)});
    t.print(os);
}

void print_model(std::ostream& os, const LegendrianModel& m) {
    os << "dim " << m.dim << ", euler " << m.euler << ", cotangent euler " << m.cotangent_euler << "\n";
    Table t({"chord", "action", "sign"});
    for (const auto& c : m.chords) t.add({c.label, rational_text(c.action), signed_str(c.sign)});
    t.print(os);
}

struct Options {
    bool pretty = false;
};

void emit(std::ostream& out, const json::json& j) { out << j.dump() << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classical invariants of Legendrian products from chord data", "legprod"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--pretty", opt.pretty, "Human-readable tables instead of JSON");

    std::string path_a, path_b, path_c;

    auto* validate = app.add_subcommand("validate", "Check a model's invariants");
    validate->add_option("model", path_a)->required();

    auto* tb = app.add_subcommand("tb", "Thurston-Bennequin number of a model (signed chord count)");
    tb->add_option("model", path_a)->required();

    bool perturb = false, strict = false, reject = false;
    auto* product = app.add_subcommand("product", "Invariants of the product K x L");
    product->add_option("K", path_a)->required();
    product->add_option("L", path_b)->required();
    product->add_flag("--perturb", perturb, "Also list the Reeb chords of the perturbed product");
    product->add_flag("--strict", strict, "Separate coinciding perturbed actions");
    product->add_flag("--reject-duplicates", reject, "Fail if two perturbed chords share an action");

    bool audit = false;
    auto* triple = app.add_subcommand("triple", "tb of a product of three knots");
    triple->add_option("K1", path_a)->required();
    triple->add_option("K2", path_b)->required();
    triple->add_option("K3", path_c)->required();
    triple->add_flag("--audit", audit, "Also compute the iterated two-factor product");

    auto* spin = app.add_subcommand("frontspin", "Product with a dominating Whitney circle");
    spin->add_option("L", path_a)->required();

    std::string e_label, za_text, zb_text;
    int pairs = 0, lead = 1;
    auto* family = app.add_subcommand("family", "tb along a family of cancelling-pair stabilizations");
    family->add_option("K", path_a)->required();
    family->add_option("L", path_b)->required();
    family->add_option("--e", e_label, "Chord of L straddled by the added pairs")->required();
    family->add_option("--pairs", pairs, "Number of added pairs")->required();
    family->add_option("--za", za_text, "Upper chord action (p/q)")->required();
    family->add_option("--zb", zb_text, "Lower chord action (p/q)")->required();
    family->add_option("--sign", lead, "Sign of the upper chord (+1/-1)")->required();

    bool want_tb = false, want_faces = false, want_constraints = false;
    std::string prefix = "x";
    auto* diagram = app.add_subcommand("diagram", "Analyze a PD-code diagram");
    diagram->add_option("file", path_a)->required();
    diagram->add_flag("--tb", want_tb, "Crossing signs and tb");
    diagram->add_flag("--faces", want_faces, "Faces with signed corners");
    diagram->add_flag("--constraints", want_constraints, "Area constraints as a linear system");
    diagram->add_option("--prefix", prefix, "Chord variable prefix")->capture_default_str();

    std::string fixture_list;
    int budget = 0;
    std::uint64_t seed = 0;
    auto* explore = app.add_subcommand("explore", "Search achievable tb values of a fixture triple");
    explore->add_option("--fixtures", fixture_list, "Three fixture names, comma separated")->required();
    explore->add_option("--budget", budget, "Number of cells to draw")->required();
    explore->add_option("--seed", seed, "Random seed")->required();

    std::string fixture, actions_text;
    auto* fixtures = app.add_subcommand("fixtures", "Build a knot fixture from chord actions");
    fixtures->add_option("name", fixture)->required();
    fixtures->add_option("--actions", actions_text, "label=value,...")->required();

    int wdim = 1;
    std::string waction = "1";
    std::optional<int> wsign;
    auto* whit = app.add_subcommand("whitney", "Emit a Whitney sphere model");
    whit->add_option("--dim", wdim)->required();
    whit->add_option("--action", waction)->capture_default_str();
    whit->add_option("--sign", wsign);

    auto* feasible = app.add_subcommand("feasible", "Feasibility and a witness for a linear system");
    feasible->add_option("system", path_a)->required();

    std::vector<std::string> argv_store;
    argv_store.emplace_back("legprod");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            auto report = validate_model(load_model(path_a));
            if (opt.pretty) {
                out << (report.ok() ? "ok" : "invalid") << "\n";
                for (const auto& v : report.violations) out << "  violated: " << v << "\n";
            } else {
                emit(out, json::to_json(report));
            }
        } else if (tb->parsed()) {
            auto value = chord_sum_tb(load_model(path_a));
            if (opt.pretty) out << "tb = " << value << "\n";
            else emit(out, {{"tb", value}});
        } else if (product->parsed()) {
            auto K = load_model(path_a), L = load_model(path_b);
            long long value = product_tb(K, L);
            json::json result = {{"tb", value}, {"maslov", maslov_product(K, L)}};
            if (perturb || strict || reject) {
                PerturbOptions po;
                po.duplicates = reject ? DuplicatePolicy::Reject : strict ? DuplicatePolicy::Separate : DuplicatePolicy::Keep;
                auto p = perturb_product(K, L, po);
                result["chords"] = json::to_json(p.chords);
                result["model"] = json::to_json(p.model);
                if (opt.pretty) print_chords(out, p.chords);
            }
            if (opt.pretty) out << "tb(K x L) = " << value << "\n";
            else emit(out, result);
        } else if (triple->parsed()) {
            auto K1 = load_model(path_a), K2 = load_model(path_b), K3 = load_model(path_c);
            if (audit) {
                auto a = triple_vs_iterated(K1, K2, K3);
                if (opt.pretty) {
                    out << "closed form: " << a.closed_form << "\niterated:    " << a.iterated << "\nagree:       " << (a.agree ? "yes" : "no") << "\n";
                } else {
                    emit(out, {{"tb", a.closed_form}, {"closed_form", a.closed_form}, {"iterated", a.iterated}, {"agree", a.agree}});
                }
            } else {
                auto value = triple_tb(K1, K2, K3);
                if (opt.pretty) out << "tb(K1 x K2 x K3) = " << value << "\n";
                else emit(out, {{"tb", value}});
            }
        } else if (spin->parsed()) {
            auto m = frontspin(load_model(path_a));
            if (opt.pretty) {
                print_model(out, m);
                out << "tb = " << chord_sum_tb(m) << "\n";
            } else {
                emit(out, {{"tb", chord_sum_tb(m)}, {"model", json::to_json(m)}});
            }
        } else if (family->parsed()) {
            auto values = infinite_family_tb(load_model(path_a), load_model(path_b), e_label, pairs,
                                             Rational::parse(za_text), Rational::parse(zb_text), sign_from_int(lead));
            if (opt.pretty) {
                Table t({"pairs", "tb"});
                for (std::size_t i = 0; i < values.size(); ++i) t.add({std::to_string(i), std::to_string(values[i])});
                t.print(out);
            } else {
                emit(out, {{"tb_values", values}});
            }
        } else if (diagram->parsed()) {
            auto pd = parse_pd(read_file(path_a));
            bool all = !want_tb && !want_faces && !want_constraints;
            json::json result = json::json::object();
            auto signs = crossing_signs(pd);
            if (all || want_tb) {
                std::vector<int> sv;
                for (Sign s : signs) sv.push_back(value(s));
                result["crossings"] = pd.size();
                result["signs"] = sv;
                result["tb"] = diagram_tb(pd);
            }
            auto fs = faces(pd);
            if (all || want_faces) {
                json::json list = json::json::array();
                for (const auto& f : fs) list.push_back(json::to_json(f));
                result["faces"] = list;
            }
            if (all || want_constraints) result["constraints"] = json::to_json(area_constraints(pd, prefix));
            if (opt.pretty) {
                if (all || want_tb) {
                    Table t({"crossing", "sign"});
                    for (std::size_t i = 0; i < signs.size(); ++i) t.add({crossing_label(prefix, i), signed_str(signs[i])});
                    t.print(out);
                    out << "tb = " << diagram_tb(pd) << "\n";
                }
                if (all || want_faces) {
                    for (std::size_t i = 0; i < fs.size(); ++i) {
                        out << "face " << i + 1 << (fs[i].unbounded ? " (unbounded):" : ":");
                        for (const auto& c : fs[i].corners) out << " " << (c.positive ? "+" : "-") << crossing_label(prefix, c.crossing);
                        out << "\n";
                    }
                }
                if (all || want_constraints) {
                    for (const auto& c : area_constraints(pd, prefix).constraints) out << describe(c) << "\n";
                }
            } else {
                emit(out, result);
            }
        } else if (explore->parsed()) {
            auto triple_names = parse_fixture_triple(fixture_list);
            auto report = tb_range_search(triple_names, fixture_system(triple_names), budget, seed);
            if (opt.pretty) {
                out << "min " << (report.min_found ? std::to_string(*report.min_found) : "-") << ", max "
                    << (report.max_found ? std::to_string(*report.max_found) : "-") << ", " << report.evaluations
                    << " evaluations over " << report.draws << " cells\n";
                Table t({"tb", "witness"});
                for (const auto& [v, point] : report.witnesses) {
                    std::string w;
                    for (const auto& [var, x] : point) w += (w.empty() ? "" : " ") + var + "=" + rational_text(x);
                    t.add({std::to_string(v), w});
                }
                t.print(out);
            } else {
                emit(out, json::to_json(report));
            }
        } else if (fixtures->parsed()) {
            auto f = parse_fixture_name(fixture);
            auto [m, sys] = knot_fixture(f, parse_assignments(actions_text));
            if (opt.pretty) {
                print_model(out, m);
                out << "tb = " << chord_sum_tb(m) << "\n";
                for (const auto& c : sys.constraints) out << describe(c) << "\n";
            } else {
                emit(out, {{"model", json::to_json(m)}, {"constraints", json::to_json(sys)}, {"tb", chord_sum_tb(m)}});
            }
        } else if (whit->parsed()) {
            auto action = Rational::parse(waction);
            auto m = wsign ? whitney(wdim, action, sign_from_int(*wsign)) : whitney(wdim, action);
            if (opt.pretty) print_model(out, m);
            else emit(out, json::to_json(m));
        } else if (feasible->parsed()) {
            auto sys = json::parse_system(read_file(path_a));
            auto point = sample_point(sys);
            if (opt.pretty) {
                out << (point ? "feasible" : "infeasible") << "\n";
                if (point) {
                    for (const auto& [var, x] : *point) out << "  " << var << " = " << rational_text(x) << "\n";
                }
            } else {
                json::json result = {{"feasible", point.has_value()}};
                result["witness"] = point ? json::to_json(*point) : json::json(nullptr);
                emit(out, result);
            }
        }
    } catch (const Error& e) {
        emit(out, {{"error", std::string(e.name())}, {"message", e.detail()}});
        return is_input_error(e.kind()) ? 2 : 1;
    }
    return 0;
}

}  // namespace legprod::cli
