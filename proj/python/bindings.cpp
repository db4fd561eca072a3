// Thin JSON-text bridge: the Python package converts between dicts/Fractions and these strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "legprod/diagram.hpp"
#include "legprod/errors.hpp"
#include "legprod/explore.hpp"
#include "legprod/fixtures.hpp"
#include "legprod/json_io.hpp"
#include "legprod/product.hpp"
#include "legprod/triple.hpp"

namespace py = pybind11;
using namespace legprod;
using Json = nlohmann::json;

namespace {

LegendrianModel model(const std::string& text) { return json::parse_model(text); }
std::string dump(const Json& j) { return j.dump(); }

DuplicatePolicy parse_policy(const std::string& name) {
    if (name == "keep") return DuplicatePolicy::Keep;
    if (name == "separate") return DuplicatePolicy::Separate;
    if (name == "reject") return DuplicatePolicy::Reject;
    throw Error(ErrorKind::ParseError, "unknown duplicate policy '" + name + "'");
}

FixtureTriple fixture_triple(const std::vector<std::string>& names) {
    if (names.size() != 3) throw Error(ErrorKind::ParseError, "expected three fixture names");
    return {parse_fixture_name(names[0]), parse_fixture_name(names[1]), parse_fixture_name(names[2])};
}

}  // namespace

PYBIND11_MODULE(_legprod, m) {
    m.doc() = "Exact invariants of Legendrian products";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::tuple args = py::make_tuple(std::string(e.name()), e.detail());
            PyErr_SetObject(error.ptr(), args.ptr());
        }
    });

    m.def("whitney", [](int n, const std::string& action, std::optional<int> sign) {
        auto a = Rational::parse(action);
        return dump(json::to_json(sign ? whitney(n, a, sign_from_int(*sign)) : whitney(n, a)));
    }, py::arg("n"), py::arg("action"), py::arg("sign") = py::none());
    m.def("validate", [](const std::string& k) { return validate_model(model(k)).violations; });
    m.def("chord_sum_tb", [](const std::string& k) { return chord_sum_tb(model(k)); });
    m.def("stabilize", [](const std::string& k, const std::string& za, const std::string& zb, int sign) {
        return dump(json::to_json(
            stabilize_with_cancelling_pair(model(k), Rational::parse(za), Rational::parse(zb), sign_from_int(sign))));
    });
    m.def("tau", [](const std::string& za, const std::string& zb, int n, int mm) {
        return value(tau(Rational::parse(za), Rational::parse(zb), n, mm));
    });
    m.def("product_tb", [](const std::string& k, const std::string& l) { return product_tb(model(k), model(l)); });
    m.def("maslov_product", [](const std::string& k, const std::string& l) { return maslov_product(model(k), model(l)); });
    m.def("perturb_product", [](const std::string& k, const std::string& l, const std::string& policy) {
        auto p = perturb_product(model(k), model(l), {parse_policy(policy), {}});
        return std::make_pair(dump(json::to_json(p.chords)), dump(json::to_json(p.model)));
    });
    m.def("frontspin", [](const std::string& l) { return dump(json::to_json(frontspin(model(l)))); });
    m.def("infinite_family_tb", [](const std::string& k, const std::string& l, const std::string& e, int pairs,
                                   const std::string& za, const std::string& zb, int sign) {
        return infinite_family_tb(model(k), model(l), e, pairs, Rational::parse(za), Rational::parse(zb),
                                  sign_from_int(sign));
    });
    m.def("triple_tau", [](const std::string& a, const std::string& b, const std::string& c) {
        return triple_tau(Rational::parse(a), Rational::parse(b), Rational::parse(c));
    });
    m.def("triple_tb", [](const std::string& a, const std::string& b, const std::string& c) {
        return triple_tb(model(a), model(b), model(c));
    });
    m.def("triple_vs_iterated", [](const std::string& a, const std::string& b, const std::string& c) {
        auto r = triple_vs_iterated(model(a), model(b), model(c));
        return py::make_tuple(r.closed_form, r.iterated, r.agree);
    });
    m.def("knot_fixture", [](const std::string& name, const std::string& actions) {
        auto [km, sys] = knot_fixture(parse_fixture_name(name), json::assignment_from_json(json::parse(actions)));
        return std::make_pair(dump(json::to_json(km)), dump(json::to_json(sys)));
    });
    m.def("diagram_signs", [](const std::string& text) {
        std::vector<int> out;
        for (Sign s : crossing_signs(parse_pd(text))) out.push_back(value(s));
        return out;
    });
    m.def("diagram_tb", [](const std::string& text) { return diagram_tb(parse_pd(text)); });
    m.def("diagram_faces", [](const std::string& text) {
        Json list = Json::array();
        for (const auto& f : faces(parse_pd(text))) list.push_back(json::to_json(f));
        return dump(list);
    });
    m.def("area_constraints", [](const std::string& text, const std::string& prefix) {
        return dump(json::to_json(area_constraints(parse_pd(text), prefix)));
    });
    m.def("is_feasible", [](const std::string& sys) { return is_feasible(json::parse_system(sys)); });
    m.def("sample_point", [](const std::string& sys) -> std::optional<std::string> {
        auto p = sample_point(json::parse_system(sys));
        if (!p) return std::nullopt;
        return dump(json::to_json(*p));
    });
    m.def("tb_range_search", [](const std::vector<std::string>& names, int budget, std::uint64_t seed) {
        auto fx = fixture_triple(names);
        // The search is pure C++; let other Python threads run meanwhile.
        py::gil_scoped_release release;
        return dump(json::to_json(tb_range_search(fx, fixture_system(fx), budget, seed)));
    });
}
