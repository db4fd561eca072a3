#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "legprod/diagram.hpp"
#include "legprod/explore.hpp"
#include "legprod/feasibility.hpp"
#include "legprod/model.hpp"
#include "legprod/product.hpp"

namespace legprod::json {

using nlohmann::json;

// Rationals travel as "p/q" strings; "p" and bare JSON integers are accepted on input.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const LegendrianModel& m);
LegendrianModel model_from_json(const json& j);

json to_json(const ValidationReport& r);

json to_json(const PerturbedChord& c);
json to_json(const std::vector<PerturbedChord>& chords);
std::vector<PerturbedChord> chords_from_json(const json& j);

json to_json(const Assignment& a);
Assignment assignment_from_json(const json& j);

json to_json(const LinearSystem& sys);
LinearSystem system_from_json(const json& j);

json to_json(const Face& f);
json to_json(const SearchReport& r);

// Parse helpers that turn nlohmann exceptions into Error(ParseError).
json parse(const std::string& text);
LegendrianModel parse_model(const std::string& text);
LinearSystem parse_system(const std::string& text);

}  // namespace legprod::json
