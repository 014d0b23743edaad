#pragma once

// Text and JSON forms of parameters, elements, statistics, tableaux and
// series. Permutations are 1-based in every external form.

#include <string>

#include <json.hpp>

#include "prg/characters.hpp"
#include "prg/cyclotomic.hpp"
#include "prg/group.hpp"
#include "prg/series.hpp"
#include "prg/stats.hpp"
#include "prg/tableaux.hpp"

namespace prg {

using Json = nlohmann::json;

/// "r,p,q,n" -> validated parameters.
GroupParams parse_params(const std::string& text);
Json params_to_json(const GroupParams& params);
GroupParams params_from_json(const Json& j);
std::string params_label(const GroupParams& params);  // "G(r,p,q,n)"

/// "2 7 6 4 8 1 5 3; 2 3 3 5 1 7 3 2"
Element parse_element(const std::string& text, const GroupParams& params);
std::string format_element(const Element& g);
Json element_to_json(const Element& g);
Element element_from_json(const Json& j, const GroupParams& params);

Json profile_to_json(const StatProfile& prof);

Json partition_to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);
Json shape_to_json(const MultiShape& shape);
MultiShape shape_from_json(const Json& j);
Json shape_class_to_json(const ShapeClass& mu);

/// {"components": [[row, ...], ...]}
Json tableau_to_json(const MultiTableau& t);
MultiTableau tableau_from_json(const Json& j);

/// [{"exps": [...], "coef": c}, ...] sorted by exponent.
Json series_to_json(const PartitionSeries& series);
/// Dense coefficient array.
Json poly_to_json(const UniPoly& poly);
Json cyclotomic_to_json(const Cyclotomic& x);

/// "2:1,1:0" -> {(2,1),(1,0)}; colors reduced mod r.
CycleType parse_cycle_type(const std::string& text, int r);

}  // namespace prg
