#pragma once

// JSON serialization of the exact artifacts. Rationals appear as strings
// ("p/q" or "p"), polynomial entries as their canonical string form; both
// re-parse to equal in-memory values.

#include <json.hpp>

#include "hcw/cartanweyl.hpp"
#include "hcw/ksmap.hpp"
#include "hcw/matrix.hpp"

namespace hcw {

nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json poly_matrix_to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const nlohmann::json& j, const VarList& vars);

nlohmann::json quadratic_map_to_json(const ksmap::QuadraticMap& m);
ksmap::QuadraticMap quadratic_map_from_json(const nlohmann::json& j);

nlohmann::json generator_set_to_json(const cartanweyl::GeneratorSet& g,
                                     const cartanweyl::CommutatorTable& table);
cartanweyl::GeneratorSet generator_set_from_json(const nlohmann::json& j);

std::vector<Rational> rationals_from_json(const nlohmann::json& j);
nlohmann::json rationals_to_json(const std::vector<Rational>& v);

}  // namespace hcw
