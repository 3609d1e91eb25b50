#pragma once

#include <nlohmann/json.hpp>

#include "lgtoric/laurent.hpp"
#include "lgtoric/mutation.hpp"

namespace lgtoric {

/// Term-list form: [[coefficient_decimal_string, [e1,e2,e3]], ...] sorted by exponent.
nlohmann::json terms_to_json(const LaurentPolynomial& f);
LaurentPolynomial terms_from_json(const nlohmann::json& j, int dim = 3); // throws SchemaError

nlohmann::json mutation_to_json(const MutationData& d);
MutationData mutation_from_json(const nlohmann::json& j); // throws SchemaError

} // namespace lgtoric
