#pragma once

#include "json.hpp"

#include "vir/omega.hpp"
#include "vir/pbw.hpp"
#include "vir/tensor.hpp"

namespace vir {

using nlohmann::json;

/// Rationals travel as strings "p/q".
Scalar scalar_from_json(const json& j);

/// [{degree, coefficient}], ascending degree
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// [[index, exponent], ...]
json partition_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

/// {family, params, terms: [{partition, coeff}]}
json to_json(const PbwModule& mod, const PbwVector& v);
/// Accepts the object form or a bare term list; checks the family tag.
PbwVector pbw_from_json(const PbwModule& mod, const json& j);

/// [{partial_degree, factor_key, coeff}]
json to_json(const TensorVector& v);
TensorVector tensor_from_json(const TensorModule& t, const json& j);

json to_json(const UeaElement& e);
/// [{word: [i, ...], central: p, coeff}]
UeaElement uea_from_json(const json& j);

json to_json(const Truncation& t);

}  // namespace vir
