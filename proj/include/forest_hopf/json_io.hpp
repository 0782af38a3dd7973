#pragma once

#include <json.hpp>

#include "forest_hopf/linear.hpp"

namespace forest_hopf {

using Json = nlohmann::json;

// Forests serialize as arrays of {"d": label, "c": [children]} nodes; the
// empty array is the unit.  Reading validates structure, labels and kinds.
Json forest_to_json(const Forest& f, const SymbolTable& syms);
Forest forest_from_json(const Json& j, const SymbolTable& syms);

Json poly_to_json(const Poly& p, const SymbolTable& syms);
Json poly_to_json(const QPoly& p, const SymbolTable& syms);

Json element_to_json(const Element& e, const SymbolTable& syms);
Json element_to_json(const QElement& e, const SymbolTable& syms);

Json tensor2_to_json(const Tensor2& t, const SymbolTable& syms);
Json tensor2_to_json(const QTensor2& t, const SymbolTable& syms);

}  // namespace forest_hopf
