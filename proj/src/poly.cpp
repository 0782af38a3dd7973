#include "forest_hopf/poly.hpp"

namespace forest_hopf {

Poly weight_of(const SymbolTable& syms, Decoration d) {
    if (d.id < 0 || d.id >= syms.size() || syms.kind_of(d.id) != d.kind)
        throw UnknownLabelError("weight_of: decoration is not registered");
    return Poly::variable(d.id);
}

QPoly specialize(const Poly& p, const Specialization& s) {
    QPoly out;
    for (auto& [mono, coef] : p.terms()) {
        Rational value(coef);
        Monomial rest;
        for (auto& [id, exp] : mono.factors()) {
            if (auto v = s.value(id)) {
                for (int k = 0; k < exp; ++k) value *= *v;
            } else {
                rest = rest * Monomial::power(id, exp);
            }
        }
        out += QPoly::term(value, rest);
    }
    return out;
}

}  // namespace forest_hopf
