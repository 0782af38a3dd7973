#include "forest_hopf/linear.hpp"

namespace forest_hopf {

std::function<Element(const Element&)> lift_linear(std::function<Element(const Forest&)> phi) {
    return [phi = std::move(phi)](const Element& a) { return apply_linear(a, phi); };
}

QElement specialize(const Element& e, const Specialization& s) {
    QElement r;
    for (auto& [f, c] : e.terms()) r.add_term(f, specialize(c, s));
    return r;
}

QTensor2 specialize(const Tensor2& t, const Specialization& s) {
    QTensor2 r;
    for (auto& [k, c] : t.terms()) r.add_term(k.first, k.second, specialize(c, s));
    return r;
}

}  // namespace forest_hopf
