#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

#include "forest_hopf/linear.hpp"

namespace forest_hopf {

// The weighted Hopf-algebra structure on decorated planar forests over the
// coefficient ring Z[la_*, mu_*].  Stateless apart from a guarded coproduct
// memo, so a single context may be shared across threads.
class HopfContext {
public:
    using LinearMap = std::function<Element(const Element&)>;

    explicit HopfContext(const SymbolTable& syms);
    const SymbolTable& symbols() const { return *syms_; }

    // Lambda: replaces every leaf by itself plus its weight, one factor per
    // leaf; internal vertices are untouched.  Lambda(1) = 1.
    Element leaf_tilde(const Forest& f) const;

    // Weighted coproduct, primary recursive formulation.
    Tensor2 coproduct(const Forest& f) const;
    Tensor2 coproduct(const Element& e) const;

    // Independent formulation: sum of G (x) Lambda(F/G) over subforests G.
    Tensor2 coproduct_cuts(const Forest& f) const;
    Tensor2 coproduct_cuts(const Element& e) const;

    // Counit, recursive formulation, extended linearly.
    Poly counit(const Forest& f) const;
    Poly counit(const Element& e) const;

    // Closed form: (-1)^deg(f) times the product of all vertex weights.
    Poly counit_closed(const Forest& f) const;

    // u.eps: a |-> counit(a) * 1.
    Element unit_counit(const Element& a) const;

    // Largest degree of a basis forest occurring in a; throws
    // std::domain_error on the zero element.
    int filtration_degree(const Element& a) const;

    // Convolution (phi * psi)(a) = m (phi (x) psi) Delta(a) for linear maps.
    Element convolve(const LinearMap& phi, const LinearMap& psi, const Element& a) const;

    // Antipode via the finite convolution-geometric series: with
    // e = u.eps - id, S(a) = sum_{k=0}^{deg a} e^{*k}(a) term by term.
    Element antipode(const Element& a) const;
    Element antipode(const Forest& f) const;

private:
    Tensor2 coproduct_tree(const Tree& t) const;

    const SymbolTable* syms_;
    struct TreeHash {
        std::size_t operator()(const Tree& t) const { return hash_of(t); }
    };
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<Tree, Tensor2, TreeHash> tree_memo_;
    mutable std::map<Forest, Element, ForestLess> antipode_memo_;
};

}  // namespace forest_hopf
