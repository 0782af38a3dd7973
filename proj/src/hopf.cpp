#include "forest_hopf/hopf.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace forest_hopf {

HopfContext::HopfContext(const SymbolTable& syms) : syms_(&syms) {
    if (syms.omega_decorations().empty())
        throw SymbolError("the Omega alphabet must be nonempty");
}

Element HopfContext::leaf_tilde(const Forest& f) const {
    Element acc = Element::unit();
    for (auto& t : f.trees) {
        Element factor;
        if (t.kids.empty()) {
            // leaf |-> leaf + its weight
            factor = Element::basis(tree_forest(t));
            factor.add_term(Forest{}, weight_of(*syms_, t.dec));
        } else {
            // tilde touches only leaves, so it commutes with grafting
            const Element inner = leaf_tilde(Forest{t.kids});
            for (auto& [g, c] : inner.terms())
                factor.add_term(tree_forest(Tree{t.dec, g.trees}), c);
        }
        acc = acc * factor;
    }
    return acc;
}

Tensor2 HopfContext::coproduct_tree(const Tree& t) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        if (auto it = tree_memo_.find(t); it != tree_memo_.end()) return it->second;
    }

    Tensor2 r = Tensor2::basis(tree_forest(t), Forest{});  // T (x) 1
    if (t.dec.kind == Kind::X) {
        r.add_term(Forest{}, tree_forest(t), Poly(1));     // 1 (x) T
        r.add_term(Forest{}, Forest{}, weight_of(*syms_, t.dec));
    } else {
        Forest kids{t.kids};
        Tensor2 inner = coproduct(kids);
        r += Tensor2::term(weight_of(*syms_, t.dec), kids, Forest{});
        for (auto& [k, c] : inner.terms())                 // (id (x) B+) Delta(kids)
            r.add_term(k.first, tree_forest(Tree{t.dec, k.second.trees}), c);
    }

    std::lock_guard<std::mutex> lock(memo_mutex_);
    tree_memo_.emplace(t, r);
    return r;
}

Tensor2 HopfContext::coproduct(const Forest& f) const {
    Tensor2 acc = Tensor2::unit();
    for (auto& t : f.trees) acc = acc * coproduct_tree(t);
    return acc;
}

Tensor2 HopfContext::coproduct(const Element& e) const {
    Tensor2 acc;
    for (auto& [f, c] : e.terms()) acc += coproduct(f).scaled(c);
    return acc;
}

Tensor2 HopfContext::coproduct_cuts(const Forest& f) const {
    Tensor2 acc;
    for (auto& [g, q] : subforest_pairs(f)) {
        const Element lt = leaf_tilde(q);
        for (auto& [h, c] : lt.terms()) acc.add_term(g, h, c);
    }
    return acc;
}

Tensor2 HopfContext::coproduct_cuts(const Element& e) const {
    Tensor2 acc;
    for (auto& [f, c] : e.terms()) acc += coproduct_cuts(f).scaled(c);
    return acc;
}

Poly HopfContext::counit(const Forest& f) const {
    Poly out(1);
    for (auto& t : f.trees) {
        // eps(leaf_x) = -mu_x; eps(B+_omega(g)) = -la_omega * eps(g)
        Poly factor = -weight_of(*syms_, t.dec);
        if (!t.kids.empty()) factor *= counit(Forest{t.kids});
        out *= factor;
    }
    return out;
}

Poly HopfContext::counit(const Element& e) const {
    Poly out;
    for (auto& [f, c] : e.terms()) out += c * counit(f);
    return out;
}

Poly HopfContext::counit_closed(const Forest& f) const {
    Monomial weights;
    int deg = 0;
    // collect every vertex weight, with repetition, in one pre-order sweep
    auto walk = [&](auto&& self, const Tree& t) -> void {
        weights = weights * Monomial::variable(t.dec.id);
        ++deg;
        for (auto& k : t.kids) self(self, k);
    };
    for (auto& t : f.trees) walk(walk, t);
    return Poly::term(Int(deg % 2 == 0 ? 1 : -1), weights);
}

Element HopfContext::unit_counit(const Element& a) const {
    return Element::term(counit(a), Forest{});
}

int HopfContext::filtration_degree(const Element& a) const {
    if (a.is_zero()) throw std::domain_error("the zero element has no filtration degree");
    int best = 0;
    for (auto& [f, c] : a.terms()) best = std::max(best, degree(f));
    return best;
}

Element HopfContext::convolve(const LinearMap& phi, const LinearMap& psi, const Element& a) const {
    Element out;
    const Tensor2 d = coproduct(a);
    for (auto& [k, c] : d.terms())
        out += (phi(Element::basis(k.first)) * psi(Element::basis(k.second))).scaled(c);
    return out;
}

Element HopfContext::antipode(const Forest& f) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        if (auto it = antipode_memo_.find(f); it != antipode_memo_.end()) return it->second;
    }

    // S = sum_{k>=0} e^{*k} with e = u.eps - id; on a forest of degree n the
    // series stops at k = n because e vanishes in degree zero.
    std::map<std::pair<int, Forest>, Element, bool (*)(const std::pair<int, Forest>&,
                                                       const std::pair<int, Forest>&)>
        memo([](const std::pair<int, Forest>& a, const std::pair<int, Forest>& b) {
            if (a.first != b.first) return a.first < b.first;
            return compare(a.second, b.second) < 0;
        });

    auto e_map = [&](const Forest& g) {
        Element r = Element::term(counit(g), Forest{});
        r.add_term(g, Poly(-1));
        return r;
    };

    auto e_pow = [&](auto&& self, int k, const Forest& g) -> Element {
        if (k == 0) return Element::term(counit(g), Forest{});
        auto key = std::make_pair(k, g);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Element out;
        const Tensor2 d = coproduct(g);
        for (auto& [pair, c] : d.terms())
            out += (self(self, k - 1, pair.first) * e_map(pair.second)).scaled(c);
        memo.emplace(std::move(key), out);
        return out;
    };

    Element s;
    const int n = degree(f);
    for (int k = 0; k <= n; ++k) s += e_pow(e_pow, k, f);

    std::lock_guard<std::mutex> lock(memo_mutex_);
    return antipode_memo_.emplace(f, std::move(s)).first->second;
}

Element HopfContext::antipode(const Element& a) const {
    Element out;
    for (auto& [f, c] : a.terms()) out += antipode(f).scaled(c);
    return out;
}

}  // namespace forest_hopf
