#include "forest_hopf/operated.hpp"

namespace forest_hopf {

OperatedTarget<Element> hrt_target(const SymbolTable& syms, const std::map<int, int>& rename) {
    for (auto& [from, to] : rename)
        if (syms.kind_of(from) != Kind::X || syms.kind_of(to) != Kind::X)
            throw SymbolError("renames must send X labels to X labels");

    OperatedTarget<Element> t;
    t.unit = Element::unit();
    t.mul = [](const Element& a, const Element& b) { return a * b; };
    t.op = [&syms](Decoration om, const Element& a) {
        Element out;
        for (auto& [f, c] : a.terms()) out.add_term(tree_forest(graft(syms, f, om)), c);
        return out;
    };
    t.gen = [&syms, rename](Decoration x) {
        auto it = rename.find(x.id);
        Decoration target = it == rename.end() ? x : syms.decoration_of(it->second);
        return Element::basis(tree_forest(leaf(syms, target)));
    };
    t.equal = [](const Element& a, const Element& b) { return a == b; };
    return t;
}

OperatedBialgebraTarget hrt_bialgebra_target(const SymbolTable& syms, const HopfContext& ctx) {
    OperatedBialgebraTarget t;
    t.algebra = hrt_target(syms);
    t.cop = [&ctx](const Element& a) { return ctx.coproduct(a); };
    t.cou = [&ctx](const Element& a) { return ctx.counit(a); };
    return t;
}

CheckReport validate_generators(const OperatedBialgebraTarget& t, const SymbolTable& syms) {
    CheckReport rep;
    for (auto x : syms.x_decorations()) {
        ++rep.cases;
        Element gx = t.algebra.gen(x);
        Tensor2 want = tensor(gx, Element::unit()) + tensor(Element::unit(), gx) +
                       Tensor2::term(weight_of(syms, x), Forest{}, Forest{});
        if (!(t.cop(gx) == want))
            rep.violations.push_back("generator '" + syms.label_of(x.id) +
                                     "' is not mu-primitive in the target");
    }
    return rep;
}

CheckReport check_cocycle_target(const OperatedBialgebraTarget& t,
                                 const std::vector<Element>& elems, const SymbolTable& syms) {
    CheckReport rep;
    for (auto& h : elems) {
        for (auto om : syms.omega_decorations()) {
            Poly la = weight_of(syms, om);
            Element oph = t.algebra.op(om, h);

            ++rep.cases;
            Tensor2 lhs = t.cop(oph);
            Tensor2 rhs = tensor(oph, Element::unit()) + tensor(h, Element::unit()).scaled(la) +
                          map_right(t.cop(h), [&](const Forest& g) {
                              return t.algebra.op(om, Element::basis(g));
                          });
            if (!(lhs == rhs))
                rep.violations.push_back("cocycle law fails for operator '" +
                                         syms.label_of(om.id) + "'");

            ++rep.cases;
            if (!(t.cou(oph) == -(la * t.cou(h))))
                rep.violations.push_back("counit-operator law fails for operator '" +
                                         syms.label_of(om.id) + "'");
        }
    }
    return rep;
}

}  // namespace forest_hopf
