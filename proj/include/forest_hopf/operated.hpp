#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "forest_hopf/hopf.hpp"
#include "forest_hopf/text.hpp"

namespace forest_hopf {

// An Omega-operated algebra target: a unital algebra carrier A together with
// one linear operator per Omega label and an image for every X generator.
// mul must be associative with `unit` neutral on the images actually used;
// check_homomorphism spot-tests exactly that.
template <class A>
struct OperatedTarget {
    A unit;
    std::function<A(const A&, const A&)> mul;
    std::function<A(Decoration, const A&)> op;  // omega-indexed operator family
    std::function<A(Decoration)> gen;           // image of the X generator
    std::function<bool(const A&, const A&)> equal;
};

// The universal map out of the free operated algebra: leaves decorated by x
// go to gen(x), grafting to op, juxtaposition to mul (folded left to right).
template <class A>
A evaluate(const Forest& f, const OperatedTarget<A>& t) {
    auto eval_tree = [&](auto&& self, const Tree& tr) -> A {
        if (tr.dec.kind == Kind::X) return t.gen(tr.dec);
        A inner = t.unit;
        bool first = true;
        for (auto& k : tr.kids) {
            A v = self(self, k);
            inner = first ? std::move(v) : t.mul(inner, v);
            first = false;
        }
        return t.op(tr.dec, inner);
    };
    A acc = t.unit;
    bool first = true;
    for (auto& tr : f.trees) {
        A v = eval_tree(eval_tree, tr);
        acc = first ? std::move(v) : t.mul(acc, v);
        first = false;
    }
    return acc;
}

struct CheckReport {
    long long cases = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Verifies evaluate(F G) = mul(evaluate F, evaluate G) over all pairs from
// `forests`, and evaluate(B+_omega F) = op(omega, evaluate F) for every
// registered omega.  The product side exercises associativity and unitality
// of t.mul across every split.
template <class A>
CheckReport check_homomorphism(const OperatedTarget<A>& t, const std::vector<Forest>& forests,
                               const SymbolTable& syms);

// Operated bialgebra target: the algebra structure plus compatible coproduct
// and counit on the same carrier.  Generator images must satisfy
//   cop(gen x) = gen x (x) 1 + mu_x 1 (x) 1 + 1 (x) gen x.
struct OperatedBialgebraTarget {
    OperatedTarget<Element> algebra;
    std::function<Tensor2(const Element&)> cop;
    std::function<Poly(const Element&)> cou;
};

// Eager validation of the generator-primitivity side condition; violations
// name the offending X label.
CheckReport validate_generators(const OperatedBialgebraTarget& t, const SymbolTable& syms);

// Checks the weighted cocycle law and the counit-operator law in the target:
//   cop(op_w h) = op_w(h) (x) 1 + la_w h (x) 1 + (id (x) op_w) cop(h)
//   cou(op_w h) = -la_w cou(h)
CheckReport check_cocycle_target(const OperatedBialgebraTarget& t,
                                 const std::vector<Element>& elems, const SymbolTable& syms);

// H_RT as a target of its own universal map, with the X generators renamed
// by `rename` (intern id -> intern id; identity when empty).  Renames must
// send X labels to X labels.
OperatedTarget<Element> hrt_target(const SymbolTable& syms, const std::map<int, int>& rename = {});
OperatedBialgebraTarget hrt_bialgebra_target(const SymbolTable& syms, const HopfContext& ctx);

// ---- template definitions ----

template <class A>
CheckReport check_homomorphism(const OperatedTarget<A>& t, const std::vector<Forest>& forests,
                               const SymbolTable& syms) {
    CheckReport rep;
    for (auto& f : forests) {
        for (auto& g : forests) {
            ++rep.cases;
            if (!t.equal(evaluate(concat(f, g), t), t.mul(evaluate(f, t), evaluate(g, t))))
                rep.violations.push_back("evaluate is not multiplicative on '" +
                                         print_forest(f, syms) + "' * '" + print_forest(g, syms) +
                                         "'");
        }
        for (auto om : syms.omega_decorations()) {
            ++rep.cases;
            if (!t.equal(evaluate(tree_forest(graft(syms, f, om)), t),
                         t.op(om, evaluate(f, t))))
                rep.violations.push_back("evaluate does not intertwine the '" +
                                         syms.label_of(om.id) + "' operator on '" +
                                         print_forest(f, syms) + "'");
        }
    }
    return rep;
}

}  // namespace forest_hopf
