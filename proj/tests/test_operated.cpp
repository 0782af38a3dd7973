#include <doctest.h>

#include <map>

#include "forest_hopf/enumerate.hpp"
#include "forest_hopf/operated.hpp"
#include "helpers.hpp"

using namespace forest_hopf;

namespace {

SymbolTable table_abxy() {
    SymbolTable t;
    t.add_omega("a");
    t.add_omega("b");
    t.add_x("x");
    t.add_x("y");
    return t;
}

}  // namespace

TEST_CASE("evaluation into the forest algebra itself is the identity") {
    auto syms = table_abx();
    auto t = hrt_target(syms);
    for (const char* src : {"1", "x", "a", "a[x]", "x a b[x]", "b[a[x] x]"}) {
        auto f = fp(src, syms);
        CHECK(evaluate(f, t) == Element::basis(f));
    }
}

TEST_CASE("renamed evaluation substitutes X decorations") {
    auto syms = table_abxy();
    auto x = syms.require("x");
    auto y = syms.require("y");
    auto a = syms.require("a");

    auto t = hrt_target(syms, {{x.id, y.id}});
    CHECK(evaluate(fp("a[x x]", syms), t) == Element::basis(fp("a[y y]", syms)));
    CHECK(evaluate(fp("x y", syms), t) == Element::basis(fp("y y", syms)));
    CHECK(evaluate(fp("a[b]", syms), t) == Element::basis(fp("a[b]", syms)));

    CHECK_THROWS_AS(hrt_target(syms, {{x.id, a.id}}), SymbolError);
    CHECK_THROWS_AS(hrt_target(syms, {{a.id, y.id}}), SymbolError);
}

TEST_CASE("homomorphism check passes for the canonical target") {
    auto syms = table_abx();
    auto forests = forests_up_to(2, syms);
    auto rep = check_homomorphism(hrt_target(syms), forests, syms);
    CHECK(rep.ok());
    const long long n = static_cast<long long>(forests.size());
    CHECK(rep.cases == n * n + n * 2);  // all pairs plus one graft per operator
}

TEST_CASE("homomorphism check flags a non-associative pairing") {
    auto syms = table_abx();
    auto t = hrt_target(syms);
    t.mul = [](const Element& p, const Element& q) { return p * q * q; };
    auto rep = check_homomorphism(t, forests_up_to(1, syms), syms);
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.front().find("multiplicative") != std::string::npos);
}

TEST_CASE("generator side condition validation") {
    auto syms = table_abx();
    HopfContext ctx(syms);
    auto good = hrt_bialgebra_target(syms, ctx);
    CHECK(validate_generators(good, syms).ok());

    auto bad = hrt_bialgebra_target(syms, ctx);
    bad.cop = [](const Element& h) { return tensor(h, Element::unit()); };
    auto rep = validate_generators(bad, syms);
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.front().find("'x'") != std::string::npos);
}

TEST_CASE("cocycle and counit-operator laws in the bialgebra target") {
    auto syms = table_abx();
    HopfContext ctx(syms);
    auto t = hrt_bialgebra_target(syms, ctx);

    std::vector<Element> elems = {
        Element::unit(),
        Element::basis(fp("x", syms)),
        Element::basis(fp("a[x]", syms)),
        Element::basis(fp("x", syms)) + Element::basis(fp("a", syms)).scaled(Poly(2)),
    };
    auto rep = check_cocycle_target(t, elems, syms);
    CHECK(rep.ok());
    CHECK(rep.cases == static_cast<long long>(elems.size()) * 2 * 2);

    // a target whose operators forget the cocycle correction fails
    auto broken = hrt_bialgebra_target(syms, ctx);
    broken.cop = [&](const Element& h) {
        // strips every term with a nontrivial left slot
        Tensor2 out;
        const auto d = ctx.coproduct(h);
        for (auto& [k, c] : d.terms())
            if (k.first.empty()) out.add_term(k.first, k.second, c);
        return out;
    };
    CHECK_FALSE(check_cocycle_target(broken, elems, syms).ok());
}
