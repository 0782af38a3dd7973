#include <doctest.h>

#include <stdexcept>

#include "forest_hopf/poly.hpp"
#include "forest_hopf/text.hpp"
#include "helpers.hpp"

using namespace forest_hopf;

TEST_CASE("monomials multiply as sparse exponent vectors") {
    auto m = Monomial::variable(0) * Monomial::power(2, 3) * Monomial::variable(0);
    CHECK(m.exponent(0) == 2);
    CHECK(m.exponent(2) == 3);
    CHECK(m.exponent(1) == 0);
    CHECK(m.total_degree() == 5);
    CHECK(Monomial{}.is_unit());
    CHECK(Monomial::power(0, 0).is_unit());
    CHECK(Monomial::variable(1) * Monomial{} == Monomial::variable(1));
    CHECK(Monomial::variable(1) * Monomial::variable(0) ==
          Monomial::variable(0) * Monomial::variable(1));
}

TEST_CASE("monomial order puts the constant lowest and earlier symbols higher") {
    Monomial unit;
    auto v0 = Monomial::variable(0);
    auto v1 = Monomial::variable(1);
    CHECK(unit < v0);
    CHECK(unit < v1);
    CHECK(v1 < v0);  // earlier-declared symbol dominates
    CHECK(v0 < Monomial::power(0, 2));
    CHECK(Monomial::power(1, 5) < v0);
    CHECK(v0 * v1 < Monomial::power(0, 2));
    CHECK(v0 < v0 * v1);
}

TEST_CASE("polynomial arithmetic keeps canonical form") {
    auto la = Poly::variable(0);
    auto mu = Poly::variable(2);
    auto p = la * mu + Poly(1);
    CHECK((p - p).is_zero());
    CHECK((p - p).terms().empty());
    CHECK((p * Poly(0)).is_zero());
    CHECK((la + mu) * (la - mu) == la * la - mu * mu);
    CHECK(Poly(3).is_constant());
    CHECK(Poly(3).constant_value() == 3);
    CHECK(Poly{}.constant_value() == 0);
    CHECK_THROWS_AS(p.constant_value(), std::logic_error);
    CHECK(Poly(1).is_one());
    CHECK_FALSE(p.is_one());
    CHECK((la * la * mu).total_degree() == 3);
    CHECK((-p) + p == Poly{});
}

TEST_CASE("weights attach to registered decorations only") {
    auto syms = table_abx();
    auto a = syms.require("a");
    auto x = syms.require("x");
    CHECK(weight_of(syms, a) == Poly::variable(a.id));
    CHECK(weight_of(syms, x) == Poly::variable(x.id));
    CHECK(syms.weight_name(a.id) == "la_a");
    CHECK(syms.weight_name(x.id) == "mu_x");
    CHECK_THROWS_AS(weight_of(syms, Decoration{Kind::X, 99}), UnknownLabelError);
    CHECK_THROWS_AS(weight_of(syms, Decoration{Kind::Omega, x.id}), UnknownLabelError);
    CHECK(syms.find_weight_name("la_b") == syms.require("b").id);
    CHECK_FALSE(syms.find_weight_name("mu_a").has_value());
    CHECK_FALSE(syms.find_weight_name("la_z").has_value());
}

TEST_CASE("symbol table rejects malformed and duplicate labels") {
    SymbolTable t;
    t.add_omega("a");
    CHECK_THROWS_AS(t.add_x("a"), SymbolError);       // duplicate across kinds
    CHECK_THROWS_AS(t.add_x("2x"), SymbolError);      // not an identifier
    CHECK_THROWS_AS(t.add_omega(""), SymbolError);
    CHECK_THROWS_AS(t.add_omega("b c"), SymbolError);
    CHECK_THROWS_AS(t.require("zz"), UnknownLabelError);
    t.add_x("x");
    CHECK(t.size() == 2);
    CHECK(t.kind_of(0) == Kind::Omega);
    CHECK(t.label_of(1) == "x");
    CHECK(t.x_decorations().size() == 1);
    CHECK(t.omega_decorations().size() == 1);
}

TEST_CASE("polynomial printing is descending with la before mu") {
    auto syms = table_abx();
    const int a = syms.require("a").id;
    const int x = syms.require("x").id;
    Poly p = Poly::term(Int(3), Monomial::power(a, 2) * Monomial::variable(x)) + Poly(1);
    CHECK(print_poly(p, syms) == "3*la_a^2*mu_x + 1");
    CHECK(print_poly(Poly::variable(x) - Poly::variable(a), syms) == "-la_a + mu_x");
    CHECK(print_poly(Poly{}, syms) == "0");
    CHECK(print_poly(-Poly(7), syms) == "-7");

    PrintOptions latex;
    latex.latex = true;
    CHECK(print_poly(p, syms, latex) == "3\\lambda_{a}^{2}\\mu_{x} + 1");

    QPoly half = QPoly(Rational(1, 2)) * QPoly::variable(x);
    CHECK(print_poly(half, syms) == "1/2*mu_x");
}

TEST_CASE("specialization is a ring homomorphism") {
    auto syms = table_abx();
    const int a = syms.require("a").id;
    const int b = syms.require("b").id;
    const int x = syms.require("x").id;
    Specialization s;
    s.assign(a, Rational(1, 2));
    s.assign(x, Rational(-3));

    Poly p = Poly::variable(a) * Poly::variable(x) + Poly(2);
    Poly q = Poly::variable(b) - Poly::variable(a);
    CHECK(specialize(p * q, s) == specialize(p, s) * specialize(q, s));
    CHECK(specialize(p + q, s) == specialize(p, s) + specialize(q, s));

    // assigned symbols evaluate, the rest stay symbolic
    CHECK(specialize(Poly::variable(a), s).constant_value() == Rational(1, 2));
    CHECK(specialize(Poly::variable(b), s) == QPoly::variable(b));
    CHECK(specialize(p, s).constant_value() == Rational(1, 2));  // -3/2 + 2

    auto zero = Specialization::all_zero(syms);
    CHECK(specialize(Poly::variable(a) * Poly::variable(x) + Poly(7), zero).constant_value() == 7);
    CHECK(specialize(Poly::variable(b), zero).is_zero());
}
