#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "forest_hopf/symbols.hpp"

namespace forest_hopf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Power product of weight indeterminates: a sparse exponent vector, sorted
// by symbol id, exponents strictly positive.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(int sym_id) { return power(sym_id, 1); }
    static Monomial power(int sym_id, int exp) {
        Monomial m;
        if (exp > 0) m.factors_.emplace_back(sym_id, exp);
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < factors_.size() || j < o.factors_.size()) {
            if (j == o.factors_.size() ||
                (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
                r.factors_.push_back(factors_[i++]);
            } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
                r.factors_.push_back(o.factors_[j++]);
            } else {
                r.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
                ++i, ++j;
            }
        }
        return r;
    }

    int exponent(int sym_id) const {
        for (auto& [id, e] : factors_)
            if (id == sym_id) return e;
        return 0;
    }

    bool is_unit() const { return factors_.empty(); }
    int total_degree() const {
        int d = 0;
        for (auto& [id, e] : factors_) d += e;
        return d;
    }
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    bool operator==(const Monomial&) const = default;

    // Lexicographic in symbol declaration order: at the first symbol where
    // the exponents differ, the monomial with the larger exponent is larger.
    // The empty monomial is the minimum, so ascending map iteration puts the
    // constant term first and printing walks the map in reverse.
    std::strong_ordering operator<=>(const Monomial& o) const {
        std::size_t i = 0, j = 0;
        while (i < factors_.size() && j < o.factors_.size()) {
            auto [ida, ea] = factors_[i];
            auto [idb, eb] = o.factors_[j];
            if (ida != idb)
                return ida < idb ? std::strong_ordering::greater : std::strong_ordering::less;
            if (ea != eb) return ea > eb ? std::strong_ordering::greater : std::strong_ordering::less;
            ++i, ++j;
        }
        if (i < factors_.size()) return std::strong_ordering::greater;
        if (j < o.factors_.size()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

private:
    std::vector<std::pair<int, int>> factors_;  // (symbol id, exponent > 0)
};

// Multivariate polynomial with exact coefficients.  Zero coefficients are
// never stored, so operator== is structural equality of canonical forms.
template <class Coef>
class BasicPoly {
public:
    using TermMap = std::map<Monomial, Coef>;

    BasicPoly() = default;
    BasicPoly(int c) { *this = BasicPoly(Coef(c)); }
    BasicPoly(Coef c) {
        if (c != 0) terms_.emplace(Monomial{}, std::move(c));
    }
    static BasicPoly variable(int sym_id) { return term(Coef(1), Monomial::variable(sym_id)); }
    static BasicPoly term(Coef c, Monomial m) {
        BasicPoly p;
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return is_constant() && terms_.begin()->second == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    // Requires is_constant().
    Coef constant_value() const {
        if (terms_.empty()) return Coef(0);
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms_.begin()->second;
    }
    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    void add_term(const Monomial& m, const Coef& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, Coef(-c));
        return *this;
    }
    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    BasicPoly operator-() const {
        BasicPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, Coef(-c));
        return r;
    }
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, Coef(ca * cb));
        return r;
    }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    bool operator==(const BasicPoly&) const = default;

private:
    TermMap terms_;
};

using Poly = BasicPoly<Int>;    // coefficients in Z[la_*, mu_*]
using QPoly = BasicPoly<Rational>;

// The weight of a decorated vertex as a degree-one monomial: mu_x for X
// labels, la_omega for Omega labels.  The decoration must be registered.
Poly weight_of(const SymbolTable& syms, Decoration d);

// Partial assignment of rational values to weight indeterminates.
class Specialization {
public:
    void assign(int sym_id, Rational value) { values_[sym_id] = std::move(value); }
    std::optional<Rational> value(int sym_id) const {
        auto it = values_.find(sym_id);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }
    const std::map<int, Rational>& assignments() const { return values_; }
    bool empty() const { return values_.empty(); }

    static Specialization all_zero(const SymbolTable& syms) {
        Specialization s;
        for (int i = 0; i < syms.size(); ++i) s.assign(i, Rational(0));
        return s;
    }

private:
    std::map<int, Rational> values_;
};

// Evaluates the assigned indeterminates and keeps the rest symbolic; a total
// assignment therefore yields a constant.  This is a ring homomorphism.
QPoly specialize(const Poly& p, const Specialization& s);

}  // namespace forest_hopf
