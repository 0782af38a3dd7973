#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <utility>

#include "forest_hopf/forest.hpp"
#include "forest_hopf/poly.hpp"

namespace forest_hopf {

struct ForestPairLess {
    bool operator()(const std::pair<Forest, Forest>& a, const std::pair<Forest, Forest>& b) const {
        if (auto c = compare(a.first, b.first); c != 0) return c < 0;
        return compare(a.second, b.second) < 0;
    }
};

struct ForestTripleLess {
    using T = std::tuple<Forest, Forest, Forest>;
    bool operator()(const T& a, const T& b) const {
        if (auto c = compare(std::get<0>(a), std::get<0>(b)); c != 0) return c < 0;
        if (auto c = compare(std::get<1>(a), std::get<1>(b)); c != 0) return c < 0;
        return compare(std::get<2>(a), std::get<2>(b)) < 0;
    }
};

// Finite linear combination of basis forests with coefficients in P.
// Zero coefficients are never stored, so == is canonical-form equality.
template <class P>
class BasicElement {
public:
    using TermMap = std::map<Forest, P, ForestLess>;

    BasicElement() = default;
    static BasicElement unit() { return basis(Forest{}); }  // 1 * empty forest
    static BasicElement basis(Forest f) { return term(P(1), std::move(f)); }
    static BasicElement term(P coef, Forest f) {
        BasicElement e;
        e.add_term(std::move(f), std::move(coef));
        return e;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Forest f, P coef) {
        if (coef.is_zero()) return;
        auto it = terms_.find(f);
        if (it == terms_.end()) {
            terms_.emplace(std::move(f), std::move(coef));
        } else {
            it->second += coef;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicElement& operator+=(const BasicElement& o) {
        for (auto& [f, c] : o.terms_) add_term(f, c);
        return *this;
    }
    BasicElement& operator-=(const BasicElement& o) {
        for (auto& [f, c] : o.terms_) add_term(f, -c);
        return *this;
    }
    friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
    friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
    BasicElement operator-() const { return scaled(P(-1)); }

    BasicElement scaled(const P& s) const {
        BasicElement r;
        for (auto& [f, c] : terms_) r.add_term(f, c * s);
        return r;
    }

    // Bilinear extension of forest concatenation (noncommutative).
    friend BasicElement operator*(const BasicElement& a, const BasicElement& b) {
        BasicElement r;
        for (auto& [fa, ca] : a.terms_)
            for (auto& [fb, cb] : b.terms_) r.add_term(concat(fa, fb), ca * cb);
        return r;
    }

    bool operator==(const BasicElement&) const = default;

private:
    TermMap terms_;
};

template <class P>
class BasicTensor2 {
public:
    using Key = std::pair<Forest, Forest>;
    using TermMap = std::map<Key, P, ForestPairLess>;

    BasicTensor2() = default;
    static BasicTensor2 unit() { return basis(Forest{}, Forest{}); }  // 1 (x) 1
    static BasicTensor2 basis(Forest l, Forest r) { return term(P(1), std::move(l), std::move(r)); }
    static BasicTensor2 term(P coef, Forest l, Forest r) {
        BasicTensor2 t;
        t.add_term(std::move(l), std::move(r), std::move(coef));
        return t;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Forest l, Forest r, P coef) {
        if (coef.is_zero()) return;
        Key k{std::move(l), std::move(r)};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), std::move(coef));
        } else {
            it->second += coef;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicTensor2& operator+=(const BasicTensor2& o) {
        for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    BasicTensor2& operator-=(const BasicTensor2& o) {
        for (auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend BasicTensor2 operator+(BasicTensor2 a, const BasicTensor2& b) { return a += b; }
    friend BasicTensor2 operator-(BasicTensor2 a, const BasicTensor2& b) { return a -= b; }

    BasicTensor2 scaled(const P& s) const {
        BasicTensor2 r;
        for (auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
        return r;
    }

    // Componentwise product: (a (x) b)(c (x) d) = ac (x) bd.
    friend BasicTensor2 operator*(const BasicTensor2& a, const BasicTensor2& b) {
        BasicTensor2 r;
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_)
                r.add_term(concat(ka.first, kb.first), concat(ka.second, kb.second), ca * cb);
        return r;
    }

    bool operator==(const BasicTensor2&) const = default;

private:
    TermMap terms_;
};

template <class P>
class BasicTensor3 {
public:
    using Key = std::tuple<Forest, Forest, Forest>;
    using TermMap = std::map<Key, P, ForestTripleLess>;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Forest a, Forest b, Forest c, P coef) {
        if (coef.is_zero()) return;
        Key k{std::move(a), std::move(b), std::move(c)};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), std::move(coef));
        } else {
            it->second += coef;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicTensor3& operator+=(const BasicTensor3& o) {
        for (auto& [k, c] : o.terms_) add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
        return *this;
    }

    bool operator==(const BasicTensor3&) const = default;

private:
    TermMap terms_;
};

using Element = BasicElement<Poly>;
using Tensor2 = BasicTensor2<Poly>;
using Tensor3 = BasicTensor3<Poly>;
using QElement = BasicElement<QPoly>;
using QTensor2 = BasicTensor2<QPoly>;

// a (x) b as an element of the tensor square (bilinear).
template <class P>
BasicTensor2<P> tensor(const BasicElement<P>& a, const BasicElement<P>& b) {
    BasicTensor2<P> r;
    for (auto& [fa, ca] : a.terms())
        for (auto& [fb, cb] : b.terms()) r.add_term(fa, fb, ca * cb);
    return r;
}

// Linear extension of a basis map phi: Forest -> Element.
template <class P, class Fn>
BasicElement<P> apply_linear(const BasicElement<P>& a, Fn&& phi) {
    BasicElement<P> r;
    for (auto& [f, c] : a.terms()) r += phi(f).scaled(c);
    return r;
}

std::function<Element(const Element&)> lift_linear(std::function<Element(const Forest&)> phi);

// id (x) phi and phi (x) id on tensors, phi: Forest -> Element.
template <class P, class Fn>
BasicTensor2<P> map_right(const BasicTensor2<P>& t, Fn&& phi) {
    BasicTensor2<P> r;
    for (auto& [k, c] : t.terms()) {
        const auto img = phi(k.second);
        for (auto& [f, cc] : img.terms()) r.add_term(k.first, f, c * cc);
    }
    return r;
}

template <class P, class Fn>
BasicTensor2<P> map_left(const BasicTensor2<P>& t, Fn&& phi) {
    BasicTensor2<P> r;
    for (auto& [k, c] : t.terms()) {
        const auto img = phi(k.first);
        for (auto& [f, cc] : img.terms()) r.add_term(f, k.second, c * cc);
    }
    return r;
}

// (phi (x) id) and (id (x) phi) for phi: Forest -> Tensor2, landing in the
// triple tensor; these realize (Delta (x) id) and (id (x) Delta).
template <class P, class Fn>
BasicTensor3<P> expand_left(const BasicTensor2<P>& t, Fn&& phi) {
    BasicTensor3<P> r;
    for (auto& [k, c] : t.terms()) {
        const auto img = phi(k.first);
        for (auto& [kk, cc] : img.terms()) r.add_term(kk.first, kk.second, k.second, c * cc);
    }
    return r;
}

template <class P, class Fn>
BasicTensor3<P> expand_right(const BasicTensor2<P>& t, Fn&& phi) {
    BasicTensor3<P> r;
    for (auto& [k, c] : t.terms()) {
        const auto img = phi(k.second);
        for (auto& [kk, cc] : img.terms()) r.add_term(k.first, kk.first, kk.second, c * cc);
    }
    return r;
}

QElement specialize(const Element& e, const Specialization& s);
QTensor2 specialize(const Tensor2& t, const Specialization& s);

}  // namespace forest_hopf
