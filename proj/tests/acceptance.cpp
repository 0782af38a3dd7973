// Acceptance gate for the weighted Hopf algebra of decorated planar rooted
// forests.  Each criterion is exact symbolic (or exact rational) equality,
// timed, and reported as a single pass/fail line; any failure or budget
// overrun fails the run.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forest_hopf/enumerate.hpp"
#include "forest_hopf/hopf.hpp"
#include "forest_hopf/operated.hpp"
#include "forest_hopf/text.hpp"

using namespace forest_hopf;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

SymbolTable table_abx() {
    SymbolTable t;
    t.add_omega("a");
    t.add_omega("b");
    t.add_x("x");
    return t;
}

// ---------------------------------------------------------------- criterion 1

void crit_worked_example(std::string& note) {
    SymbolTable syms;
    syms.add_omega("a");
    syms.add_omega("b");
    syms.add_omega("c");
    syms.add_x("x");
    HopfContext ctx(syms);
    auto F = [&](const char* s) { return parse_forest(s, syms); };
    const Poly la_a = weight_of(syms, syms.require("a"));
    const Poly la_b = weight_of(syms, syms.require("b"));
    const Poly la_c = weight_of(syms, syms.require("c"));
    const Poly mu_x = weight_of(syms, syms.require("x"));

    // the four reference coproducts
    {
        Tensor2 want = Tensor2::basis(F("x"), F("1")) + Tensor2::basis(F("1"), F("x")) +
                       Tensor2::term(mu_x, F("1"), F("1"));
        expect(ctx.coproduct(F("x")) == want, "coproduct of the generator leaf");
    }
    {
        Tensor2 want = Tensor2::basis(F("a"), F("1")) + Tensor2::basis(F("1"), F("a")) +
                       Tensor2::term(la_a, F("1"), F("1"));
        expect(ctx.coproduct(F("a")) == want, "coproduct of the operator leaf");
    }
    {
        Tensor2 want = Tensor2::basis(F("a[x]"), F("1")) + Tensor2::basis(F("x"), F("a")) +
                       Tensor2::basis(F("1"), F("a[x]")) + Tensor2::term(la_a, F("x"), F("1")) +
                       Tensor2::term(mu_x, F("1"), F("a"));
        expect(ctx.coproduct(F("a[x]")) == want, "coproduct of the two-vertex tree");
    }
    const auto T = F("a[c b[x]]");
    Tensor2 display;
    {
        auto add = [&](Poly c, const char* l, const char* r) {
            display += Tensor2::term(std::move(c), F(l), F(r));
        };
        add(Poly(1), "a[c b[x]]", "1");
        add(Poly(1), "c", "a[b[x]]");
        add(mu_x, "c", "a[b]");
        add(Poly(1), "b[x]", "a[c]");
        add(la_c, "b[x]", "a");
        add(Poly(1), "x", "a[c b]");
        add(la_b, "x", "a[c]");
        add(la_c, "x", "a[b]");
        add(la_b * la_c, "x", "a");
        add(Poly(1), "c b[x]", "a");
        add(la_a, "c b[x]", "1");
        add(Poly(1), "c x", "a[b]");
        add(la_b, "c x", "a");
        add(Poly(1), "1", "a[c b[x]]");
        add(mu_x, "1", "a[c b]");
        add(la_c, "1", "a[b[x]]");
        add(la_c * mu_x, "1", "a[b]");
        expect(display.terms().size() == 17, "reference display should have 17 terms");
        expect(ctx.coproduct(T) == display, "the 17-term coproduct of the four-vertex tree");
    }

    // the subforest/quotient/tilde table for the same tree, all columns pinned
    struct Row {
        const char* g;
        const char* q;
        Element tilde;
    };
    auto E = [&](const char* s) { return Element::basis(F(s)); };
    auto ET = [&](Poly c, const char* s) { return Element::term(std::move(c), F(s)); };
    const std::vector<Row> rows = {
        {"1", "a[c b[x]]",
         E("a[c b[x]]") + ET(mu_x, "a[c b]") + ET(la_c, "a[b[x]]") + ET(la_c * mu_x, "a[b]")},
        {"c", "a[b[x]]", E("a[b[x]]") + ET(mu_x, "a[b]")},
        {"x", "a[c b]", E("a[c b]") + ET(la_b, "a[c]") + ET(la_c, "a[b]") + ET(la_b * la_c, "a")},
        {"b[x]", "a[c]", E("a[c]") + ET(la_c, "a")},
        {"c x", "a[b]", E("a[b]") + ET(la_b, "a")},
        {"c b[x]", "a", E("a") + ET(la_a, "1")},
        {"a[c b[x]]", "1", E("1")},
    };

    auto pairs = subforest_pairs(T);
    expect(pairs.size() == rows.size(), "the example tree has exactly 7 subforest pairs");
    std::vector<std::pair<Forest, Forest>> want_pairs;
    for (auto& r : rows) want_pairs.emplace_back(F(r.g), F(r.q));
    std::sort(pairs.begin(), pairs.end(), ForestPairLess{});
    std::sort(want_pairs.begin(), want_pairs.end(), ForestPairLess{});
    expect(pairs == want_pairs, "subforest/quotient columns of the reference table");

    Tensor2 assembled;
    for (auto& r : rows) {
        expect(ctx.leaf_tilde(F(r.q)) == r.tilde,
               std::string("tilde column for quotient ") + r.q);
        for (auto& [q, c] : r.tilde.terms()) assembled.add_term(F(r.g), q, c);
    }
    expect(assembled == display, "table rows assemble to the 17-term coproduct");
    note = "4 coproduct displays, 7-row table";
}

// ---------------------------------------------------------------- criterion 2

void crit_formulations(std::string& note) {
    auto syms = table_abx();
    HopfContext ctx(syms);
    auto all = forests_up_to(4, syms);
    for (auto& f : all)
        expect(ctx.coproduct(f) == ctx.coproduct_cuts(f),
               "formulations differ on " + print_forest(f, syms));
    note = std::to_string(all.size()) + " forests through degree 4";
}

// ---------------------------------------------------------------- criterion 3

void crit_bialgebra(std::string& note) {
    auto syms = table_abx();
    HopfContext ctx(syms);
    auto all = forests_up_to(4, syms);
    auto delta = [&](const Forest& g) { return ctx.coproduct(g); };
    long long cases = 0;

    for (auto& f : all) {
        const auto d = ctx.coproduct(f);
        expect(expand_left(d, delta) == expand_right(d, delta),
               "coassociativity fails on " + print_forest(f, syms));
        Element left, right;
        for (auto& [k, c] : d.terms()) {
            left.add_term(k.second, c * ctx.counit(k.first));
            right.add_term(k.first, c * ctx.counit(k.second));
        }
        const auto self = Element::basis(f);
        expect(left == self, "left counit law fails on " + print_forest(f, syms));
        expect(right == self, "right counit law fails on " + print_forest(f, syms));
        cases += 3;
    }

    for (auto& f : all) {
        for (auto& g : all) {
            if (degree(f) + degree(g) > 4) break;  // sorted by degree
            expect(ctx.coproduct(concat(f, g)) == ctx.coproduct(f) * ctx.coproduct(g),
                   "coproduct is not multiplicative on " + print_forest(f, syms) + " | " +
                       print_forest(g, syms));
            expect(ctx.counit(concat(f, g)) == ctx.counit(f) * ctx.counit(g),
                   "counit is not multiplicative on " + print_forest(f, syms) + " | " +
                       print_forest(g, syms));
            cases += 2;
        }
    }
    note = std::to_string(cases) + " cases through degree 4";
}

// ---------------------------------------------------------------- criterion 4

void crit_cocycle(std::string& note) {
    auto syms = table_abx();
    HopfContext ctx(syms);
    auto all = forests_up_to(3, syms);
    long long cases = 0;
    for (auto om : syms.omega_decorations()) {
        const Poly la = weight_of(syms, om);
        for (auto& f : all) {
            const auto bf = tree_forest(graft(syms, f, om));
            Tensor2 want = Tensor2::basis(bf, Forest{}) + Tensor2::term(la, f, Forest{}) +
                           map_right(ctx.coproduct(f), [&](const Forest& g) {
                               return Element::basis(tree_forest(graft(syms, g, om)));
                           });
            expect(ctx.coproduct(bf) == want,
                   "cocycle law fails for " + syms.label_of(om.id) + " on " +
                       print_forest(f, syms));
            expect(ctx.counit(bf) == -(la * ctx.counit(f)),
                   "counit-operator law fails for " + syms.label_of(om.id) + " on " +
                       print_forest(f, syms));
            cases += 2;
        }
    }
    note = std::to_string(cases) + " cases, both operators, through degree 3";
}

// ---------------------------------------------------------------- criterion 5

void crit_antipode(std::string& note) {
    auto syms = table_abx();
    HopfContext ctx(syms);
    const Poly mu = weight_of(syms, syms.require("x"));
    const auto X = parse_forest("x", syms);

    expect(ctx.antipode(Forest{}) == Element::unit(), "antipode of the unit");
    expect(ctx.antipode(X) == -Element::basis(X) - Element::term(Poly(2) * mu, Forest{}),
           "antipode of the generator leaf");

    auto all = forests_up_to(4, syms);
    for (auto& f : all) {
        const auto d = ctx.coproduct(f);
        Element left, right;
        for (auto& [k, c] : d.terms()) {
            left += (ctx.antipode(k.first) * Element::basis(k.second)).scaled(c);
            right += (Element::basis(k.first) * ctx.antipode(k.second)).scaled(c);
        }
        const auto ue = ctx.unit_counit(Element::basis(f));
        expect(left == ue, "left antipode identity fails on " + print_forest(f, syms));
        expect(right == ue, "right antipode identity fails on " + print_forest(f, syms));
    }
    note = std::to_string(all.size()) + " forests through degree 4, both sides";
}

// ---------------------------------------------------------------- criterion 6

void crit_counit_closed(std::string& note) {
    auto syms = table_abx();
    HopfContext ctx(syms);
    auto all = forests_up_to(5, syms);
    for (auto& f : all)
        expect(ctx.counit(f) == ctx.counit_closed(f),
               "counit forms differ on " + print_forest(f, syms));
    note = std::to_string(all.size()) + " forests through degree 5";
}

// ---------------------------------------------------------------- criterion 7

void crit_generator_words(std::string& note) {
    SymbolTable syms;
    syms.add_omega("a");
    std::vector<Decoration> xs;
    for (int i = 1; i <= 5; ++i) xs.push_back(syms.add_x("x" + std::to_string(i)));
    HopfContext ctx(syms);

    // index words into xs: all-distinct, all-equal, and mixed repetitions
    std::vector<std::vector<int>> words;
    for (int m = 1; m <= 5; ++m) {
        std::vector<int> w(m);
        for (int i = 0; i < m; ++i) w[i] = i;
        words.push_back(w);
    }
    for (int m = 2; m <= 5; ++m) words.push_back(std::vector<int>(m, 0));
    words.push_back({0, 1, 0});
    words.push_back({0, 0, 1, 1});
    words.push_back({1, 0, 1, 0, 1});

    long long cases = 0;
    for (auto& w : words) {
        const int m = static_cast<int>(w.size());
        Forest f;
        for (int i : w) f.trees.push_back(leaf(syms, xs[i]));

        // every position joins the weight factor, the left word or the right
        // word: mu_I (word_K (x) word_L) summed over the 3^m assignments
        long long total = 1;
        for (int i = 0; i < m; ++i) total *= 3;
        Tensor2 want;
        for (long long code = 0; code < total; ++code) {
            Poly coef(1);
            Forest l, r;
            long long rem = code;
            for (int i = 0; i < m; ++i) {
                const int digit = static_cast<int>(rem % 3);
                rem /= 3;
                if (digit == 0)
                    coef *= weight_of(syms, xs[w[i]]);
                else if (digit == 1)
                    l.trees.push_back(leaf(syms, xs[w[i]]));
                else
                    r.trees.push_back(leaf(syms, xs[w[i]]));
            }
            want.add_term(std::move(l), std::move(r), std::move(coef));
        }
        expect(ctx.coproduct(f) == want,
               "double-sum formula fails on the word " + print_forest(f, syms));
        cases += total;
    }
    note = std::to_string(words.size()) + " words, " + std::to_string(cases) + " summands";
}

// ---------------------------------------------------------------- criterion 8

void crit_filtration(std::string& note) {
    auto syms = table_abx();
    HopfContext ctx(syms);
    auto all = forests_up_to(5, syms);
    long long terms = 0;
    for (auto& f : all) {
        const int n = degree(f);
        const auto d = ctx.coproduct(f);
        for (auto& [k, c] : d.terms()) {
            expect(degree(k.first) + degree(k.second) <= n,
                   "coproduct term exceeds the filtration bound on " + print_forest(f, syms));
            ++terms;
        }
    }
    // strictness witness: the weight term of the generator coproduct sits in
    // strictly lower total degree
    const auto d = ctx.coproduct(parse_forest("x", syms));
    auto it = d.terms().find({Forest{}, Forest{}});
    expect(it != d.terms().end() && it->second == weight_of(syms, syms.require("x")),
           "missing strictly-degree-dropping coproduct term");
    note = std::to_string(terms) + " tensor terms through degree 5";
}

// ---------------------------------------------------------------- criterion 9

// Rational-arithmetic re-implementation of the structure maps for a fully
// assigned weight specialization, built only from the cut formulation and the
// closed counit form.
class RationalOracle {
public:
    RationalOracle(const SymbolTable& syms, const Specialization& s) : syms_(&syms), s_(&s) {}

    QTensor2 coproduct(const Forest& f) const {
        QTensor2 r;
        for (auto& [g, q] : subforest_pairs(f)) {
            const auto tq = tilde(q);
            for (auto& [qq, c] : tq.terms()) r.add_term(g, qq, c);
        }
        return r;
    }

    QPoly counit(const Forest& f) const {
        Rational prod = 1;
        int n = 0;
        auto walk = [&](auto&& self, const Tree& t) -> void {
            prod *= w(t.dec);
            ++n;
            for (auto& k : t.kids) self(self, k);
        };
        for (auto& t : f.trees) walk(walk, t);
        if (n % 2) prod = -prod;
        return QPoly(prod);
    }

    QElement antipode(const Forest& f) const {
        QElement total;
        for (int k = 0; k <= degree(f); ++k) total += e_pow(k, f);
        return total;
    }

private:
    Rational w(Decoration d) const { return *s_->value(d.id); }

    QElement tilde(const Forest& f) const {
        QElement acc = QElement::unit();
        for (auto& t : f.trees) acc = acc * tilde_tree(t);
        return acc;
    }
    QElement tilde_tree(const Tree& t) const {
        if (t.kids.empty())
            return QElement::basis(tree_forest(t)) + QElement::term(QPoly(w(t.dec)), Forest{});
        const auto inner = tilde(Forest{t.kids});
        QElement out;
        for (auto& [g, c] : inner.terms()) out.add_term(tree_forest(Tree{t.dec, g.trees}), c);
        return out;
    }

    // e = u.eps - id; e^{*k}(f) by convolution against the cut coproduct
    QElement e_pow(int k, const Forest& f) const {
        if (k == 0) return QElement::term(counit(f), Forest{});
        const auto key = std::make_pair(k, f);
        if (auto it = epow_.find(key); it != epow_.end()) return it->second;
        QElement out;
        const auto d = memo_coproduct(f);
        for (auto& [pair, c] : d.terms()) {
            const QElement lhs = e_pow(k - 1, pair.first);
            const QElement rhs =
                QElement::term(counit(pair.second), Forest{}) - QElement::basis(pair.second);
            out += (lhs * rhs).scaled(c);
        }
        epow_.emplace(key, out);
        return out;
    }

    const QTensor2& memo_coproduct(const Forest& f) const {
        if (auto it = cop_.find(f); it != cop_.end()) return it->second;
        return cop_.emplace(f, coproduct(f)).first->second;
    }

    struct KeyLess {
        bool operator()(const std::pair<int, Forest>& a, const std::pair<int, Forest>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return compare(a.second, b.second) < 0;
        }
    };
    const SymbolTable* syms_;
    const Specialization* s_;
    mutable std::map<std::pair<int, Forest>, QElement, KeyLess> epow_;
    mutable std::map<Forest, QTensor2, ForestLess> cop_;
};

void crit_specialization(std::string& note) {
    auto syms = table_abx();
    HopfContext ctx(syms);
    auto all = forests_up_to(4, syms);

    // zero weights collapse the coproduct to the classical cut sum
    const auto zero = Specialization::all_zero(syms);
    for (auto& f : all) {
        QTensor2 classical;
        for (auto& [g, q] : subforest_pairs(f)) classical.add_term(g, q, QPoly(1));
        expect(specialize(ctx.coproduct(f), zero) == classical,
               "zero-weight coproduct is not the classical cut sum on " + print_forest(f, syms));
    }

    // random total assignments: specializing commutes with all structure maps
    std::mt19937 rng(20260814u);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int rep = 0; rep < 5; ++rep) {
        Specialization s;
        for (int id = 0; id < syms.size(); ++id) s.assign(id, Rational(num(rng), den(rng)));
        RationalOracle oracle(syms, s);
        for (auto& f : all) {
            expect(specialize(ctx.coproduct(f), s) == oracle.coproduct(f),
                   "coproduct does not commute with assignment " + std::to_string(rep) + " on " +
                       print_forest(f, syms));
            expect(specialize(ctx.counit(f), s) == oracle.counit(f),
                   "counit does not commute with assignment " + std::to_string(rep) + " on " +
                       print_forest(f, syms));
            expect(specialize(ctx.antipode(f), s) == oracle.antipode(f),
                   "antipode does not commute with assignment " + std::to_string(rep) + " on " +
                       print_forest(f, syms));
        }
    }
    note = std::to_string(all.size()) + " forests, 5 rational assignments";
}

// --------------------------------------------------------------- criterion 10

Poly transport_weights(const Poly& p, int from, int to) {
    Poly out;
    for (auto& [m, c] : p.terms()) {
        Monomial swapped;
        for (auto& [id, e] : m.factors()) {
            const int mapped = id == from ? to : id == to ? from : id;
            swapped = swapped * Monomial::power(mapped, e);
        }
        out.add_term(swapped, c);
    }
    return out;
}

void crit_operated(std::string& note) {
    SymbolTable syms;
    syms.add_omega("a");
    syms.add_omega("b");
    auto x = syms.add_x("x");
    auto y = syms.add_x("y");
    HopfContext ctx(syms);
    auto all = forests_up_to(3, syms);

    // the identity evaluation is an operated bialgebra endomorphism
    auto bt = hrt_bialgebra_target(syms, ctx);
    expect(validate_generators(bt, syms).ok(), "generator side condition fails");
    expect(check_homomorphism(bt.algebra, all, syms).ok(),
           "identity evaluation is not an operated-algebra homomorphism");
    for (auto& f : all) {
        const auto img = evaluate(f, bt.algebra);
        expect(img == Element::basis(f), "universal map does not fix " + print_forest(f, syms));
        expect(bt.cop(img) == ctx.coproduct(f),
               "evaluation does not commute with the coproduct on " + print_forest(f, syms));
        expect(bt.cou(img) == ctx.counit(f),
               "evaluation does not commute with the counit on " + print_forest(f, syms));
    }

    // the generator swap is an operated-algebra homomorphism whose coalgebra
    // intertwining transports the weights along the swap
    const std::map<int, int> swap{{x.id, y.id}, {y.id, x.id}};
    auto swapped = hrt_target(syms, swap);
    expect(check_homomorphism(swapped, all, syms).ok(),
           "swapped evaluation is not an operated-algebra homomorphism");
    auto sw = [&](const Poly& p) { return transport_weights(p, x.id, y.id); };
    for (auto& f : all) {
        const auto img = evaluate(f, swapped);
        Tensor2 rhs;
        const auto d = ctx.coproduct(f);
        for (auto& [k, c] : d.terms())
            rhs += tensor(evaluate(k.first, swapped), evaluate(k.second, swapped)).scaled(sw(c));
        expect(ctx.coproduct(img) == rhs,
               "swap equivariance of the coproduct fails on " + print_forest(f, syms));
        expect(ctx.counit(img) == sw(ctx.counit(f)),
               "swap equivariance of the counit fails on " + print_forest(f, syms));
    }

    // negative control: without transporting the weights the swapped target
    // is not an operated bialgebra map, and the generator check says so
    OperatedBialgebraTarget raw;
    raw.algebra = hrt_target(syms, swap);
    raw.cop = [&](const Element& e) { return ctx.coproduct(e); };
    raw.cou = [&](const Element& e) { return ctx.counit(e); };
    auto rep = validate_generators(raw, syms);
    expect(!rep.ok(), "negative control unexpectedly passed");
    expect(rep.violations.front().find("'x'") != std::string::npos,
           "negative control does not name the offending generator");

    note = std::to_string(all.size()) + " forests, identity + swap + negative control";
}

// --------------------------------------------------------------- criterion 11

void crit_enumeration(std::string& note) {
    auto syms = table_abx();
    const std::uint64_t cat[] = {1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n)
        expect(shapes(n).size() == cat[n], "shape count at " + std::to_string(n));

    const std::uint64_t expected[] = {1, 3, 15, 93, 645, 4791};
    for (int n = 0; n <= 5; ++n) {
        std::uint64_t total = 0;
        for (auto& s : shapes(n)) {
            std::uint64_t ways = 1;
            for (int i = 0; i < shape_internal(s); ++i) ways *= 2;  // operator labels
            for (int i = 0; i < shape_leaves(s); ++i) ways *= 3;    // all labels
            total += ways;
        }
        expect(total == expected[n], "product formula at " + std::to_string(n));
        expect(decorated_count(n, syms) == expected[n],
               "decorated count at " + std::to_string(n));
    }

    auto all = forests_up_to(4, syms);
    expect(all.size() == 757, "cumulative count through degree 4");
    for (auto& f : all)
        expect(parse_forest(print_forest(f, syms), syms) == f,
               "round trip fails on " + print_forest(f, syms));
    note = "counts 1,3,15,93,645,4791; 757 round trips";
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    void (*run)(std::string&);
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked examples reproduced term for term", 1.0, crit_worked_example},
        {2, "recursive and cut coproducts agree through degree 4", 60.0, crit_formulations},
        {3, "bialgebra laws hold exhaustively through degree 4", 60.0, crit_bialgebra},
        {4, "cocycle and counit-operator laws through degree 3", 10.0, crit_cocycle},
        {5, "antipode is the two-sided convolution inverse through degree 4", 120.0,
         crit_antipode},
        {6, "closed counit form matches the recursion through degree 5", 30.0,
         crit_counit_closed},
        {7, "generator-word coproduct double sum", 10.0, crit_generator_words},
        {8, "coproduct respects the degree filtration", 30.0, crit_filtration},
        {9, "specialization commutes with the structure maps", 60.0, crit_specialization},
        {10, "universal evaluation is an operated bialgebra map", 30.0, crit_operated},
        {11, "enumeration counts and parser round trips", 10.0, crit_enumeration},
    };

    bool all_ok = true;
    for (auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string note;
        try {
            c.run(note);
        } catch (const std::exception& ex) {
            ok = false;
            note = ex.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ms > c.budget_seconds * 1000.0) {
            ok = false;
            note += (note.empty() ? "" : "; ");
            note += "exceeded the " + std::to_string(c.budget_seconds) + "s budget";
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title
                  << " (" << static_cast<long long>(ms) << " ms";
        if (!note.empty()) std::cout << "; " << note;
        std::cout << ")\n";
        all_ok = all_ok && ok;
    }
    std::cout << (all_ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << "\n";
    return all_ok ? 0 : 1;
}
