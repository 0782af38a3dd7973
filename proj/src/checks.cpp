#include "forest_hopf/checks.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "forest_hopf/enumerate.hpp"
#include "forest_hopf/text.hpp"

namespace forest_hopf {

namespace {

// Structure maps recomputed directly in rational arithmetic for one total
// weight assignment: coproduct through the cut formulation, counit through
// the closed form, antipode through the convolution series.  Used to verify
// that specializing the symbolic results commutes with everything.
struct QModel {
    const SymbolTable& syms;
    std::map<int, Rational> w;

    Rational weight(Decoration d) const { return w.at(d.id); }

    QElement tilde(const Forest& f) const {
        QElement acc = QElement::unit();
        for (auto& t : f.trees) {
            QElement factor;
            if (t.kids.empty()) {
                factor = QElement::basis(tree_forest(t));
                factor.add_term(Forest{}, QPoly(weight(t.dec)));
            } else {
                const QElement inner = tilde(Forest{t.kids});
                for (auto& [g, c] : inner.terms())
                    factor.add_term(tree_forest(Tree{t.dec, g.trees}), c);
            }
            acc = acc * factor;
        }
        return acc;
    }

    QTensor2 coproduct(const Forest& f) const {
        QTensor2 acc;
        for (auto& [g, q] : subforest_pairs(f)) {
            const QElement lt = tilde(q);
            for (auto& [h, c] : lt.terms()) acc.add_term(g, h, c);
        }
        return acc;
    }

    Rational counit(const Forest& f) const {
        Rational out(degree(f) % 2 == 0 ? 1 : -1);
        auto walk = [&](auto&& self, const Tree& t) -> void {
            out *= weight(t.dec);
            for (auto& k : t.kids) self(self, k);
        };
        for (auto& t : f.trees) walk(walk, t);
        return out;
    }

    QElement antipode(const Forest& f) const {
        auto e_map = [&](const Forest& g) {
            QElement r = QElement::term(QPoly(counit(g)), Forest{});
            r.add_term(g, QPoly(-1));
            return r;
        };
        std::map<std::pair<int, Forest>, QElement,
                 bool (*)(const std::pair<int, Forest>&, const std::pair<int, Forest>&)>
            memo([](const std::pair<int, Forest>& a, const std::pair<int, Forest>& b) {
                if (a.first != b.first) return a.first < b.first;
                return compare(a.second, b.second) < 0;
            });
        auto e_pow = [&](auto&& self, int k, const Forest& g) -> QElement {
            if (k == 0) return QElement::term(QPoly(counit(g)), Forest{});
            auto key = std::make_pair(k, g);
            if (auto it = memo.find(key); it != memo.end()) return it->second;
            QElement out;
            const QTensor2 d = coproduct(g);
            for (auto& [pair, c] : d.terms())
                out += (self(self, k - 1, pair.first) * e_map(pair.second)).scaled(c);
            memo.emplace(std::move(key), out);
            return out;
        };
        QElement s;
        for (int k = 0; k <= degree(f); ++k) s += e_pow(e_pow, k, f);
        return s;
    }
};

struct Runner {
    const SymbolTable& syms;
    const CheckOptions& opt;
    HopfContext ctx;
    std::vector<Forest> forests;
    std::vector<CheckResult> results;

    Runner(const SymbolTable& s, const CheckOptions& o)
        : syms(s), opt(o), ctx(s), forests(forests_up_to(o.max_degree, s)) {}

    std::string name_of(const Forest& f) const { return print_forest(f, syms); }

    // Runs `body` over all forests in canonical order; body returns an empty
    // string on success or a counterexample description.
    void forest_law(const char* name, const std::function<std::string(const Forest&)>& body) {
        CheckResult r;
        r.name = name;
        for (auto& f : forests) {
            ++r.cases;
            std::string ce = body(f);
            if (!ce.empty()) {
                r.ok = false;
                r.counterexample = ce;
                break;
            }
        }
        results.push_back(std::move(r));
    }

    // Same over pairs whose degrees sum to at most max_degree, so products
    // stay inside the enumerated window.
    void pair_law(const char* name,
                  const std::function<std::string(const Forest&, const Forest&)>& body) {
        CheckResult r;
        r.name = name;
        for (auto& f : forests) {
            for (auto& g : forests) {
                if (degree(f) + degree(g) > opt.max_degree) continue;
                ++r.cases;
                std::string ce = body(f, g);
                if (!ce.empty()) {
                    r.ok = false;
                    r.counterexample = ce;
                    break;
                }
            }
            if (!r.ok) break;
        }
        results.push_back(std::move(r));
    }

    void run_group(const std::string& g);
};

void Runner::run_group(const std::string& g) {
    auto delta = [this](const Forest& f) { return ctx.coproduct(f); };

    if (g == "coassoc") {
        forest_law("coassociativity", [&](const Forest& f) -> std::string {
            Tensor2 d = ctx.coproduct(f);
            Tensor3 lhs = expand_left(d, delta);
            Tensor3 rhs = expand_right(d, delta);
            if (lhs == rhs) return {};
            return "(Delta (x) id)Delta != (id (x) Delta)Delta on " + name_of(f);
        });
    } else if (g == "counit") {
        forest_law("counit-left", [&](const Forest& f) -> std::string {
            Element out;
            const Tensor2 d = ctx.coproduct(f);
            for (auto& [k, c] : d.terms()) out.add_term(k.second, c * ctx.counit(k.first));
            if (out == Element::basis(f)) return {};
            return "(eps (x) id)Delta != id on " + name_of(f) + ": got " +
                   print_element(out, syms);
        });
        forest_law("counit-right", [&](const Forest& f) -> std::string {
            Element out;
            const Tensor2 d = ctx.coproduct(f);
            for (auto& [k, c] : d.terms()) out.add_term(k.first, c * ctx.counit(k.second));
            if (out == Element::basis(f)) return {};
            return "(id (x) eps)Delta != id on " + name_of(f) + ": got " +
                   print_element(out, syms);
        });
    } else if (g == "bialgebra") {
        pair_law("coproduct-multiplicative", [&](const Forest& f, const Forest& g2) -> std::string {
            if (ctx.coproduct(concat(f, g2)) == ctx.coproduct(f) * ctx.coproduct(g2)) return {};
            return "Delta(FG) != Delta(F)Delta(G) for F = " + name_of(f) + ", G = " + name_of(g2);
        });
        pair_law("counit-multiplicative", [&](const Forest& f, const Forest& g2) -> std::string {
            if (ctx.counit(concat(f, g2)) == ctx.counit(f) * ctx.counit(g2)) return {};
            return "eps(FG) != eps(F)eps(G) for F = " + name_of(f) + ", G = " + name_of(g2);
        });
    } else if (g == "cocycle") {
        forest_law("weighted-cocycle", [&](const Forest& f) -> std::string {
            for (auto om : syms.omega_decorations()) {
                Forest grafted = tree_forest(graft(syms, f, om));
                Tensor2 lhs = ctx.coproduct(grafted);
                Tensor2 rhs = Tensor2::basis(grafted, Forest{}) +
                              Tensor2::term(weight_of(syms, om), f, Forest{}) +
                              map_right(ctx.coproduct(f), [&](const Forest& h) {
                                  return Element::basis(tree_forest(graft(syms, h, om)));
                              });
                if (!(lhs == rhs))
                    return "cocycle law fails for B+_" + syms.label_of(om.id) + " on " + name_of(f);
            }
            return {};
        });
        forest_law("counit-operator", [&](const Forest& f) -> std::string {
            for (auto om : syms.omega_decorations()) {
                Poly lhs = ctx.counit(tree_forest(graft(syms, f, om)));
                Poly rhs = -(weight_of(syms, om) * ctx.counit(f));
                if (!(lhs == rhs))
                    return "eps(B+_" + syms.label_of(om.id) + " F) != -la*eps(F) on " + name_of(f);
            }
            return {};
        });
    } else if (g == "antipode") {
        HopfContext::LinearMap s_map = [this](const Element& a) { return ctx.antipode(a); };
        HopfContext::LinearMap id_map = [](const Element& a) { return a; };
        forest_law("antipode-left", [&](const Forest& f) -> std::string {
            Element lhs = ctx.convolve(s_map, id_map, Element::basis(f));
            if (lhs == ctx.unit_counit(Element::basis(f))) return {};
            return "m(S (x) id)Delta != u.eps on " + name_of(f) + ": got " +
                   print_element(lhs, syms);
        });
        forest_law("antipode-right", [&](const Forest& f) -> std::string {
            Element lhs = ctx.convolve(id_map, s_map, Element::basis(f));
            if (lhs == ctx.unit_counit(Element::basis(f))) return {};
            return "m(id (x) S)Delta != u.eps on " + name_of(f) + ": got " +
                   print_element(lhs, syms);
        });
    } else if (g == "equivalence") {
        forest_law("coproduct-formulations", [&](const Forest& f) -> std::string {
            Tensor2 rec = ctx.coproduct(f);
            Tensor2 cut = ctx.coproduct_cuts(f);
            if (rec == cut) return {};
            return "recursive and cut coproducts differ on " + name_of(f) + ": " +
                   print_tensor2(rec, syms) + " vs " + print_tensor2(cut, syms);
        });
        forest_law("counit-formulations", [&](const Forest& f) -> std::string {
            if (ctx.counit(f) == ctx.counit_closed(f)) return {};
            return "recursive and closed counits differ on " + name_of(f);
        });
    } else if (g == "specialization") {
        forest_law("zero-weight-degeneration", [&](const Forest& f) -> std::string {
            Specialization zero = Specialization::all_zero(syms);
            QTensor2 lhs = specialize(ctx.coproduct(f), zero);
            QTensor2 rhs;
            for (auto& [sub, quo] : subforest_pairs(f)) rhs.add_term(sub, quo, QPoly(1));
            if (lhs == rhs) return {};
            return "zero-weight coproduct is not the classical cut coproduct on " + name_of(f);
        });

        CheckResult r;
        r.name = "specialization-commute";
        std::mt19937 rng(opt.seed);
        std::uniform_int_distribution<int> num(-5, 5);
        std::uniform_int_distribution<int> den(1, 4);
        for (int k = 0; k < opt.seed_specializations && r.ok; ++k) {
            Specialization sigma;
            QModel qm{syms, {}};
            for (int i = 0; i < syms.size(); ++i) {
                Rational v(num(rng), den(rng));
                sigma.assign(i, v);
                qm.w[i] = v;
            }
            for (auto& f : forests) {
                ++r.cases;
                if (!(specialize(ctx.coproduct(f), sigma) == qm.coproduct(f)) ||
                    !(specialize(ctx.counit(f), sigma) == QPoly(qm.counit(f))) ||
                    !(specialize(ctx.antipode(f), sigma) == qm.antipode(f))) {
                    r.ok = false;
                    r.counterexample =
                        "specialization " + std::to_string(k) + " disagrees on " + name_of(f);
                    break;
                }
            }
        }
        results.push_back(std::move(r));
    } else {
        throw std::invalid_argument("unknown check group '" + g + "'");
    }
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& which, const SymbolTable& syms,
                                    const CheckOptions& opt) {
    static const std::vector<std::string> groups = {"coassoc",  "counit",      "bialgebra",
                                                    "cocycle",  "antipode",    "equivalence",
                                                    "specialization"};
    Runner runner(syms, opt);
    if (which == "all") {
        for (auto& g : groups) runner.run_group(g);
    } else {
        runner.run_group(which);
    }
    return runner.results;
}

}  // namespace forest_hopf
