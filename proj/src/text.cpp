#include "forest_hopf/text.hpp"

namespace forest_hopf {

namespace {

bool ident_head(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool ident_tail(char c) { return ident_head(c) || (c >= '0' && c <= '9'); }

struct Parser {
    std::string_view s;
    std::size_t pos = 0;
    const SymbolTable& syms;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at_end() const { return pos == s.size(); }
    char peek() const { return s[pos]; }

    [[noreturn]] void fail(std::size_t at, const std::string& msg) {
        throw ParseError(static_cast<int>(at), msg);
    }

    Tree parse_tree() {
        std::size_t start = pos;
        while (pos < s.size() && ident_tail(s[pos])) ++pos;
        std::string label(s.substr(start, pos - start));
        auto dec = syms.find(label);
        if (!dec) fail(start, "unknown label '" + label + "'");
        if (pos < s.size() && s[pos] == '[') {
            if (dec->kind != Kind::Omega)
                fail(start, "label '" + label + "' is X-kind and cannot have children");
            ++pos;
            Forest kids = parse_forest_body();
            if (at_end() || s[pos] != ']') fail(pos, "expected ']'");
            ++pos;
            return Tree{*dec, std::move(kids.trees)};
        }
        return Tree{*dec, {}};
    }

    // Parses up to (not including) ']' or end of input.
    Forest parse_forest_body() {
        skip_ws();
        if (!at_end() && peek() == '1') {
            std::size_t at = pos;
            ++pos;
            if (!at_end() && ident_tail(peek())) fail(at, "labels may not start with a digit");
            skip_ws();
            if (!at_end() && peek() != ']') fail(pos, "'1' denotes the empty forest and stands alone");
            return Forest{};
        }
        Forest f;
        while (!at_end() && ident_head(peek())) {
            f.trees.push_back(parse_tree());
            skip_ws();
        }
        if (f.trees.empty()) fail(pos, "expected a forest ('1' or at least one tree)");
        return f;
    }
};

}  // namespace

Forest parse_forest(std::string_view src, const SymbolTable& syms) {
    Parser p{src, 0, syms};
    Forest f = p.parse_forest_body();
    p.skip_ws();
    if (!p.at_end()) p.fail(p.pos, "unexpected character");
    return f;
}

std::string print_tree(const Tree& t, const SymbolTable& syms) {
    std::string out = syms.label_of(t.dec.id);
    if (!t.kids.empty()) {
        out += '[';
        for (std::size_t i = 0; i < t.kids.size(); ++i) {
            if (i) out += ' ';
            out += print_tree(t.kids[i], syms);
        }
        out += ']';
    }
    return out;
}

std::string print_forest(const Forest& f, const SymbolTable& syms) {
    if (f.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < f.trees.size(); ++i) {
        if (i) out += ' ';
        out += print_tree(f.trees[i], syms);
    }
    return out;
}

namespace {

template <class C>
std::string coef_str(const C& c) {
    return c.str();
}

std::string symbol_str(const SymbolTable& syms, int id, bool latex) {
    if (!latex) return syms.weight_name(id);
    return (syms.kind_of(id) == Kind::X ? "\\mu_{" : "\\lambda_{") + syms.label_of(id) + "}";
}

// One polynomial term, sign stripped.  Empty result means "1".
template <class C>
std::string term_body(const Monomial& m, const C& mag, const SymbolTable& syms,
                      const PrintOptions& opt) {
    std::string out;
    if (m.is_unit()) return coef_str(mag);
    if (mag != 1) {
        out += coef_str(mag);
        out += opt.latex ? "" : "*";
    }
    bool first = true;
    for (auto& [id, e] : m.factors()) {
        if (!first && !opt.latex) out += '*';
        first = false;
        out += symbol_str(syms, id, opt.latex);
        if (e != 1) out += opt.latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    return out;
}

template <class C>
std::string print_poly_impl(const BasicPoly<C>& p, const SymbolTable& syms,
                            const PrintOptions& opt) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool neg = it->second < 0;
        C mag = neg ? C(-it->second) : it->second;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_body(it->first, mag, syms, opt);
        first = false;
    }
    return out;
}

// Splits a coefficient polynomial into (sign, magnitude-text, needs-parens).
// Single-term polynomials pull the sign out and drop a bare "1"; anything
// else prints parenthesized.
template <class C>
struct CoefText {
    bool negative = false;
    std::string text;  // empty means coefficient 1
};

template <class C>
CoefText<C> coef_text(const BasicPoly<C>& p, const SymbolTable& syms, const PrintOptions& opt) {
    CoefText<C> r;
    if (p.terms().size() == 1) {
        auto& [m, c] = *p.terms().begin();
        r.negative = c < 0;
        C mag = r.negative ? C(-c) : c;
        if (m.is_unit() && mag == 1) return r;
        r.text = term_body(m, mag, syms, opt);
        return r;
    }
    r.text = "(" + print_poly_impl(p, syms, opt) + ")";
    return r;
}

template <class C>
std::string print_element_impl(const BasicElement<BasicPoly<C>>& e, const SymbolTable& syms,
                               const PrintOptions& opt) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        auto ct = coef_text(it->second, syms, opt);
        if (first) {
            if (ct.negative) out += '-';
        } else {
            out += ct.negative ? " - " : " + ";
        }
        if (!ct.text.empty()) out += ct.text + (opt.latex ? " " : " * ");
        out += print_forest(it->first, syms);
        first = false;
    }
    return out;
}

template <class C>
std::string print_tensor2_impl(const BasicTensor2<BasicPoly<C>>& t, const SymbolTable& syms,
                               const PrintOptions& opt) {
    if (t.is_zero()) return "0";
    const std::string sep = opt.latex ? " \\otimes " : (opt.ascii ? "o" : " ⊗ ");
    std::string out;
    bool first = true;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        auto ct = coef_text(it->second, syms, opt);
        if (first) {
            if (ct.negative) out += '-';
        } else {
            out += ct.negative ? " - " : " + ";
        }
        if (!ct.text.empty()) out += ct.text + (opt.latex ? " " : " * ");
        out += "(" + print_forest(it->first.first, syms) + ")" + sep + "(" +
               print_forest(it->first.second, syms) + ")";
        first = false;
    }
    return out;
}

}  // namespace

std::string print_poly(const Poly& p, const SymbolTable& syms, const PrintOptions& opt) {
    return print_poly_impl(p, syms, opt);
}
std::string print_poly(const QPoly& p, const SymbolTable& syms, const PrintOptions& opt) {
    return print_poly_impl(p, syms, opt);
}
std::string print_element(const Element& e, const SymbolTable& syms, const PrintOptions& opt) {
    return print_element_impl(e, syms, opt);
}
std::string print_element(const QElement& e, const SymbolTable& syms, const PrintOptions& opt) {
    return print_element_impl(e, syms, opt);
}
std::string print_tensor2(const Tensor2& t, const SymbolTable& syms, const PrintOptions& opt) {
    return print_tensor2_impl(t, syms, opt);
}
std::string print_tensor2(const QTensor2& t, const SymbolTable& syms, const PrintOptions& opt) {
    return print_tensor2_impl(t, syms, opt);
}

}  // namespace forest_hopf
