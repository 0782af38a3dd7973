#pragma once

#include <string>
#include <string_view>

#include "forest_hopf/linear.hpp"

namespace forest_hopf {

struct ParseError : std::runtime_error {
    int position;  // 0-based offset into the source string
    ParseError(int pos, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Grammar:  forest := "1" | tree { WS tree }    tree := label | label "[" forest "]"
// Labels must be registered; bracketed labels must be Omega-kind.  "a[1]"
// denotes the same vertex as "a" (a graft of the empty forest).
Forest parse_forest(std::string_view src, const SymbolTable& syms);

struct PrintOptions {
    bool ascii = false;  // "(x)o(y)" tensor separator instead of the UTF-8 one
    bool latex = false;
};

std::string print_forest(const Forest& f, const SymbolTable& syms);
std::string print_tree(const Tree& t, const SymbolTable& syms);

std::string print_poly(const Poly& p, const SymbolTable& syms, const PrintOptions& opt = {});
std::string print_poly(const QPoly& p, const SymbolTable& syms, const PrintOptions& opt = {});

std::string print_element(const Element& e, const SymbolTable& syms, const PrintOptions& opt = {});
std::string print_element(const QElement& e, const SymbolTable& syms, const PrintOptions& opt = {});

std::string print_tensor2(const Tensor2& t, const SymbolTable& syms, const PrintOptions& opt = {});
std::string print_tensor2(const QTensor2& t, const SymbolTable& syms, const PrintOptions& opt = {});

}  // namespace forest_hopf
