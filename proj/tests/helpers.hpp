#pragma once

#include <string_view>

#include "forest_hopf/symbols.hpp"
#include "forest_hopf/text.hpp"

// Shared symbol tables.  Omega labels are interned before the X labels so
// that la_* weight factors precede mu_* in printed polynomials, matching the
// command-line driver's conventions.
inline forest_hopf::SymbolTable table_abx() {
    forest_hopf::SymbolTable t;
    t.add_omega("a");
    t.add_omega("b");
    t.add_x("x");
    return t;
}

inline forest_hopf::SymbolTable table_abcx() {
    forest_hopf::SymbolTable t;
    t.add_omega("a");
    t.add_omega("b");
    t.add_omega("c");
    t.add_x("x");
    return t;
}

inline forest_hopf::Forest fp(std::string_view src, const forest_hopf::SymbolTable& syms) {
    return forest_hopf::parse_forest(src, syms);
}
