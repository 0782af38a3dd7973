#pragma once

#include <string>
#include <vector>

#include "forest_hopf/hopf.hpp"

namespace forest_hopf {

struct CheckOptions {
    int max_degree = 3;
    int seed_specializations = 2;  // random rational weight assignments
    unsigned seed = 12345;
};

struct CheckResult {
    std::string name;
    bool ok = true;
    long long cases = 0;
    std::string counterexample;  // first (canonically smallest) failure
};

// Exhaustive law checks over every decorated forest of degree <= max_degree.
// `which` selects a group: all, coassoc, counit, bialgebra, cocycle,
// antipode, equivalence.  Unknown groups throw std::invalid_argument.
std::vector<CheckResult> run_checks(const std::string& which, const SymbolTable& syms,
                                    const CheckOptions& opt);

}  // namespace forest_hopf
