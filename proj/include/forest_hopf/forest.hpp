#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forest_hopf/symbols.hpp"

namespace forest_hopf {

// Planar rooted tree with decorated vertices.  Invariant: every vertex with
// children carries an Omega-kind decoration; leaves may carry either kind.
// The construction helpers below enforce this; validate() re-checks data
// assembled by hand or read from disk.
struct Tree {
    Decoration dec;
    std::vector<Tree> kids;

    friend bool operator==(const Tree&, const Tree&) = default;
};

// Planar forest: an ordered word of trees.  The empty forest is the unit 1.
struct Forest {
    std::vector<Tree> trees;

    bool empty() const { return trees.empty(); }
    friend bool operator==(const Forest&, const Forest&) = default;
};

struct ForestError : std::runtime_error {
    explicit ForestError(const std::string& what) : std::runtime_error(what) {}
};

// Single decorated vertex (either kind).
Tree leaf(const SymbolTable& syms, Decoration d);

// B+_omega: grafts all trees of f, in order, under a new omega-decorated
// root.  Throws ForestError when the root decoration is X-kind.
Tree graft(const SymbolTable& syms, const Forest& f, Decoration omega);

Forest concat(Forest a, const Forest& b);
Forest tree_forest(Tree t);

int degree(const Tree& t);    // vertex count
int degree(const Forest& f);
int breadth(const Forest& f);  // number of trees; 0 for the unit
int depth(const Tree& t);
int depth(const Forest& f);

// Canonical total order: by degree, then breadth, then tree-by-tree on the
// pre-order (decoration id, child count) sequence.  Used for deterministic
// term maps and printed output.
std::strong_ordering compare(const Tree& a, const Tree& b);
std::strong_ordering compare(const Forest& a, const Forest& b);

struct ForestLess {
    bool operator()(const Forest& a, const Forest& b) const { return compare(a, b) < 0; }
};
struct TreeLess {
    bool operator()(const Tree& a, const Tree& b) const { return compare(a, b) < 0; }
};

std::size_t hash_of(const Tree& t);
std::size_t hash_of(const Forest& f);

// First structural violation found in pre-order, if any.  The path addresses
// the offending vertex as [tree index, child index, ...].
struct Violation {
    std::vector<int> path;
    std::string message;
};
std::optional<Violation> validate(const Forest& f, const SymbolTable& syms);

// All pairs (G, F/G) where G ranges over the subforests of F: words of full
// subtrees rooted at an antichain of vertices, read in pre-order.  F/G is F
// with those subtrees removed.  The list carries multiplicity: distinct
// antichains with equal words contribute separate entries.
std::vector<std::pair<Forest, Forest>> subforest_pairs(const Forest& f);

}  // namespace forest_hopf
