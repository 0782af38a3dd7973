#pragma once

#include <cstdint>
#include <vector>

#include "forest_hopf/forest.hpp"

namespace forest_hopf {

// Undecorated planar forest skeleton.
struct ShapeTree {
    std::vector<ShapeTree> kids;
    friend bool operator==(const ShapeTree&, const ShapeTree&) = default;
};
using Shape = std::vector<ShapeTree>;

// All planar forest shapes with exactly n vertices; |shapes(n)| is the n-th
// Catalan number.  Deterministic order: first-tree size ascending.
std::vector<Shape> shapes(int n);

int shape_vertices(const Shape& s);
int shape_internal(const Shape& s);  // vertices with at least one child
int shape_leaves(const Shape& s);

// Every admissible decoration of a shape: internal vertices range over the
// Omega labels, leaves over X and Omega labels, in declaration order.
// Requires at least one Omega label whenever the shape has a vertex.
std::vector<Forest> decorate(const Shape& s, const SymbolTable& syms);

// All decorated forests of degree 0..n, sorted by the canonical forest
// order (degree first), without duplicates.
std::vector<Forest> forests_up_to(int n, const SymbolTable& syms);

// Number of decorated forests of exactly degree n.
std::uint64_t decorated_count(int n, const SymbolTable& syms);

}  // namespace forest_hopf
