#include "forest_hopf/forest.hpp"

#include <algorithm>

namespace forest_hopf {

namespace {

void check_registered(const SymbolTable& syms, Decoration d) {
    if (d.id < 0 || d.id >= syms.size() || syms.kind_of(d.id) != d.kind)
        throw UnknownLabelError("decoration is not registered in the symbol table");
}

}  // namespace

Tree leaf(const SymbolTable& syms, Decoration d) {
    check_registered(syms, d);
    return Tree{d, {}};
}

Tree graft(const SymbolTable& syms, const Forest& f, Decoration omega) {
    check_registered(syms, omega);
    if (omega.kind != Kind::Omega)
        throw ForestError("graft root '" + syms.label_of(omega.id) + "' must be Omega-kind");
    return Tree{omega, f.trees};
}

Forest concat(Forest a, const Forest& b) {
    a.trees.insert(a.trees.end(), b.trees.begin(), b.trees.end());
    return a;
}

Forest tree_forest(Tree t) { return Forest{{std::move(t)}}; }

int degree(const Tree& t) {
    int d = 1;
    for (auto& k : t.kids) d += degree(k);
    return d;
}

int degree(const Forest& f) {
    int d = 0;
    for (auto& t : f.trees) d += degree(t);
    return d;
}

int breadth(const Forest& f) { return static_cast<int>(f.trees.size()); }

int depth(const Tree& t) {
    if (t.dec.kind == Kind::X) return 0;
    int best = 0;
    for (auto& k : t.kids) best = std::max(best, depth(k));
    return 1 + best;
}

int depth(const Forest& f) {
    int best = 0;
    for (auto& t : f.trees) best = std::max(best, depth(t));
    return best;
}

std::strong_ordering compare(const Tree& a, const Tree& b) {
    if (auto c = a.dec.id <=> b.dec.id; c != 0) return c;
    if (auto c = a.kids.size() <=> b.kids.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (auto c = compare(a.kids[i], b.kids[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::strong_ordering compare(const Forest& a, const Forest& b) {
    if (auto c = degree(a) <=> degree(b); c != 0) return c;
    if (auto c = breadth(a) <=> breadth(b); c != 0) return c;
    for (std::size_t i = 0; i < a.trees.size(); ++i)
        if (auto c = compare(a.trees[i], b.trees[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t hash_of(const Tree& t) {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(t.dec.id);
    for (auto& k : t.kids) h = h * 0x100000001b3ull ^ hash_of(k);
    return h;
}

std::size_t hash_of(const Forest& f) {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto& t : f.trees) h = h * 0x100000001b3ull ^ hash_of(t);
    return h;
}

namespace {

std::optional<Violation> validate_tree(const Tree& t, const SymbolTable& syms,
                                       std::vector<int>& path) {
    if (t.dec.id < 0 || t.dec.id >= syms.size() || syms.kind_of(t.dec.id) != t.dec.kind)
        return Violation{path, "decoration is not registered in the symbol table"};
    if (!t.kids.empty() && t.dec.kind == Kind::X)
        return Violation{path, "internal vertex '" + syms.label_of(t.dec.id) + "' is X-kind"};
    for (std::size_t i = 0; i < t.kids.size(); ++i) {
        path.push_back(static_cast<int>(i));
        if (auto v = validate_tree(t.kids[i], syms, path)) return v;
        path.pop_back();
    }
    return std::nullopt;
}

// (G, F/G) pairs for a single tree.  Selecting the root yields (t, 1);
// otherwise selections of the child subtrees combine independently and the
// root survives into the quotient.
std::vector<std::pair<Forest, Forest>> tree_pairs(const Tree& t) {
    std::vector<std::pair<Forest, Forest>> out;
    out.push_back({tree_forest(t), Forest{}});

    std::vector<std::vector<std::pair<Forest, Forest>>> kid_pairs;
    kid_pairs.reserve(t.kids.size());
    for (auto& k : t.kids) kid_pairs.push_back(tree_pairs(k));

    std::vector<std::size_t> idx(t.kids.size(), 0);
    while (true) {
        Forest g, quotient_kids;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            g = concat(std::move(g), kid_pairs[i][idx[i]].first);
            quotient_kids = concat(std::move(quotient_kids), kid_pairs[i][idx[i]].second);
        }
        out.push_back({std::move(g), tree_forest(Tree{t.dec, std::move(quotient_kids.trees)})});

        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == kid_pairs[pos].size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

}  // namespace

std::optional<Violation> validate(const Forest& f, const SymbolTable& syms) {
    std::vector<int> path;
    for (std::size_t i = 0; i < f.trees.size(); ++i) {
        path.assign(1, static_cast<int>(i));
        if (auto v = validate_tree(f.trees[i], syms, path)) return v;
    }
    return std::nullopt;
}

std::vector<std::pair<Forest, Forest>> subforest_pairs(const Forest& f) {
    std::vector<std::pair<Forest, Forest>> acc = {{Forest{}, Forest{}}};
    for (auto& t : f.trees) {
        auto tp = tree_pairs(t);
        std::vector<std::pair<Forest, Forest>> next;
        next.reserve(acc.size() * tp.size());
        for (auto& [ga, qa] : acc)
            for (auto& [gt, qt] : tp) next.push_back({concat(ga, gt), concat(qa, qt)});
        acc = std::move(next);
    }
    return acc;
}

}  // namespace forest_hopf
