#include "forest_hopf/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace forest_hopf {

namespace {

using ShapeMemo = std::map<int, std::vector<Shape>>;

const std::vector<Shape>& forest_shapes(int n, ShapeMemo& memo);

// trees with n vertices: a root over any forest with n-1 vertices
std::vector<ShapeTree> tree_shapes(int n, ShapeMemo& memo) {
    std::vector<ShapeTree> out;
    for (auto& f : forest_shapes(n - 1, memo)) out.push_back(ShapeTree{f});
    return out;
}

const std::vector<Shape>& forest_shapes(int n, ShapeMemo& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::vector<Shape> out;
    if (n == 0) {
        out.push_back({});
    } else {
        for (int k = 1; k <= n; ++k) {
            auto heads = tree_shapes(k, memo);
            auto& rests = forest_shapes(n - k, memo);
            for (auto& h : heads)
                for (auto& r : rests) {
                    Shape s{h};
                    s.insert(s.end(), r.begin(), r.end());
                    out.push_back(std::move(s));
                }
        }
    }
    return memo.emplace(n, std::move(out)).first->second;
}

int tree_vertices(const ShapeTree& t) {
    int n = 1;
    for (auto& k : t.kids) n += tree_vertices(k);
    return n;
}

void count_kinds(const ShapeTree& t, int& internal, int& leaves) {
    if (t.kids.empty()) {
        ++leaves;
    } else {
        ++internal;
        for (auto& k : t.kids) count_kinds(k, internal, leaves);
    }
}

void vertex_options(const ShapeTree& t, const std::vector<Decoration>& omegas,
                    const std::vector<Decoration>& leaves_opts,
                    std::vector<const std::vector<Decoration>*>& out) {
    out.push_back(t.kids.empty() ? &leaves_opts : &omegas);
    for (auto& k : t.kids) vertex_options(k, omegas, leaves_opts, out);
}

Tree build_tree(const ShapeTree& st, const std::vector<Decoration>& choice, std::size_t& idx) {
    Tree t{choice[idx++], {}};
    t.kids.reserve(st.kids.size());
    for (auto& k : st.kids) t.kids.push_back(build_tree(k, choice, idx));
    return t;
}

}  // namespace

std::vector<Shape> shapes(int n) {
    if (n < 0) throw std::invalid_argument("shapes: negative size");
    ShapeMemo memo;
    return forest_shapes(n, memo);
}

int shape_vertices(const Shape& s) {
    int n = 0;
    for (auto& t : s) n += tree_vertices(t);
    return n;
}

int shape_internal(const Shape& s) {
    int internal = 0, leaves = 0;
    for (auto& t : s) count_kinds(t, internal, leaves);
    return internal;
}

int shape_leaves(const Shape& s) {
    int internal = 0, leaves = 0;
    for (auto& t : s) count_kinds(t, internal, leaves);
    return leaves;
}

std::vector<Forest> decorate(const Shape& s, const SymbolTable& syms) {
    const auto omegas = syms.omega_decorations();
    std::vector<Decoration> leaf_opts;
    for (int i = 0; i < syms.size(); ++i) leaf_opts.push_back(syms.decoration_of(i));

    if (shape_vertices(s) > 0 && shape_internal(s) > 0 && omegas.empty())
        throw SymbolError("decorating an internal vertex requires an Omega label");

    std::vector<const std::vector<Decoration>*> options;
    for (auto& t : s) vertex_options(t, omegas, leaf_opts, options);

    for (auto* opt : options)
        if (opt->empty()) return {};  // no admissible decoration

    std::vector<Forest> out;
    std::vector<std::size_t> idx(options.size(), 0);
    while (true) {
        std::vector<Decoration> choice;
        choice.reserve(options.size());
        for (std::size_t i = 0; i < options.size(); ++i) choice.push_back((*options[i])[idx[i]]);
        Forest f;
        std::size_t at = 0;
        for (auto& t : s) f.trees.push_back(build_tree(t, choice, at));
        out.push_back(std::move(f));

        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == options[pos]->size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
    }
    return out;
}

std::vector<Forest> forests_up_to(int n, const SymbolTable& syms) {
    std::vector<Forest> out;
    for (int d = 0; d <= n; ++d)
        for (auto& s : shapes(d))
            for (auto& f : decorate(s, syms)) out.push_back(std::move(f));
    std::sort(out.begin(), out.end(), ForestLess{});
    return out;
}

std::uint64_t decorated_count(int n, const SymbolTable& syms) {
    const auto pow_u64 = [](std::uint64_t b, int e) {
        std::uint64_t r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    const auto omega = static_cast<std::uint64_t>(syms.omega_decorations().size());
    const auto all = static_cast<std::uint64_t>(syms.size());
    std::uint64_t total = 0;
    for (auto& s : shapes(n))
        total += pow_u64(omega, shape_internal(s)) * pow_u64(all, shape_leaves(s));
    return total;
}

}  // namespace forest_hopf
