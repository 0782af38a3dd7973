#include "forest_hopf/json_io.hpp"

namespace forest_hopf {

namespace {

Json tree_to_json(const Tree& t, const SymbolTable& syms) {
    Json j;
    j["d"] = syms.label_of(t.dec.id);
    Json kids = Json::array();
    for (auto& k : t.kids) kids.push_back(tree_to_json(k, syms));
    j["c"] = std::move(kids);
    return j;
}

Tree tree_from_json(const Json& j, const SymbolTable& syms) {
    if (!j.is_object() || !j.contains("d"))
        throw ForestError("tree node must be an object with a 'd' label");
    Tree t{syms.require(j.at("d").get<std::string>()), {}};
    if (j.contains("c")) {
        if (!j.at("c").is_array()) throw ForestError("'c' must be an array of child nodes");
        for (auto& k : j.at("c")) t.kids.push_back(tree_from_json(k, syms));
    }
    if (!t.kids.empty() && t.dec.kind != Kind::Omega)
        throw ForestError("internal vertex '" + syms.label_of(t.dec.id) + "' is X-kind");
    return t;
}

template <class C>
Json poly_json(const BasicPoly<C>& p, const SymbolTable& syms) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json exps = Json::object();
        for (auto& [id, e] : it->first.factors()) exps[syms.weight_name(id)] = e;
        terms.push_back({{"coef", it->second.str()}, {"exps", std::move(exps)}});
    }
    return terms;
}

template <class P>
Json element_json(const BasicElement<P>& e, const SymbolTable& syms) {
    Json terms = Json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        terms.push_back({{"coef", poly_json(it->second, syms)},
                         {"forest", forest_to_json(it->first, syms)}});
    return terms;
}

template <class P>
Json tensor2_json(const BasicTensor2<P>& t, const SymbolTable& syms) {
    Json terms = Json::array();
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it)
        terms.push_back({{"coef", poly_json(it->second, syms)},
                         {"left", forest_to_json(it->first.first, syms)},
                         {"right", forest_to_json(it->first.second, syms)}});
    return terms;
}

}  // namespace

Json forest_to_json(const Forest& f, const SymbolTable& syms) {
    Json j = Json::array();
    for (auto& t : f.trees) j.push_back(tree_to_json(t, syms));
    return j;
}

Forest forest_from_json(const Json& j, const SymbolTable& syms) {
    if (!j.is_array()) throw ForestError("a forest must be an array of tree nodes");
    Forest f;
    for (auto& t : j) f.trees.push_back(tree_from_json(t, syms));
    return f;
}

Json poly_to_json(const Poly& p, const SymbolTable& syms) { return poly_json(p, syms); }
Json poly_to_json(const QPoly& p, const SymbolTable& syms) { return poly_json(p, syms); }
Json element_to_json(const Element& e, const SymbolTable& syms) { return element_json(e, syms); }
Json element_to_json(const QElement& e, const SymbolTable& syms) { return element_json(e, syms); }
Json tensor2_to_json(const Tensor2& t, const SymbolTable& syms) { return tensor2_json(t, syms); }
Json tensor2_to_json(const QTensor2& t, const SymbolTable& syms) { return tensor2_json(t, syms); }

}  // namespace forest_hopf
