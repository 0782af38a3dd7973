#include "forest_hopf/symbols.hpp"

namespace forest_hopf {

namespace {

bool valid_label(std::string_view s) {
    if (s.empty()) return false;
    auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(s[0])) return false;
    for (char c : s.substr(1))
        if (!tail(c)) return false;
    return true;
}

}  // namespace

Decoration SymbolTable::add(std::string_view label, Kind kind) {
    if (!valid_label(label))
        throw SymbolError("invalid label '" + std::string(label) +
                          "': labels must match [A-Za-z_][A-Za-z0-9_]*");
    if (has(label))
        throw SymbolError("duplicate label '" + std::string(label) + "'");
    entries_.push_back({std::string(label), kind});
    return {kind, static_cast<int>(entries_.size()) - 1};
}

Decoration SymbolTable::add_x(std::string_view label) { return add(label, Kind::X); }
Decoration SymbolTable::add_omega(std::string_view label) { return add(label, Kind::Omega); }

std::optional<Decoration> SymbolTable::find(std::string_view label) const {
    for (int i = 0; i < size(); ++i)
        if (entries_[i].label == label) return Decoration{entries_[i].kind, i};
    return std::nullopt;
}

Decoration SymbolTable::require(std::string_view label) const {
    if (auto d = find(label)) return *d;
    throw UnknownLabelError("unknown label '" + std::string(label) + "'");
}

Kind SymbolTable::kind_of(int id) const {
    if (id < 0 || id >= size()) throw UnknownLabelError("unknown symbol id");
    return entries_[id].kind;
}

const std::string& SymbolTable::label_of(int id) const {
    if (id < 0 || id >= size()) throw UnknownLabelError("unknown symbol id");
    return entries_[id].label;
}

Decoration SymbolTable::decoration_of(int id) const { return {kind_of(id), id}; }

std::string SymbolTable::weight_name(int id) const {
    return (kind_of(id) == Kind::X ? "mu_" : "la_") + entries_[id].label;
}

std::optional<int> SymbolTable::find_weight_name(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (weight_name(i) == name) return i;
    return std::nullopt;
}

std::vector<Decoration> SymbolTable::x_decorations() const {
    std::vector<Decoration> out;
    for (int i = 0; i < size(); ++i)
        if (entries_[i].kind == Kind::X) out.push_back({Kind::X, i});
    return out;
}

std::vector<Decoration> SymbolTable::omega_decorations() const {
    std::vector<Decoration> out;
    for (int i = 0; i < size(); ++i)
        if (entries_[i].kind == Kind::Omega) out.push_back({Kind::Omega, i});
    return out;
}

}  // namespace forest_hopf
