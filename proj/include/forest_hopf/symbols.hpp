#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace forest_hopf {

enum class Kind { X, Omega };

// Interned decoration label.  Equality is intern-id equality; the owning
// SymbolTable maps ids back to names and kinds.
struct Decoration {
    Kind kind;
    int id;

    friend bool operator==(const Decoration&, const Decoration&) = default;
    friend std::strong_ordering operator<=>(const Decoration& a, const Decoration& b) {
        return a.id <=> b.id;
    }
};

struct UnknownLabelError : std::runtime_error {
    explicit UnknownLabelError(const std::string& what) : std::runtime_error(what) {}
};

struct SymbolError : std::runtime_error {
    explicit SymbolError(const std::string& what) : std::runtime_error(what) {}
};

// Registry of X-kind and Omega-kind labels.  Labels are interned in
// declaration order; that same order fixes the ordering of the weight
// indeterminates mu_<x> and la_<omega> used for printing polynomials.
class SymbolTable {
public:
    // Labels must be identifiers ([A-Za-z_][A-Za-z0-9_]*) and unique across
    // both kinds; violations throw SymbolError.
    Decoration add_x(std::string_view label);
    Decoration add_omega(std::string_view label);

    std::optional<Decoration> find(std::string_view label) const;
    Decoration require(std::string_view label) const;  // throws UnknownLabelError
    bool has(std::string_view label) const { return find(label).has_value(); }

    int size() const { return static_cast<int>(entries_.size()); }
    Kind kind_of(int id) const;
    const std::string& label_of(int id) const;
    Decoration decoration_of(int id) const;

    // Weight indeterminate attached to a label: "mu_<x>" or "la_<omega>".
    std::string weight_name(int id) const;
    std::optional<int> find_weight_name(std::string_view name) const;

    std::vector<Decoration> x_decorations() const;
    std::vector<Decoration> omega_decorations() const;

private:
    struct Entry {
        std::string label;
        Kind kind;
    };
    Decoration add(std::string_view label, Kind kind);
    std::vector<Entry> entries_;
};

}  // namespace forest_hopf
