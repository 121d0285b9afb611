#pragma once

#include "escher/edge_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace escher {

/// Relative orientation of two symbols in one class: equal (a=b) or glued (a/b).
enum class Parity : std::uint8_t { Same = 0, Dual = 1 };

constexpr Parity operator^(Parity a, Parity b) noexcept {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

struct Relation {
    EdgeSymbol lhs;
    EdgeSymbol rhs;
    Parity parity = Parity::Same;

    std::string to_string() const;

    friend constexpr auto operator<=>(const Relation&, const Relation&) = default;
};

/// One connected component of the relation graph. `same` holds the members
/// at the parity of the least symbol (which is same.front()), `dual` the rest.
/// A self-dual class has every member on the `same` side.
struct RelationClass {
    std::vector<EdgeSymbol> same;
    std::vector<EdgeSymbol> dual;
    bool self_dual = false;

    EdgeSymbol least() const { return same.front(); }

    friend bool operator==(const RelationClass&, const RelationClass&) = default;
};

/// Parity union-find over the first `universe_size` edge symbols (8 or 16).
///
/// Each node stores its parent and the parity of the link to it; the parity
/// of a symbol relative to its root is the XOR along the path. Merging two
/// symbols already in one class with the opposite parity marks the class as
/// self-dual (the symbol would equal its own dual) instead of failing.
class RelationSystem {
public:
    explicit RelationSystem(int universe_size = EdgeSymbol::kCount);

    int universe_size() const noexcept { return static_cast<int>(parent_.size()); }
    bool contains(EdgeSymbol s) const noexcept { return s.ordinal() < universe_size(); }

    /// Each returns true if the system changed (classes merged or a class
    /// became self-dual). Throws Error{InvalidArgument} outside the universe.
    bool add_equal(EdgeSymbol x, EdgeSymbol y);
    bool add_match(EdgeSymbol x, EdgeSymbol y);
    bool add(const Relation& r);

    /// Parity of y relative to x, or nullopt if they are unrelated.
    std::optional<Parity> relation(EdgeSymbol x, EdgeSymbol y) const;
    bool implies(const Relation& r) const;

    int class_count() const;
    /// Classes ordered by least symbol.
    std::vector<RelationClass> classes() const;
    /// Position of the symbol's class in classes().
    int class_id(EdgeSymbol s) const;
    /// Parity relative to the least symbol of its class.
    Parity parity_in_class(EdgeSymbol s) const;
    bool has_self_dual() const;

    /// Same partition, parities and self-dual flags.
    bool equivalent(const RelationSystem& other) const;

private:
    struct Root {
        int node;
        Parity parity;
    };

    Root find(int node) const;
    int check(EdgeSymbol s) const;
    bool merge(EdgeSymbol x, EdgeSymbol y, Parity p);

    std::vector<int> parent_;
    std::vector<Parity> link_;
    std::vector<int> rank_;
    std::vector<bool> self_dual_;
};

} // namespace escher
