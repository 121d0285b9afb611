#include "escher/relation_system.hpp"

#include "escher/error.hpp"

#include <algorithm>
#include <map>

namespace escher {

std::string Relation::to_string() const {
    return std::string{lhs.name(), parity == Parity::Same ? '=' : '/', rhs.name()};
}

RelationSystem::RelationSystem(int universe_size) {
    if (universe_size < 1 || universe_size > EdgeSymbol::kCount) {
        throw Error(ErrorKind::InvalidArgument, "universe size must be in 1..16");
    }
    parent_.resize(universe_size);
    for (int k = 0; k < universe_size; ++k) parent_[k] = k;
    link_.assign(universe_size, Parity::Same);
    rank_.assign(universe_size, 0);
    self_dual_.assign(universe_size, false);
}

RelationSystem::Root RelationSystem::find(int node) const {
    // No path compression: const queries stay read-only, and union by rank
    // keeps trees over at most 16 symbols shallow.
    Parity total = Parity::Same;
    while (parent_[node] != node) {
        total = total ^ link_[node];
        node = parent_[node];
    }
    return {node, total};
}

int RelationSystem::check(EdgeSymbol s) const {
    if (!contains(s)) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string("symbol '") + s.name() + "' outside the relation universe");
    }
    return s.ordinal();
}

bool RelationSystem::merge(EdgeSymbol x, EdgeSymbol y, Parity p) {
    Root rx = find(check(x));
    Root ry = find(check(y));
    if (rx.node == ry.node) {
        if ((rx.parity ^ ry.parity) != p && !self_dual_[rx.node]) {
            self_dual_[rx.node] = true;
            return true;
        }
        return false;
    }
    if (rank_[rx.node] < rank_[ry.node]) std::swap(rx, ry);
    parent_[ry.node] = rx.node;
    link_[ry.node] = rx.parity ^ ry.parity ^ p;
    if (rank_[rx.node] == rank_[ry.node]) ++rank_[rx.node];
    self_dual_[rx.node] = self_dual_[rx.node] || self_dual_[ry.node];
    return true;
}

bool RelationSystem::add_equal(EdgeSymbol x, EdgeSymbol y) {
    return merge(x, y, Parity::Same);
}

bool RelationSystem::add_match(EdgeSymbol x, EdgeSymbol y) {
    return merge(x, y, Parity::Dual);
}

bool RelationSystem::add(const Relation& r) {
    return merge(r.lhs, r.rhs, r.parity);
}

std::optional<Parity> RelationSystem::relation(EdgeSymbol x, EdgeSymbol y) const {
    Root rx = find(check(x));
    Root ry = find(check(y));
    if (rx.node != ry.node) return std::nullopt;
    // In a self-dual class both parities hold; report the equality.
    if (self_dual_[rx.node]) return Parity::Same;
    return rx.parity ^ ry.parity;
}

bool RelationSystem::implies(const Relation& r) const {
    auto p = relation(r.lhs, r.rhs);
    if (!p) return false;
    return *p == r.parity || self_dual_[find(r.lhs.ordinal()).node];
}

int RelationSystem::class_count() const {
    int n = 0;
    for (int k = 0; k < universe_size(); ++k) n += parent_[k] == k;
    return n;
}

std::vector<RelationClass> RelationSystem::classes() const {
    std::map<int, std::size_t> slot;
    std::vector<RelationClass> out;
    std::vector<Parity> anchor;
    // Ordinals ascend, so the first member seen is the least one.
    for (int k = 0; k < universe_size(); ++k) {
        Root r = find(k);
        auto [it, fresh] = slot.emplace(r.node, out.size());
        if (fresh) {
            out.emplace_back();
            out.back().self_dual = self_dual_[r.node];
            anchor.push_back(r.parity);
        }
        auto& cls = out[it->second];
        (cls.self_dual || r.parity == anchor[it->second] ? cls.same : cls.dual).push_back(EdgeSymbol::from_ordinal(k));
    }
    return out;
}

int RelationSystem::class_id(EdgeSymbol s) const {
    const int root = find(check(s)).node;
    int id = 0;
    std::vector<bool> seen(universe_size(), false);
    for (int k = 0; k < universe_size(); ++k) {
        int r = find(k).node;
        if (r == root) return id;
        if (!seen[r]) {
            seen[r] = true;
            ++id;
        }
    }
    return id;
}

Parity RelationSystem::parity_in_class(EdgeSymbol s) const {
    Root rs = find(check(s));
    if (self_dual_[rs.node]) return Parity::Same;
    for (int k = 0; k < universe_size(); ++k) {
        Root rk = find(k);
        if (rk.node == rs.node) return rs.parity ^ rk.parity;
    }
    return Parity::Same;
}

bool RelationSystem::has_self_dual() const {
    for (int k = 0; k < universe_size(); ++k)
        if (parent_[k] == k && self_dual_[k]) return true;
    return false;
}

bool RelationSystem::equivalent(const RelationSystem& other) const {
    return universe_size() == other.universe_size() && classes() == other.classes();
}

} // namespace escher
