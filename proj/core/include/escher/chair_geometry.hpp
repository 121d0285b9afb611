#pragma once

// Exact integer geometry of the chair (L-tromino) prototile and its
// substitution.
//
// The prototile is the hexagon (0,0),(2,0),(2,1),(1,1),(1,2),(0,2) cut into
// eight unit edges. Edge symbol index 0 ("a") is the unit segment
// (2,1)->(1,1); indices continue counterclockwise, so "b" is (1,1)->(1,2)
// and "h" is (2,0)->(2,1). The doubled chair splits into four rotated
// copies; bit k of a 4-bit pattern marks the copy in slot k as Beta:
//
//   bit 0  right wing   translation (4,0)  rot  90
//   bit 1  corner       translation (0,0)  rot   0
//   bit 2  top wing     translation (0,4)  rot 270
//   bit 3  centre       translation (1,1)  rot   0
//
// Spread edges are read counterclockwise, so the bottom-left spread edge of
// an all-Alpha 1-spread reads a' = ha.

#include "escher/edge_algebra.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace escher {

struct Point2i {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Point2i&, const Point2i&) = default;
    friend constexpr Point2i operator+(Point2i a, Point2i b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2i operator-(Point2i a, Point2i b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2i operator*(int k, Point2i a) { return {k * a.x, k * a.y}; }
};

enum class Rotation : std::uint8_t { R0 = 0, R90 = 1, R180 = 2, R270 = 3 };

constexpr int degrees(Rotation r) noexcept { return 90 * static_cast<int>(r); }
constexpr Rotation compose(Rotation a, Rotation b) noexcept {
    return static_cast<Rotation>((static_cast<int>(a) + static_cast<int>(b)) % 4);
}
std::optional<Rotation> rotation_from_degrees(int deg) noexcept;

constexpr Point2i rotate(Point2i p, Rotation r) noexcept {
    switch (r) {
    case Rotation::R0: return p;
    case Rotation::R90: return {-p.y, p.x};
    case Rotation::R180: return {-p.x, -p.y};
    case Rotation::R270: return {p.y, -p.x};
    }
    return p;
}

/// An orientation-preserving copy of the unit chair: p -> rotate(p) + translation.
struct Placement {
    Point2i translation;
    Rotation rotation = Rotation::R0;
    Prototile label = Prototile::Alpha;

    Point2i apply(Point2i p) const noexcept { return rotate(p, rotation) + translation; }

    friend constexpr auto operator<=>(const Placement&, const Placement&) = default;
};

/// Directed unit segment of a tile boundary, traversed with the tile on the left.
struct UnitSegment {
    Point2i from;
    Point2i to;

    friend constexpr auto operator<=>(const UnitSegment&, const UnitSegment&) = default;
};

namespace chair {

inline constexpr int kEdgeCount = 8;
inline constexpr int kCellCount = 3;

/// Boundary vertices, counterclockwise from the origin.
inline constexpr std::array<Point2i, kEdgeCount> kVertices{
    {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}, {0, 1}}};

/// Lower-left corners of the three unit cells.
inline constexpr std::array<Point2i, kCellCount> kCells{{{0, 0}, {1, 0}, {0, 1}}};

/// Offset from symbol index to the boundary vertex it starts at.
inline constexpr int kLabelOffset = 3;

/// Start vertex of the unit edge carrying symbol index k, scaled by `scale`.
constexpr Point2i edge_start(int index, int scale = 1) noexcept {
    return scale * kVertices[(index + kLabelOffset) % kEdgeCount];
}
constexpr Point2i edge_end(int index, int scale = 1) noexcept {
    return scale * kVertices[(index + kLabelOffset + 1) % kEdgeCount];
}

/// Slot k of the 1-spread (translation/rotation within the doubled chair).
inline constexpr std::array<std::pair<Point2i, Rotation>, 4> kSlots{{
    {{4, 0}, Rotation::R90},
    {{0, 0}, Rotation::R0},
    {{0, 4}, Rotation::R270},
    {{1, 1}, Rotation::R0},
}};

/// The 8 unit edges of a placed tile, indexed by symbol index.
std::array<UnitSegment, kEdgeCount> placed_edges(const Placement& p);

/// Lower-left corners of the 3 cells covered by a placed tile.
std::array<Point2i, kCellCount> placed_cells(const Placement& p);

/// Cells of the chair scaled by `scale`.
std::vector<Point2i> scaled_cells(int scale);

} // namespace chair

inline constexpr int kPatternCount = 16;

constexpr bool valid_pattern(int pattern) noexcept { return pattern >= 0 && pattern < kPatternCount; }

/// Substitution patterns: how an Alpha (and optionally a Beta) supertile
/// splits into four labelled tiles.
struct SubstitutionRule {
    int alpha_pattern = 0;
    std::optional<int> beta_pattern;

    /// Throws Error{MissingRule} if p is Beta and no beta pattern is set.
    int pattern_for(Prototile p) const;

    friend auto operator<=>(const SubstitutionRule&, const SubstitutionRule&) = default;
};

/// Unordered matching between two edge symbols; stored with first <= second.
struct Matching {
    EdgeSymbol first;
    EdgeSymbol second;

    Matching() = default;
    Matching(EdgeSymbol x, EdgeSymbol y);

    std::string to_string() const;

    friend auto operator<=>(const Matching&, const Matching&) = default;
};

using BoundaryMap = std::map<EdgeSymbol, Word>;

struct Spread {
    Prototile target = Prototile::Alpha;
    int level = 0;
    std::vector<Placement> placements;
    /// One entry per interior unit segment, sorted; may repeat a pair.
    std::vector<Matching> internal_matchings;
    /// Each spread edge (symbol of the target prototile) -> the word of base
    /// symbols along it, read counterclockwise. Words have length 2^level.
    BoundaryMap boundary_decomposition;

    int scale() const noexcept { return 1 << level; }
};

/// 1-spread of `target` with tile labels taken from the pattern bits.
Spread compose_spread(int pattern, Prototile target);

/// Interior matchings of a placement set covering the chair scaled by 2^level.
/// Throws Error{InvalidGeometry} on overlaps, gaps, or misoriented edges.
std::vector<Matching> extract_matchings(std::span<const Placement> placements, int level);
std::vector<Matching> extract_matchings(const Spread& sp);

BoundaryMap extract_boundary_decomposition(std::span<const Placement> placements, int level,
                                           Prototile target);
BoundaryMap extract_boundary_decomposition(const Spread& sp);

/// Recursive substitution: every tile expands by its label's pattern at each
/// level. Throws Error{MissingRule} if a Beta tile has no pattern and
/// Error{InvalidArgument} for s < 1 or an out-of-range pattern.
Spread generate_spread(const SubstitutionRule& rule, Prototile target, int s);

/// Hierarchy of a single mixed supertile: all-Alpha substitution on every
/// level above the base, `pattern` on the last one. Target is Alpha.
Spread generate_one_rule_spread(int pattern, int s);

/// Every interior matching between base tiles in the spreads of levels
/// 1..s_max (both targets when the rule has a beta pattern), deduplicated.
std::vector<Matching> oracle_relations(const SubstitutionRule& rule, Prototile target, int s_max);
std::vector<Matching> oracle_relations(const SubstitutionRule& rule, int s_max);
std::vector<Matching> oracle_relations_one_rule(int pattern, int s_max);

/// "label tx ty rot" per line, label in {alpha, beta}.
std::string to_placement_text(std::span<const Placement> placements);
/// Inverse of to_placement_text; blank lines and '#' comments are skipped.
std::vector<Placement> parse_placement_text(std::string_view text);

} // namespace escher
