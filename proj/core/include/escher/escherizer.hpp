#pragma once

// Escherized renderings: free curves per relation class, propagated to
// every edge symbol and placed on every tile of a spread.

#include "escher/chair_geometry.hpp"
#include "escher/curve.hpp"
#include "escher/solver.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace escher {

struct Point2d {
    double x = 0.0;
    double y = 0.0;
};

/// Class id (position in RelationSystem::classes()) -> curve of the class's
/// least symbol. Dual-side members receive curve_dual of it.
struct PerturbationAssignment {
    std::map<int, PerturbedCurve> curves;
};

/// Reads { "classes": [ { "id": int, "samples": [[t,u], ...] }, ... ] }.
/// Throws Error{InvalidParams} on malformed input.
PerturbationAssignment parse_params(std::string_view json_text);
std::string to_params_json(const PerturbationAssignment& params, int indent = 2);

PerturbationAssignment straight_assignment(const RelationSystem& sys);

/// Eight samples per class at t = k/9 with |u| <= min(0.3, 0.6 min(t, 1-t)).
/// The taper keeps every curve inside a cone narrower than 45 degrees at both
/// endpoints, so curves leaving a common vertex on perpendicular edges never
/// cross. Deterministic for a given seed (std::mt19937_64, 53-bit doubles).
PerturbationAssignment random_assignment(const RelationSystem& sys, std::uint64_t seed);

using SymbolCurves = std::map<EdgeSymbol, PerturbedCurve>;

/// Throws Error{InvalidParams} if a class has no curve, an id is unknown,
/// or a self-dual class gets a curve with u(t) != -u(1-t).
SymbolCurves propagate(const RelationSystem& sys, const PerturbationAssignment& params);

/// Places a unit-edge curve on the segment from -> to (positive u to the left).
/// The result includes both endpoints.
std::vector<Point2d> realize_edge(const PerturbedCurve& curve, Point2d from, Point2d to);

struct RenderedEdge {
    EdgeSymbol symbol;
    UnitSegment segment;
    std::vector<Point2d> polyline;
};

struct RenderedTile {
    Placement placement;
    std::array<RenderedEdge, chair::kEdgeCount> edges;

    /// Closed outline, counterclockwise, without repeating the first point.
    std::vector<Point2d> outline() const;
};

struct RenderedTiling {
    int level = 0;
    std::vector<RenderedTile> tiles;
};

/// Spread for a mode: all-Alpha for SINGLE, a mixed base level under an
/// all-Alpha hierarchy for ONE-RULE, the recursive rule for TWO-RULE.
Spread generate_mode_spread(SolveMode mode, const SubstitutionRule& rule, Prototile target, int s);

RenderedTiling realize(std::span<const Placement> placements, int level, const SymbolCurves& curves);

/// Every interior segment carries the same polyline from both sides
/// (<= 1e-9) and sample points just inside each tile lie in no other tile.
bool consistency_check(const RenderedTiling& rt);
/// Same check, with a description of the first failure.
std::optional<std::string> consistency_failure(const RenderedTiling& rt);

struct SimplicityViolation {
    std::size_t tile = 0;
    EdgeSymbol symbol;
};

/// First tile whose outline touches itself, with one of the edges involved.
std::optional<SimplicityViolation> find_self_intersection(const RenderedTiling& rt);

struct RenderOutput {
    SolveResult solution;
    RenderedTiling tiling;
    std::string svg;
};

/// Solves, generates the s-spread, realizes it, and verifies it.
/// Throws Error{Internal} if shared edges disagree and
/// Error{AmplitudeTooLarge} (naming the class) if an outline self-intersects.
RenderOutput render(const SolveResult& solution, int s, const PerturbationAssignment& params,
                    Prototile target = Prototile::Alpha);
RenderOutput render(SolveMode mode, const SubstitutionRule& rule, int s, const PerturbationAssignment& params,
                    Prototile target = Prototile::Alpha);

/// SVG 1.1, one path per tile, fill keyed by prototile.
std::string to_svg(const RenderedTiling& rt);

/// Placement lines followed by the curve of each edge: class id, with "~"
/// for the dual side. E.g. "alpha 0 0 0 0 0~ 0 0~ 0 0~ 0 0~".
std::string to_tiling_dump(const RenderedTiling& rt, const RelationSystem& sys);

} // namespace escher
