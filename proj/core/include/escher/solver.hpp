#pragma once

#include "escher/chair_geometry.hpp"
#include "escher/relation_system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace escher {

enum class SolveMode {
    Single,  ///< one prototile, all-Alpha substitution
    OneRule, ///< two prototiles, one mixed supertile
    TwoRule, ///< two prototiles, one supertile rule each
};

std::string_view to_string(SolveMode mode) noexcept;
std::optional<SolveMode> parse_solve_mode(std::string_view text) noexcept;

inline constexpr int kMaxLiftIterations = 16;

/// Throws Error{InvalidArgument} for a pattern outside 0..15 and
/// Error{ExcludedRule} for a rule the mode does not admit.
void validate_rule(SolveMode mode, const SubstitutionRule& rule);

/// Relations that make a single prototile substitute into itself:
/// a=c=e=g, b=d=f=h, a/b on the given prototile's symbols.
std::vector<Relation> single_prototile_schema(Prototile p = Prototile::Alpha);

/// Pulls a relation between two products of base edges back to the base
/// symbols: equalities split componentwise, matchings index-reversed.
std::vector<Relation> pull_back(const Word& lhs, const Word& rhs, Parity parity);

struct SolveResult {
    SolveMode mode = SolveMode::Single;
    SubstitutionRule rule;
    RelationSystem system;
    /// Spread depth at which the system stopped growing (1 = the seed
    /// matchings of the 1-spreads already closed it).
    int iterations = 1;
};

/// SINGLE and ONE-RULE seed the relation system with the internal matchings
/// of the 1-spread and impose the single-prototile schema on its spread edges.
/// TWO-RULE seeds both 1-spreads and lifts every relation through both
/// boundary decompositions until nothing new follows.
SolveResult solve(SolveMode mode, const SubstitutionRule& rule);

/// Number of free curve parameters: one per class.
int escher_degree(const RelationSystem& sys);

/// Canonical text, e.g. "a=e=m / b=f=n; c=g=i=k=o / d=h=j=l=p".
std::string presentation(const RelationSystem& sys);

/// True iff every Alpha edge equals the Beta edge in the same position.
bool detect_prototile_collapse(const RelationSystem& sys);

/// { mode, pattern_i, pattern_j, degree, collapse, iterations, classes }.
std::string to_json(const SolveResult& result, int indent = 2);

} // namespace escher
