#pragma once

#include "escher/solver.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace escher {

/// A two-rule tiling (i,j): Alpha supertiles split by pattern i, Beta by j.
struct PatternPair {
    int alpha = 0;
    int beta = 0;

    SubstitutionRule rule() const { return {alpha, beta}; }
    std::string to_string() const;

    friend constexpr auto operator<=>(const PatternPair&, const PatternPair&) = default;
};

bool is_admissible(PatternPair p) noexcept;

/// All (i,j) with i != j, excluding (0,15) and (15,0). 238 pairs, sorted.
std::vector<PatternPair> admissible_pairs();

/// Exchange of the two prototiles: (i,j) -> (15-j, 15-i).
constexpr PatternPair swap_prototiles(PatternPair p) noexcept {
    return {kPatternCount - 1 - p.beta, kPatternCount - 1 - p.alpha};
}

/// (i,15-i) -> (15-i,i); nullopt off the anti-diagonal.
std::optional<PatternPair> antidiagonal_partner(PatternPair p) noexcept;

struct CaseRow {
    PatternPair representative;
    std::vector<PatternPair> members;
    int degree = 0;
    bool collapse = false;
    int iterations = 0;
    std::string presentation;
};

struct CaseTable {
    std::vector<CaseRow> rows;
};

/// Quotient of `pairs` under swap_prototiles and antidiagonal_partner.
/// Rows are sorted by representative (the least member); only the
/// membership fields are filled.
CaseTable equivalence_classes(std::span<const PatternPair> pairs);

/// Solves one representative per class in two-rule mode.
CaseTable classify_all();

struct OneRuleRow {
    int pattern = 0;
    int degree = 0;
    bool collapse = false;
    std::string presentation;
    /// Degree established for the five documented mixed patterns
    /// (2, 3, 4, 5, 8); nullopt for the rest.
    std::optional<int> reference_degree;
};

/// One-rule mode over the 14 mixed patterns 1..14.
std::vector<OneRuleRow> classify_one_rule();

std::optional<int> one_rule_reference_degree(int pattern) noexcept;

struct OracleComparison {
    bool match = false;
    std::string solver;
    std::string oracle;
};

/// Closure of the geometric matchings of all spreads up to s_max against the
/// solver's fixed point (partition and parities).
OracleComparison compare_with_oracle(SolveMode mode, const SubstitutionRule& rule, int s_max);
/// Batch form, run in parallel; results keep the order of `rules`.
std::vector<OracleComparison> compare_all_with_oracle(SolveMode mode, std::span<const SubstitutionRule> rules,
                                                      int s_max);

std::string to_json(const CaseTable& table, int indent = 2);
std::string to_text_table(const CaseTable& table);
std::string to_json(const std::vector<OneRuleRow>& rows, int indent = 2);
std::string to_text_table(const std::vector<OneRuleRow>& rows);

} // namespace escher
