#include "escher/classifier.hpp"

#include "escher/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace escher {

std::string PatternPair::to_string() const {
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

bool is_admissible(PatternPair p) noexcept {
    if (!valid_pattern(p.alpha) || !valid_pattern(p.beta) || p.alpha == p.beta) return false;
    return !(p.alpha == 0 && p.beta == 15) && !(p.alpha == 15 && p.beta == 0);
}

std::vector<PatternPair> admissible_pairs() {
    std::vector<PatternPair> out;
    for (int i = 0; i < kPatternCount; ++i)
        for (int j = 0; j < kPatternCount; ++j)
            if (is_admissible({i, j})) out.push_back({i, j});
    return out;
}

std::optional<PatternPair> antidiagonal_partner(PatternPair p) noexcept {
    if (p.alpha + p.beta != kPatternCount - 1) return std::nullopt;
    return PatternPair{p.beta, p.alpha};
}

CaseTable equivalence_classes(std::span<const PatternPair> pairs) {
    const std::set<PatternPair> pool(pairs.begin(), pairs.end());
    std::set<PatternPair> assigned;
    CaseTable table;
    for (const auto& start : pool) {
        if (assigned.count(start)) continue;
        // Orbit under the group generated by the two maps.
        std::set<PatternPair> orbit{start};
        std::vector<PatternPair> frontier{start};
        while (!frontier.empty()) {
            PatternPair p = frontier.back();
            frontier.pop_back();
            std::vector<PatternPair> next{swap_prototiles(p)};
            if (auto q = antidiagonal_partner(p)) next.push_back(*q);
            for (const auto& n : next) {
                if (pool.count(n) && orbit.insert(n).second) frontier.push_back(n);
            }
        }
        assigned.insert(orbit.begin(), orbit.end());
        CaseRow row;
        row.members.assign(orbit.begin(), orbit.end());
        row.representative = row.members.front();
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

/// Runs fn(k) for k in [0,n) on a few worker threads.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n, 1));
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < n;) fn(k);
    };
    if (workers == 1) {
        body();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
}

} // namespace

CaseTable classify_all() {
    const auto pairs = admissible_pairs();
    CaseTable table = equivalence_classes(pairs);
    parallel_for(table.rows.size(), [&](std::size_t k) {
        CaseRow& row = table.rows[k];
        const auto result = solve(SolveMode::TwoRule, row.representative.rule());
        row.degree = escher_degree(result.system);
        row.collapse = detect_prototile_collapse(result.system);
        row.iterations = result.iterations;
        row.presentation = presentation(result.system);
    });
    return table;
}

std::optional<int> one_rule_reference_degree(int pattern) noexcept {
    switch (pattern) {
    case 2:
    case 3:
    case 4: return 1;
    case 5: return 2;
    case 8: return 4;
    default: return std::nullopt;
    }
}

std::vector<OneRuleRow> classify_one_rule() {
    std::vector<OneRuleRow> rows;
    for (int p = 1; p < kPatternCount - 1; ++p) {
        const auto result = solve(SolveMode::OneRule, SubstitutionRule{p, std::nullopt});
        rows.push_back({p, escher_degree(result.system), detect_prototile_collapse(result.system),
                        presentation(result.system), one_rule_reference_degree(p)});
    }
    return rows;
}

OracleComparison compare_with_oracle(SolveMode mode, const SubstitutionRule& rule, int s_max) {
    const auto solved = solve(mode, rule);
    std::vector<Matching> matchings;
    switch (mode) {
    case SolveMode::Single: matchings = oracle_relations(rule, Prototile::Alpha, s_max); break;
    case SolveMode::OneRule: matchings = oracle_relations_one_rule(rule.alpha_pattern, s_max); break;
    case SolveMode::TwoRule: matchings = oracle_relations(rule, s_max); break;
    }
    RelationSystem oracle(solved.system.universe_size());
    for (const auto& m : matchings) oracle.add_match(m.first, m.second);
    return {oracle.equivalent(solved.system), presentation(solved.system), presentation(oracle)};
}

std::vector<OracleComparison> compare_all_with_oracle(SolveMode mode, std::span<const SubstitutionRule> rules,
                                                      int s_max) {
    // Workers must not throw, so reject bad input before dispatching.
    for (const auto& rule : rules) validate_rule(mode, rule);
    if (s_max < 1) throw Error(ErrorKind::InvalidArgument, "s_max must be >= 1");
    std::vector<OracleComparison> out(rules.size());
    parallel_for(rules.size(), [&](std::size_t k) { out[k] = compare_with_oracle(mode, rules[k], s_max); });
    return out;
}

std::string to_json(const CaseTable& table, int indent) {
    using nlohmann::ordered_json;
    auto pair_json = [](PatternPair p) { return ordered_json::array({p.alpha, p.beta}); };
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json members = ordered_json::array();
        for (auto m : row.members) members.push_back(pair_json(m));
        ordered_json r;
        r["representative"] = pair_json(row.representative);
        r["members"] = std::move(members);
        r["degree"] = row.degree;
        r["collapse"] = row.collapse;
        r["iterations"] = row.iterations;
        r["presentation"] = row.presentation;
        rows.push_back(std::move(r));
    }
    ordered_json doc;
    doc["mode"] = "two-rule";
    doc["admissible_pairs"] = admissible_pairs().size();
    doc["class_count"] = table.rows.size();
    doc["rows"] = std::move(rows);
    return doc.dump(indent);
}

std::string to_text_table(const CaseTable& table) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "class" << std::setw(8) << "degree" << std::setw(10) << "collapse"
       << std::setw(7) << "iters" << std::setw(26) << "members" << "presentation\n";
    for (const auto& row : table.rows) {
        std::string members;
        for (auto m : row.members) members += (members.empty() ? "" : " ") + m.to_string();
        os << std::setw(10) << row.representative.to_string() << std::setw(8) << row.degree << std::setw(10)
           << (row.collapse ? "yes" : "no") << std::setw(7) << row.iterations << std::setw(26) << members
           << row.presentation << '\n';
    }
    return os.str();
}

std::string to_json(const std::vector<OneRuleRow>& rows, int indent) {
    using nlohmann::ordered_json;
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r;
        r["pattern"] = row.pattern;
        r["degree"] = row.degree;
        r["collapse"] = row.collapse;
        r["presentation"] = row.presentation;
        r["reference_degree"] = row.reference_degree ? ordered_json(*row.reference_degree) : ordered_json(nullptr);
        r["verified"] = row.reference_degree.has_value();
        arr.push_back(std::move(r));
    }
    ordered_json doc;
    doc["mode"] = "one-rule";
    doc["rows"] = std::move(arr);
    return doc.dump(indent);
}

std::string to_text_table(const std::vector<OneRuleRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(9) << "pattern" << std::setw(8) << "degree" << std::setw(10) << "collapse"
       << std::setw(12) << "status" << "presentation\n";
    for (const auto& row : rows) {
        std::string status = "unverified";
        if (row.reference_degree) status = *row.reference_degree == row.degree ? "verified" : "MISMATCH";
        os << std::setw(9) << ("no." + std::to_string(row.pattern)) << std::setw(8) << row.degree
           << std::setw(10) << (row.collapse ? "yes" : "no") << std::setw(12) << status << row.presentation
           << '\n';
    }
    return os.str();
}

} // namespace escher
