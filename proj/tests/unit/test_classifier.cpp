#include "escher/classifier.hpp"
#include "escher/error.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <set>

using namespace escher;

TEST(Classifier, Counts) {
    const auto pairs = admissible_pairs();
    EXPECT_EQ(pairs.size(), 238u);
    EXPECT_FALSE(is_admissible({0, 15}));
    EXPECT_FALSE(is_admissible({5, 5}));
    EXPECT_EQ(equivalence_classes(pairs).rows.size(), 119u);
}

TEST(Classifier, Symmetries) {
    for (const auto& p : admissible_pairs()) {
        EXPECT_EQ(swap_prototiles(swap_prototiles(p)), p);
        EXPECT_TRUE(is_admissible(swap_prototiles(p)));
    }
    EXPECT_EQ(swap_prototiles({0, 2}), (PatternPair{13, 15}));
    EXPECT_EQ(antidiagonal_partner({5, 10}), (PatternPair{10, 5}));
    EXPECT_FALSE(antidiagonal_partner({0, 2}));
}

// Equivalent tilings must agree on everything the classifier reports.
TEST(Classifier, InvariantOnClasses) {
    for (const auto& row : equivalence_classes(admissible_pairs()).rows) {
        const auto ref = solve(SolveMode::TwoRule, row.representative.rule()).system;
        for (const auto& m : row.members) {
            const auto sys = solve(SolveMode::TwoRule, m.rule()).system;
            EXPECT_EQ(escher_degree(sys), escher_degree(ref)) << m.to_string();
            EXPECT_EQ(detect_prototile_collapse(sys), detect_prototile_collapse(ref)) << m.to_string();
        }
    }
}

TEST(Classifier, NontrivialClasses) {
    const auto table = classify_all();
    ASSERT_EQ(table.rows.size(), 119u);
    std::set<PatternPair> nontrivial;
    for (const auto& row : table.rows) {
        if (row.degree == 1) {
            EXPECT_TRUE(row.collapse);
            continue;
        }
        for (const auto& m : row.members) nontrivial.insert(m);
    }
    const std::set<PatternPair> expected{{5, 10}, {10, 5}, {0, 2}, {13, 15}, {0, 8}, {7, 15}, {0, 10}, {5, 15}};
    EXPECT_EQ(nontrivial, expected);
}

TEST(Classifier, OneRuleTable) {
    const auto rows = classify_one_rule();
    ASSERT_EQ(rows.size(), 14u);
    for (const auto& r : rows) {
        if (r.reference_degree) EXPECT_EQ(r.degree, *r.reference_degree) << r.pattern;
    }
    EXPECT_EQ(one_rule_reference_degree(8), 4);
    EXPECT_FALSE(one_rule_reference_degree(1));
    EXPECT_NE(to_text_table(rows).find("unverified"), std::string::npos);
}

TEST(Classifier, Oracle) {
    EXPECT_TRUE(compare_with_oracle(SolveMode::TwoRule, {5, 10}, 4).match);
    EXPECT_TRUE(compare_with_oracle(SolveMode::OneRule, {8, std::nullopt}, 3).match);
    EXPECT_TRUE(compare_with_oracle(SolveMode::Single, {}, 3).match);
}

TEST(Classifier, Json) {
    const auto j = nlohmann::json::parse(to_json(classify_all()));
    EXPECT_EQ(j["class_count"], 119);
    EXPECT_EQ(j["admissible_pairs"], 238);
    EXPECT_EQ(j["rows"].size(), 119u);
    const auto one = nlohmann::json::parse(to_json(classify_one_rule()));
    EXPECT_EQ(one["rows"].size(), 14u);
}

TEST(Classifier, BatchOracleKeepsOrder) {
    const std::vector<SubstitutionRule> rules{{5, 10}, {0, 2}, {1, 7}};
    const auto out = compare_all_with_oracle(SolveMode::TwoRule, rules, 3);
    ASSERT_EQ(out.size(), 3u);
    for (std::size_t k = 0; k < rules.size(); ++k) {
        EXPECT_TRUE(out[k].match);
        EXPECT_EQ(out[k].solver, compare_with_oracle(SolveMode::TwoRule, rules[k], 3).solver);
    }
    const std::vector<SubstitutionRule> bad{{5, 10}, {0, 15}};
    EXPECT_THROW(compare_all_with_oracle(SolveMode::TwoRule, bad, 3), Error);
}
