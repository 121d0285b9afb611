#include "escher/solver.hpp"

#include "escher/error.hpp"

#include <json.hpp>

#include <algorithm>

namespace escher {

std::string_view to_string(SolveMode mode) noexcept {
    switch (mode) {
    case SolveMode::Single: return "single";
    case SolveMode::OneRule: return "one-rule";
    case SolveMode::TwoRule: return "two-rule";
    }
    return "?";
}

std::optional<SolveMode> parse_solve_mode(std::string_view text) noexcept {
    if (text == "single") return SolveMode::Single;
    if (text == "one-rule") return SolveMode::OneRule;
    if (text == "two-rule") return SolveMode::TwoRule;
    return std::nullopt;
}

void validate_rule(SolveMode mode, const SubstitutionRule& rule) {
    auto check_range = [](int p) {
        if (!valid_pattern(p)) {
            throw Error(ErrorKind::InvalidArgument, "pattern out of range 0..15: " + std::to_string(p));
        }
    };
    check_range(rule.alpha_pattern);
    if (rule.beta_pattern) check_range(*rule.beta_pattern);

    switch (mode) {
    case SolveMode::Single:
        if (rule.alpha_pattern != 0 || rule.beta_pattern) {
            throw Error(ErrorKind::ExcludedRule, "single mode uses the all-alpha pattern only");
        }
        break;
    case SolveMode::OneRule:
        if (rule.beta_pattern) throw Error(ErrorKind::ExcludedRule, "one-rule mode takes no beta pattern");
        break;
    case SolveMode::TwoRule: {
        if (!rule.beta_pattern) throw Error(ErrorKind::ExcludedRule, "two-rule mode needs a beta pattern");
        const int i = rule.alpha_pattern;
        const int j = *rule.beta_pattern;
        if (i == j || (i == 0 && j == 15) || (i == 15 && j == 0)) {
            throw Error(ErrorKind::ExcludedRule,
                        "excluded pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        break;
    }
    }
}

std::vector<Relation> single_prototile_schema(Prototile p) {
    auto s = [p](int k) { return EdgeSymbol(p, k); };
    return {
        {s(0), s(2), Parity::Same}, {s(0), s(4), Parity::Same}, {s(0), s(6), Parity::Same},
        {s(1), s(3), Parity::Same}, {s(1), s(5), Parity::Same}, {s(1), s(7), Parity::Same},
        {s(0), s(1), Parity::Dual},
    };
}

std::vector<Relation> pull_back(const Word& lhs, const Word& rhs, Parity parity) {
    const auto pairs = parity == Parity::Same ? split_equal(lhs, rhs) : split_match(lhs, rhs);
    std::vector<Relation> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs) out.push_back({a.symbol, b.symbol, parity});
    return out;
}

namespace {

void seed(RelationSystem& sys, const Spread& sp) {
    for (const auto& m : sp.internal_matchings) sys.add_match(m.first, m.second);
}

SolveResult solve_with_schema(SolveMode mode, const SubstitutionRule& rule, int universe) {
    const Spread sp = compose_spread(rule.alpha_pattern, Prototile::Alpha);
    RelationSystem sys(universe);
    seed(sys, sp);
    for (const auto& r : single_prototile_schema()) {
        for (const auto& base : pull_back(sp.boundary_decomposition.at(r.lhs),
                                          sp.boundary_decomposition.at(r.rhs), r.parity)) {
            sys.add(base);
        }
    }
    return {mode, rule, std::move(sys), 1};
}

SolveResult solve_two_rule(const SubstitutionRule& rule) {
    const Spread alpha = compose_spread(rule.alpha_pattern, Prototile::Alpha);
    const Spread beta = compose_spread(*rule.beta_pattern, Prototile::Beta);
    BoundaryMap lift = alpha.boundary_decomposition;
    lift.insert(beta.boundary_decomposition.begin(), beta.boundary_decomposition.end());

    RelationSystem sys(EdgeSymbol::kCount);
    seed(sys, alpha);
    seed(sys, beta);

    int iterations = 1;
    for (;;) {
        // Lift a spanning set (each symbol against its class's least member)
        // of the current system; the rest follows by closure.
        std::vector<Relation> lifted;
        for (const auto& cls : sys.classes()) {
            const EdgeSymbol least = cls.least();
            for (auto s : cls.same)
                if (s != least) lifted.push_back({least, s, Parity::Same});
            for (auto s : cls.dual) lifted.push_back({least, s, Parity::Dual});
        }
        bool changed = false;
        for (const auto& r : lifted) {
            for (const auto& base : pull_back(lift.at(r.lhs), lift.at(r.rhs), r.parity)) {
                changed = sys.add(base) || changed;
            }
        }
        if (!changed) break;
        if (++iterations > kMaxLiftIterations) {
            throw Error(ErrorKind::Internal, "relation lifting did not stabilise");
        }
    }
    return {SolveMode::TwoRule, rule, std::move(sys), iterations};
}

} // namespace

SolveResult solve(SolveMode mode, const SubstitutionRule& rule) {
    validate_rule(mode, rule);
    switch (mode) {
    case SolveMode::Single: return solve_with_schema(mode, rule, EdgeSymbol::kPerPrototile);
    case SolveMode::OneRule: return solve_with_schema(mode, rule, EdgeSymbol::kCount);
    case SolveMode::TwoRule: return solve_two_rule(rule);
    }
    throw Error(ErrorKind::Internal, "unknown solve mode");
}

int escher_degree(const RelationSystem& sys) {
    return sys.class_count();
}

std::string presentation(const RelationSystem& sys) {
    auto join = [](const std::vector<EdgeSymbol>& symbols) {
        std::string out;
        for (auto s : symbols) {
            if (!out.empty()) out += '=';
            out += s.name();
        }
        return out;
    };
    std::string out;
    for (const auto& cls : sys.classes()) {
        if (!out.empty()) out += "; ";
        out += join(cls.same);
        if (!cls.dual.empty()) out += " / " + join(cls.dual);
        if (cls.self_dual) out += " (self-dual)";
    }
    return out;
}

bool detect_prototile_collapse(const RelationSystem& sys) {
    if (sys.universe_size() < EdgeSymbol::kCount) return false;
    for (int k = 0; k < EdgeSymbol::kPerPrototile; ++k) {
        auto p = sys.relation(EdgeSymbol(Prototile::Alpha, k), EdgeSymbol(Prototile::Beta, k));
        if (p != Parity::Same) return false;
    }
    return true;
}

std::string to_json(const SolveResult& result, int indent) {
    using nlohmann::ordered_json;
    auto names = [](const std::vector<EdgeSymbol>& symbols) {
        ordered_json arr = ordered_json::array();
        for (auto s : symbols) arr.push_back(std::string(1, s.name()));
        return arr;
    };
    ordered_json classes = ordered_json::array();
    for (const auto& cls : result.system.classes()) {
        classes.push_back({{"same", names(cls.same)}, {"dual", names(cls.dual)}, {"self_dual", cls.self_dual}});
    }
    ordered_json doc;
    doc["mode"] = std::string(to_string(result.mode));
    doc["pattern_i"] = result.rule.alpha_pattern;
    doc["pattern_j"] = result.rule.beta_pattern ? ordered_json(*result.rule.beta_pattern) : ordered_json(nullptr);
    doc["degree"] = escher_degree(result.system);
    doc["collapse"] = detect_prototile_collapse(result.system);
    doc["iterations"] = result.iterations;
    doc["presentation"] = presentation(result.system);
    doc["classes"] = std::move(classes);
    return doc.dump(indent);
}

} // namespace escher
