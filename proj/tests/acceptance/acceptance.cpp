// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "cli.hpp"
#include "escher/classifier.hpp"
#include "escher/error.hpp"
#include "escher/escherizer.hpp"
#include "generators.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace escher;

namespace {

struct Check {
    std::string detail;
    bool ok = true;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string cli(std::vector<std::string> args, int* code = nullptr) {
    args.insert(args.begin(), "escher");
    std::ostringstream out, err;
    const int rc = cli::run(args, out, err);
    if (code) *code = rc;
    return out.str();
}

EdgeSymbol sym(char c) { return EdgeSymbol::from_name(c); }

std::vector<Matching> matchings(std::initializer_list<const char*> pairs) {
    std::vector<Matching> out;
    for (const char* p : pairs) out.emplace_back(sym(p[0]), sym(p[1]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Placement> sorted(std::vector<Placement> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Check ac1() {
    Check c;
    int code = 0;
    const auto out = cli({"solve", "--mode", "single"}, &code);
    c.require(code == 0, "exit code");
    c.require(out.find("degree: 1\n") != std::string::npos, "degree line");
    c.require(out.find("presentation: a=c=e=g / b=d=f=h\n") != std::string::npos, "presentation line");
    const auto cls = solve(SolveMode::Single, {}).system.classes();
    c.require(cls.size() == 1, "one class");
    c.require(cls[0].same == std::vector<EdgeSymbol>{sym('a'), sym('c'), sym('e'), sym('g')}, "same side");
    c.require(cls[0].dual == std::vector<EdgeSymbol>{sym('b'), sym('d'), sym('f'), sym('h')}, "dual side");
    return c;
}

Check ac2() {
    Check c;
    const std::map<int, int> degrees{{2, 1}, {3, 1}, {4, 1}, {5, 2}, {8, 4}};
    for (auto [p, d] : degrees) {
        const auto r = solve(SolveMode::OneRule, {p, std::nullopt});
        c.require(escher_degree(r.system) == d, "degree of no." + std::to_string(p));
    }
    c.require(presentation(solve(SolveMode::OneRule, {5, std::nullopt}).system) ==
                  "a=e=m / b=f=n; c=g=i=k=o / d=h=j=l=p",
              "no.5 partition");
    c.require(presentation(solve(SolveMode::OneRule, {8, std::nullopt}).system) ==
                  "a / l=n=p; b / k=m=o; c=g / d=h; e=i / f=j",
              "no.8 partition");
    for (const auto& row : classify_one_rule()) {
        if (row.reference_degree) c.require(row.degree == *row.reference_degree, "table row " + std::to_string(row.pattern));
    }
    return c;
}

Check ac3() {
    Check c;
    const auto pairs = admissible_pairs();
    c.require(pairs.size() == 238, "238 admissible pairs, got " + std::to_string(pairs.size()));
    const auto n = equivalence_classes(pairs).rows.size();
    c.require(n == 119, "119 classes, got " + std::to_string(n));
    return c;
}

Check ac4() {
    Check c;
    struct Expected {
        std::set<PatternPair> members;
        int degree;
        std::string presentation;
    };
    const std::map<PatternPair, Expected> expected{
        {{5, 10}, {{{5, 10}, {10, 5}}, 2, "a=c=g=m / f=j=l=p; b=d=h=n / e=i=k=o"}},
        {{0, 2}, {{{0, 2}, {13, 15}}, 5, "a=c=e=g=i=k / b=d=f=h=j=p; l; m; n; o"}},
        {{0, 8}, {{{0, 8}, {7, 15}}, 3, "a=c=e=g=k=m=o / b=d=f=h=l=n=p; i; j"}},
        {{0, 10}, {{{0, 10}, {5, 15}}, 3, "a=c=e=g=k=o / b=d=f=h=l=p; i / n; j / m"}},
    };
    int nontrivial = 0;
    for (const auto& row : classify_all().rows) {
        auto it = expected.find(row.representative);
        if (it == expected.end()) {
            c.require(row.degree == 1, row.representative.to_string() + " should have degree 1");
            continue;
        }
        ++nontrivial;
        const std::set<PatternPair> members(row.members.begin(), row.members.end());
        c.require(members == it->second.members, row.representative.to_string() + " members");
        c.require(row.degree == it->second.degree, row.representative.to_string() + " degree");
        c.require(row.presentation == it->second.presentation, row.representative.to_string() + " presentation");
    }
    c.require(nontrivial == 4, "four nontrivial classes");
    return c;
}

Check ac5() {
    Check c;
    for (int j = 0; j < 16; ++j) {
        if (j == 1) continue;
        int code = 0;
        const auto out = cli({"solve", "--mode", "two-rule", "-i", "1", "-j", std::to_string(j)}, &code);
        const std::string tag = "(1," + std::to_string(j) + ")";
        c.require(code == 0, tag + " exit code");
        c.require(out.find("degree: 1\n") != std::string::npos, tag + " degree");
        c.require(out.find("collapse: true\n") != std::string::npos, tag + " collapse");
        c.require(solve(SolveMode::TwoRule, {1, j}).iterations <= 4, tag + " iterations");
    }
    return c;
}

Check ac6() {
    Check c;
    for (const auto& row : equivalence_classes(admissible_pairs()).rows) {
        const auto cmp = compare_with_oracle(SolveMode::TwoRule, row.representative.rule(), 4);
        c.require(cmp.match, row.representative.to_string() + ": solver " + cmp.solver + " vs oracle " + cmp.oracle);
    }
    return c;
}

Check ac7() {
    Check c;
    const auto sp0 = compose_spread(0, Prototile::Alpha);
    RelationSystem from_matchings(8), schema(8);
    for (const auto& m : sp0.internal_matchings) from_matchings.add_match(m.first, m.second);
    for (const auto& r : single_prototile_schema()) schema.add(r);
    c.require(from_matchings.equivalent(schema), "pattern-0 matchings imply exactly the single-prototile schema");
    c.require(sp0.internal_matchings == matchings({"bc", "ad", "hc", "be", "fa", "hc", "gb", "ha"}),
              "pattern-0 matching list");

    auto words = [](const Spread& sp) {
        std::string out;
        for (const auto& [edge, w] : sp.boundary_decomposition) out += std::string(1, edge.name()) + "'=" + w.to_string() + " ";
        return out;
    };
    c.require(words(sp0) == "a'=ha b'=bc c'=de d'=fg e'=de f'=fg g'=de h'=fg ", "pattern-0 decomposition");

    const auto a = compose_spread(5, Prototile::Alpha);
    const auto b = compose_spread(10, Prototile::Beta);
    c.require(a.internal_matchings == matchings({"jc", "id", "pc", "be", "fa", "hk", "gj", "hi"}), "(5,10) list (a)");
    c.require(b.internal_matchings == matchings({"bk", "al", "hk", "jm", "ni", "pc", "ob", "pa"}), "(5,10) list (b)");
    c.require(words(a) == "a'=pa b'=bk c'=lm d'=no e'=de f'=fg g'=lm h'=no ", "(5,10) alpha decomposition");
    c.require(words(b) == "i'=hi j'=jc k'=de l'=fg m'=lm n'=no o'=de p'=fg ", "(5,10) beta decomposition");
    return c;
}

Check ac8() {
    Check c;
    for (int i = 0; i < 16; ++i) {
        for (int s = 1; s <= 3; ++s) {
            const auto lhs = sorted(generate_spread({i, 15 - i}, Prototile::Alpha, s).placements);
            const auto rhs =
                sorted(generate_spread({15 - i, i}, s % 2 ? Prototile::Beta : Prototile::Alpha, s).placements);
            c.require(lhs == rhs, "i=" + std::to_string(i) + " s=" + std::to_string(s));
        }
    }
    return c;
}

Check ac9() {
    Check c;
    for (int j : {2, 8}) {
        for (int s = 1; s <= 3; ++s) {
            const auto sp = generate_spread({0, j}, Prototile::Beta, s);
            const auto n = std::count_if(sp.placements.begin(), sp.placements.end(),
                                         [](const Placement& p) { return p.label == Prototile::Beta; });
            c.require(n == 1, "(0," + std::to_string(j) + ") s=" + std::to_string(s) + " has " + std::to_string(n));
        }
    }
    return c;
}

Check ac10() {
    Check c;
    const std::vector<std::pair<SolveMode, SubstitutionRule>> systems{
        {SolveMode::Single, {}},           {SolveMode::OneRule, {5, std::nullopt}},
        {SolveMode::OneRule, {8, std::nullopt}}, {SolveMode::TwoRule, {5, 10}},
        {SolveMode::TwoRule, {0, 2}},      {SolveMode::TwoRule, {0, 8}},
        {SolveMode::TwoRule, {0, 10}},
    };
    for (const auto& [mode, rule] : systems) {
        const auto sol = solve(mode, rule);
        const std::string tag = std::string(to_string(mode)) + " " + std::to_string(rule.alpha_pattern);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            try {
                const auto out = render(sol, 3, random_assignment(sol.system, seed));
                c.require(consistency_check(out.tiling), tag + " seed " + std::to_string(seed) + " inconsistent");
                c.require(!find_self_intersection(out.tiling), tag + " seed " + std::to_string(seed) + " not simple");
            } catch (const Error& e) {
                c.require(false, tag + " seed " + std::to_string(seed) + ": " + e.what());
            }
        }
        const auto flat = render(sol, 3, straight_assignment(sol.system));
        const auto spread = generate_mode_spread(mode, rule, Prototile::Alpha, 3);
        c.require(flat.tiling.tiles.size() == spread.placements.size(), tag + " tile count");
        for (std::size_t t = 0; t < flat.tiling.tiles.size(); ++t) {
            const auto& tile = flat.tiling.tiles[t];
            c.require(tile.placement == spread.placements[t], tag + " placement");
            const auto segs = chair::placed_edges(tile.placement);
            for (int k = 0; k < chair::kEdgeCount; ++k) {
                const auto& pl = tile.edges[k].polyline;
                c.require(pl.size() == 2 && pl[0].x == segs[k].from.x && pl[0].y == segs[k].from.y &&
                              pl[1].x == segs[k].to.x && pl[1].y == segs[k].to.y,
                          tag + " straight edge");
            }
        }
        c.require(consistency_check(flat.tiling), tag + " straight tiling consistent");
    }
    return c;
}

Check ac11() {
    Check c;
    std::mt19937_64 rng(20261019);
    constexpr int kWords = 20000;
    for (int n = 0; n < kWords && c.ok; ++n) {
        const Word u = gen::random_word(rng);
        const Word v = gen::random_word(rng);
        c.require(mirror(mirror(u)) == u && invert(invert(u)) == u, "involutions");
        c.require(mirror(invert(u)) == invert(mirror(u)), "mirror and invert commute");
        c.require(mirror(concat(u, v)) == concat(mirror(u), mirror(v)), "mirror distributes");
        c.require(invert(concat(u, v)) == concat(invert(v), invert(u)), "invert reverses");

        // Split a matching of equal-length products, then reassemble it.
        const Word w = concat(u, v);
        const Word x = dual(w);
        c.require(matches(w, x), "dual matches");
        const auto parts = split_match(w, x);
        std::vector<EdgeTerm> left, right;
        for (const auto& p : parts) {
            c.require(p.first == p.second.dual(), "split pieces match");
            left.push_back(p.first);
            right.insert(right.begin(), p.second);
        }
        c.require(Word(left) == w && Word(right) == x, "reassembly");
        const auto halves = split_match(concat(u, v), concat(dual(v), dual(u)));
        c.require(halves.size() == u.size() + v.size(), "uv/xy splits termwise");

        const Word p = gen::random_plain_word(rng, static_cast<int>(u.size()));
        for (const auto& e : split_equal(p, p)) c.require(e.first == e.second, "split equal");
    }
    return c;
}

} // namespace

int main(int argc, char** argv) {
    // Optional argument: run only the criterion with this id, e.g. "AC6".
    const std::string only = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"AC1 single prototile: degree 1, a=c=e=g / b=d=f=h", ac1},
        {"AC2 one-rule degrees and no.5/no.8 partitions", ac2},
        {"AC3 238 admissible pairs, 119 classes", ac3},
        {"AC4 two-rule classification", ac4},
        {"AC5 (1,j) collapse within 4 iterations", ac5},
        {"AC6 solver equals geometric oracle, s<=4, all 119 classes", ac6},
        {"AC7 geometry calibration strings", ac7},
        {"AC8 spread equivalence for (i,15-i), s<=3", ac8},
        {"AC9 single beta tile in (0,2) and (0,8) beta spreads", ac9},
        {"AC10 renderer: 7 systems x 100 draws at s=3, straight render exact", ac10},
        {"AC11 algebra laws over 20000 random words", ac11},
    };
    int failed = 0;
    int ran = 0;
    for (const auto& [name, fn] : criteria) {
        if (!only.empty() && name.substr(0, name.find(' ')) != only) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms.count() << " ms)";
        if (!c.ok) std::cout << ": " << c.detail;
        std::cout << '\n';
        failed += !c.ok;
    }
    if (ran == 0) {
        std::cout << "unknown criterion " << only << '\n';
        return 2;
    }
    std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
    return failed ? 1 : 0;
}
