#include "escher/chair_geometry.hpp"

#include "escher/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace escher {

std::optional<Rotation> rotation_from_degrees(int deg) noexcept {
    switch (deg) {
    case 0: return Rotation::R0;
    case 90: return Rotation::R90;
    case 180: return Rotation::R180;
    case 270: return Rotation::R270;
    default: return std::nullopt;
    }
}

namespace chair {

std::array<UnitSegment, kEdgeCount> placed_edges(const Placement& p) {
    std::array<UnitSegment, kEdgeCount> out;
    for (int k = 0; k < kEdgeCount; ++k) out[k] = {p.apply(edge_start(k)), p.apply(edge_end(k))};
    return out;
}

std::array<Point2i, kCellCount> placed_cells(const Placement& p) {
    std::array<Point2i, kCellCount> out;
    for (int k = 0; k < kCellCount; ++k) {
        // Rotate both corners of the unit square and keep the lower-left one.
        Point2i a = p.apply(kCells[k]);
        Point2i b = p.apply(kCells[k] + Point2i{1, 1});
        out[k] = {std::min(a.x, b.x), std::min(a.y, b.y)};
    }
    return out;
}

std::vector<Point2i> scaled_cells(int scale) {
    std::vector<Point2i> out;
    out.reserve(3 * scale * scale);
    for (int y = 0; y < 2 * scale; ++y)
        for (int x = 0; x < 2 * scale; ++x)
            if (x < scale || y < scale) out.push_back({x, y});
    return out;
}

} // namespace chair

int SubstitutionRule::pattern_for(Prototile p) const {
    if (p == Prototile::Alpha) return alpha_pattern;
    if (!beta_pattern) throw Error(ErrorKind::MissingRule, "no substitution pattern for beta tiles");
    return *beta_pattern;
}

Matching::Matching(EdgeSymbol x, EdgeSymbol y) : first(std::min(x, y)), second(std::max(x, y)) {}

std::string Matching::to_string() const {
    return std::string{first.name(), '/', second.name()};
}

namespace {

struct Supertile {
    Placement placement;
    int scale = 1;
};

void check_pattern(int pattern) {
    if (!valid_pattern(pattern)) {
        throw Error(ErrorKind::InvalidArgument, "pattern out of range 0..15: " + std::to_string(pattern));
    }
}

void expand(const Supertile& parent, int pattern, std::vector<Supertile>& out) {
    const int half = parent.scale / 2;
    for (int bit = 0; bit < 4; ++bit) {
        const auto& [offset, rot] = chair::kSlots[bit];
        Supertile child;
        child.scale = half;
        child.placement.translation =
            rotate(half * offset, parent.placement.rotation) + parent.placement.translation;
        child.placement.rotation = compose(parent.placement.rotation, rot);
        child.placement.label = (pattern >> bit & 1) ? Prototile::Beta : Prototile::Alpha;
        out.push_back(child);
    }
}

Spread finish(Prototile target, int level, const std::vector<Supertile>& tiles) {
    Spread sp;
    sp.target = target;
    sp.level = level;
    sp.placements.reserve(tiles.size());
    for (const auto& t : tiles) sp.placements.push_back(t.placement);
    sp.internal_matchings = extract_matchings(sp.placements, level);
    sp.boundary_decomposition = extract_boundary_decomposition(sp.placements, level, target);
    return sp;
}

[[noreturn]] void invalid_geometry(const std::string& detail) {
    throw Error(ErrorKind::InvalidGeometry, "invalid spread geometry: " + detail);
}

std::string describe(Point2i p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

} // namespace

Spread compose_spread(int pattern, Prototile target) {
    check_pattern(pattern);
    std::vector<Supertile> tiles;
    expand(Supertile{Placement{{0, 0}, Rotation::R0, target}, 2}, pattern, tiles);
    return finish(target, 1, tiles);
}

std::vector<Matching> extract_matchings(std::span<const Placement> placements, int level) {
    if (level < 0 || level > 12) invalid_geometry("level out of range");
    const int scale = 1 << level;

    std::map<Point2i, int> coverage;
    for (const auto& p : placements)
        for (const auto& cell : chair::placed_cells(p)) ++coverage[cell];
    const auto expected = chair::scaled_cells(scale);
    if (coverage.size() != expected.size()) invalid_geometry("cells do not cover the scaled chair");
    for (const auto& cell : expected) {
        auto it = coverage.find(cell);
        if (it == coverage.end()) invalid_geometry("gap at cell " + describe(cell));
        if (it->second != 1) invalid_geometry("overlap at cell " + describe(cell));
    }

    struct Incidence {
        UnitSegment segment;
        EdgeSymbol symbol;
    };
    std::map<std::pair<Point2i, Point2i>, std::vector<Incidence>> by_segment;
    for (const auto& p : placements) {
        const auto edges = chair::placed_edges(p);
        for (int k = 0; k < chair::kEdgeCount; ++k) {
            const auto& e = edges[k];
            by_segment[std::minmax(e.from, e.to)].push_back({e, EdgeSymbol(p.label, k)});
        }
    }

    std::vector<Matching> out;
    for (const auto& [key, inc] : by_segment) {
        if (inc.size() > 2) invalid_geometry("segment shared by more than two tiles");
        if (inc.size() == 2) {
            if (inc[0].segment.from != inc[1].segment.to) {
                invalid_geometry("neighbours traverse " + describe(key.first) + "-" +
                                 describe(key.second) + " in the same direction");
            }
            out.emplace_back(inc[0].symbol, inc[1].symbol);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Matching> extract_matchings(const Spread& sp) {
    return extract_matchings(sp.placements, sp.level);
}

BoundaryMap extract_boundary_decomposition(std::span<const Placement> placements, int level,
                                           Prototile target) {
    const int scale = 1 << level;
    std::map<UnitSegment, EdgeSymbol> directed;
    for (const auto& p : placements) {
        const auto edges = chair::placed_edges(p);
        for (int k = 0; k < chair::kEdgeCount; ++k) directed.emplace(edges[k], EdgeSymbol(p.label, k));
    }

    BoundaryMap out;
    for (int k = 0; k < chair::kEdgeCount; ++k) {
        const Point2i start = chair::edge_start(k, scale);
        const Point2i end = chair::edge_end(k, scale);
        const Point2i step{(end.x - start.x) / scale, (end.y - start.y) / scale};
        std::vector<EdgeTerm> terms;
        Point2i at = start;
        for (int n = 0; n < scale; ++n) {
            auto it = directed.find({at, at + step});
            if (it == directed.end()) invalid_geometry("spread boundary not covered at " + describe(at));
            terms.push_back(EdgeTerm{it->second});
            at = at + step;
        }
        out.emplace(EdgeSymbol(target, k), Word(std::move(terms)));
    }
    return out;
}

BoundaryMap extract_boundary_decomposition(const Spread& sp) {
    return extract_boundary_decomposition(sp.placements, sp.level, sp.target);
}

Spread generate_spread(const SubstitutionRule& rule, Prototile target, int s) {
    if (s < 1) throw Error(ErrorKind::InvalidArgument, "spread level must be >= 1");
    check_pattern(rule.alpha_pattern);
    if (rule.beta_pattern) check_pattern(*rule.beta_pattern);

    std::vector<Supertile> tiles{{Placement{{0, 0}, Rotation::R0, target}, 1 << s}};
    for (int level = 0; level < s; ++level) {
        std::vector<Supertile> next;
        next.reserve(tiles.size() * 4);
        for (const auto& t : tiles) expand(t, rule.pattern_for(t.placement.label), next);
        tiles = std::move(next);
    }
    return finish(target, s, tiles);
}

Spread generate_one_rule_spread(int pattern, int s) {
    if (s < 1) throw Error(ErrorKind::InvalidArgument, "spread level must be >= 1");
    check_pattern(pattern);

    std::vector<Supertile> tiles{{Placement{{0, 0}, Rotation::R0, Prototile::Alpha}, 1 << s}};
    for (int level = 0; level < s; ++level) {
        std::vector<Supertile> next;
        next.reserve(tiles.size() * 4);
        const int p = level + 1 == s ? pattern : 0;
        for (const auto& t : tiles) expand(t, p, next);
        tiles = std::move(next);
    }
    return finish(Prototile::Alpha, s, tiles);
}

namespace {

std::vector<Matching> collect(std::set<Matching>& acc) {
    return {acc.begin(), acc.end()};
}

} // namespace

std::vector<Matching> oracle_relations(const SubstitutionRule& rule, Prototile target, int s_max) {
    if (s_max < 1) throw Error(ErrorKind::InvalidArgument, "s_max must be >= 1");
    std::set<Matching> acc;
    for (int s = 1; s <= s_max; ++s) {
        const auto sp = generate_spread(rule, target, s);
        acc.insert(sp.internal_matchings.begin(), sp.internal_matchings.end());
    }
    return collect(acc);
}

std::vector<Matching> oracle_relations(const SubstitutionRule& rule, int s_max) {
    std::set<Matching> acc;
    for (auto target : {Prototile::Alpha, Prototile::Beta}) {
        if (target == Prototile::Beta && !rule.beta_pattern) break;
        const auto part = oracle_relations(rule, target, s_max);
        acc.insert(part.begin(), part.end());
    }
    return collect(acc);
}

std::vector<Matching> oracle_relations_one_rule(int pattern, int s_max) {
    if (s_max < 1) throw Error(ErrorKind::InvalidArgument, "s_max must be >= 1");
    std::set<Matching> acc;
    for (int s = 1; s <= s_max; ++s) {
        const auto sp = generate_one_rule_spread(pattern, s);
        acc.insert(sp.internal_matchings.begin(), sp.internal_matchings.end());
    }
    return collect(acc);
}

std::string to_placement_text(std::span<const Placement> placements) {
    std::ostringstream os;
    for (const auto& p : placements) {
        os << to_string(p.label) << ' ' << p.translation.x << ' ' << p.translation.y << ' '
           << degrees(p.rotation) << '\n';
    }
    return os.str();
}

std::vector<Placement> parse_placement_text(std::string_view text) {
    std::vector<Placement> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string label;
        int tx = 0, ty = 0, rot = 0;
        std::string extra;
        if (!(ls >> label >> tx >> ty >> rot) || (ls >> extra)) {
            throw Error(ErrorKind::Parse, "malformed placement on line " + std::to_string(line_no));
        }
        Placement p;
        if (label == "alpha") p.label = Prototile::Alpha;
        else if (label == "beta") p.label = Prototile::Beta;
        else throw Error(ErrorKind::Parse, "unknown label '" + label + "' on line " + std::to_string(line_no));
        auto r = rotation_from_degrees(rot);
        if (!r) throw Error(ErrorKind::Parse, "rotation must be 0/90/180/270 on line " + std::to_string(line_no));
        p.translation = {tx, ty};
        p.rotation = *r;
        out.push_back(p);
    }
    return out;
}

} // namespace escher
