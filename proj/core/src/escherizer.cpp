#include "escher/escherizer.hpp"

#include "escher/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace escher {

namespace {

constexpr double kAgreementTolerance = 1e-9;
// Offset used to push a probe point just inside a tile boundary.
constexpr double kProbeOffset = 1e-6;

[[noreturn]] void bad_params(const std::string& detail) {
    throw Error(ErrorKind::InvalidParams, "malformed params: " + detail);
}

} // namespace

PerturbationAssignment parse_params(std::string_view json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        bad_params(e.what());
    }
    if (!doc.is_object() || !doc.contains("classes") || !doc["classes"].is_array()) {
        bad_params("expected an object with a \"classes\" array");
    }
    PerturbationAssignment out;
    for (const auto& entry : doc["classes"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_number_integer()) {
            bad_params("every class entry needs an integer \"id\"");
        }
        const int id = entry["id"].get<int>();
        std::vector<CurveSample> samples;
        if (entry.contains("samples")) {
            if (!entry["samples"].is_array()) bad_params("\"samples\" must be an array");
            for (const auto& s : entry["samples"]) {
                if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number()) {
                    bad_params("samples are [t, u] number pairs (class " + std::to_string(id) + ")");
                }
                samples.push_back({s[0].get<double>(), s[1].get<double>()});
            }
        }
        try {
            if (!out.curves.emplace(id, PerturbedCurve(std::move(samples))).second) {
                bad_params("duplicate class id " + std::to_string(id));
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::InvalidParams) throw;
            bad_params(std::string(e.what()) + " (class " + std::to_string(id) + ")");
        }
    }
    return out;
}

std::string to_params_json(const PerturbationAssignment& params, int indent) {
    using nlohmann::ordered_json;
    ordered_json classes = ordered_json::array();
    for (const auto& [id, curve] : params.curves) {
        ordered_json samples = ordered_json::array();
        for (const auto& s : curve.samples()) samples.push_back({s.t, s.u});
        classes.push_back({{"id", id}, {"samples", std::move(samples)}});
    }
    return ordered_json{{"classes", std::move(classes)}}.dump(indent);
}

PerturbationAssignment straight_assignment(const RelationSystem& sys) {
    PerturbationAssignment out;
    for (int id = 0; id < sys.class_count(); ++id) out.curves.emplace(id, PerturbedCurve{});
    return out;
}

PerturbationAssignment random_assignment(const RelationSystem& sys, std::uint64_t seed) {
    constexpr int kSamples = 8;
    std::mt19937_64 rng(seed);
    // Portable 53-bit uniform in [-1, 1); std distributions vary by vendor.
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };

    PerturbationAssignment out;
    const auto classes = sys.classes();
    for (std::size_t id = 0; id < classes.size(); ++id) {
        std::vector<CurveSample> samples(kSamples);
        for (int k = 0; k < kSamples; ++k) {
            const double t = static_cast<double>(k + 1) / (kSamples + 1);
            const double envelope = std::min(PerturbedCurve::kAmplitudeCap, 0.6 * std::min(t, 1.0 - t));
            samples[k] = {t, envelope * unit()};
        }
        if (classes[id].self_dual) {
            for (int k = 0; k < kSamples / 2; ++k) samples[kSamples - 1 - k].u = -samples[k].u;
        }
        out.curves.emplace(static_cast<int>(id), PerturbedCurve(std::move(samples)));
    }
    return out;
}

SymbolCurves propagate(const RelationSystem& sys, const PerturbationAssignment& params) {
    const auto classes = sys.classes();
    for (const auto& [id, curve] : params.curves) {
        if (id < 0 || id >= static_cast<int>(classes.size())) {
            throw Error(ErrorKind::InvalidParams, "params name unknown class id " + std::to_string(id));
        }
    }
    SymbolCurves out;
    for (std::size_t id = 0; id < classes.size(); ++id) {
        auto it = params.curves.find(static_cast<int>(id));
        if (it == params.curves.end()) {
            throw Error(ErrorKind::InvalidParams, "no curve for class " + std::to_string(id));
        }
        const PerturbedCurve& curve = it->second;
        if (classes[id].self_dual && !is_self_dual(curve)) {
            throw Error(ErrorKind::InvalidParams,
                        "class " + std::to_string(id) + " is self-dual; its curve must satisfy u(t) = -u(1-t)");
        }
        const PerturbedCurve flipped = curve_dual(curve);
        for (auto s : classes[id].same) out.emplace(s, curve);
        for (auto s : classes[id].dual) out.emplace(s, flipped);
    }
    return out;
}

std::vector<Point2d> realize_edge(const PerturbedCurve& curve, Point2d from, Point2d to) {
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    std::vector<Point2d> out;
    out.reserve(curve.samples().size() + 2);
    out.push_back(from);
    for (const auto& s : curve.samples()) {
        out.push_back({from.x + s.t * dx - s.u * dy, from.y + s.t * dy + s.u * dx});
    }
    out.push_back(to);
    return out;
}

std::vector<Point2d> RenderedTile::outline() const {
    std::vector<Point2d> out;
    for (const auto& e : edges) out.insert(out.end(), e.polyline.begin(), e.polyline.end() - 1);
    return out;
}

Spread generate_mode_spread(SolveMode mode, const SubstitutionRule& rule, Prototile target, int s) {
    switch (mode) {
    case SolveMode::Single: return generate_spread(SubstitutionRule{}, Prototile::Alpha, s);
    case SolveMode::OneRule: return generate_one_rule_spread(rule.alpha_pattern, s);
    case SolveMode::TwoRule: return generate_spread(rule, target, s);
    }
    throw Error(ErrorKind::Internal, "unknown solve mode");
}

RenderedTiling realize(std::span<const Placement> placements, int level, const SymbolCurves& curves) {
    RenderedTiling rt;
    rt.level = level;
    rt.tiles.reserve(placements.size());
    for (const auto& p : placements) {
        RenderedTile tile;
        tile.placement = p;
        const auto segments = chair::placed_edges(p);
        for (int k = 0; k < chair::kEdgeCount; ++k) {
            const EdgeSymbol symbol(p.label, k);
            auto it = curves.find(symbol);
            if (it == curves.end()) {
                throw Error(ErrorKind::InvalidParams, std::string("no curve for edge ") + symbol.name());
            }
            const auto& seg = segments[k];
            tile.edges[k] = {symbol, seg,
                             realize_edge(it->second, {double(seg.from.x), double(seg.from.y)},
                                          {double(seg.to.x), double(seg.to.y)})};
        }
        rt.tiles.push_back(std::move(tile));
    }
    return rt;
}

namespace {

double cross(Point2d o, Point2d a, Point2d b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_box(Point2d p, Point2d a, Point2d b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

int sign(double v) {
    return (v > 0) - (v < 0);
}

/// Closed segments [a,b] and [c,d] share a point.
bool segments_touch(Point2d a, Point2d b, Point2d c, Point2d d) {
    if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) {
        return false;
    }
    const int o1 = sign(cross(a, b, c));
    const int o2 = sign(cross(a, b, d));
    const int o3 = sign(cross(c, d, a));
    const int o4 = sign(cross(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_box(c, a, b)) return true;
    if (o2 == 0 && on_box(d, a, b)) return true;
    if (o3 == 0 && on_box(a, c, d)) return true;
    if (o4 == 0 && on_box(b, c, d)) return true;
    return false;
}

/// Winding-number containment; points on the boundary count as outside.
bool strictly_inside(Point2d p, const std::vector<Point2d>& poly) {
    int winding = 0;
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Point2d a = poly[k];
        const Point2d b = poly[(k + 1) % n];
        const double c = cross(a, b, p);
        if (c == 0.0 && on_box(p, a, b)) return false;
        if (a.y <= p.y) {
            if (b.y > p.y && c > 0) ++winding;
        } else if (b.y <= p.y && c < 0) {
            --winding;
        }
    }
    return winding != 0;
}

std::pair<Point2i, Point2i> undirected(const UnitSegment& s) {
    return std::minmax(s.from, s.to);
}

} // namespace

std::optional<std::string> consistency_failure(const RenderedTiling& rt) {
    std::map<std::pair<Point2i, Point2i>, std::vector<const RenderedEdge*>> shared;
    for (const auto& tile : rt.tiles)
        for (const auto& e : tile.edges) shared[undirected(e.segment)].push_back(&e);

    for (const auto& [key, edges] : shared) {
        if (edges.size() > 2) return "segment shared by more than two tiles";
        if (edges.size() < 2) continue;
        const auto& a = edges[0]->polyline;
        const auto& b = edges[1]->polyline;
        if (a.size() != b.size()) {
            return std::string("edges ") + edges[0]->symbol.name() + " and " + edges[1]->symbol.name() +
                   " disagree in sample count";
        }
        for (std::size_t k = 0; k < a.size(); ++k) {
            const Point2d p = a[k];
            const Point2d q = b[b.size() - 1 - k];
            if (std::abs(p.x - q.x) > kAgreementTolerance || std::abs(p.y - q.y) > kAgreementTolerance) {
                return std::string("edges ") + edges[0]->symbol.name() + " and " + edges[1]->symbol.name() +
                       " disagree along a shared segment";
            }
        }
    }

    // Interior-disjointness, sampled: cell centres and probes just inside
    // every outline segment must lie in no other tile. Any tile containing a
    // point owns a cell within one unit of it, since |u| stays below 1/2.
    std::vector<std::vector<Point2d>> outlines;
    std::map<Point2i, std::size_t> owner;
    outlines.reserve(rt.tiles.size());
    for (std::size_t t = 0; t < rt.tiles.size(); ++t) {
        outlines.push_back(rt.tiles[t].outline());
        for (const auto& cell : chair::placed_cells(rt.tiles[t].placement)) owner[cell] = t;
    }
    auto probe = [&](std::size_t self, Point2d p) -> std::optional<std::string> {
        const int cx = static_cast<int>(std::floor(p.x));
        const int cy = static_cast<int>(std::floor(p.y));
        std::set<std::size_t> candidates;
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx)
                if (auto it = owner.find({cx + dx, cy + dy}); it != owner.end() && it->second != self)
                    candidates.insert(it->second);
        for (auto other : candidates) {
            if (strictly_inside(p, outlines[other])) {
                return "tiles " + std::to_string(self) + " and " + std::to_string(other) + " overlap";
            }
        }
        return std::nullopt;
    };
    for (std::size_t t = 0; t < rt.tiles.size(); ++t) {
        for (const auto& cell : chair::placed_cells(rt.tiles[t].placement)) {
            if (auto f = probe(t, {cell.x + 0.5, cell.y + 0.5})) return f;
        }
        const auto& poly = outlines[t];
        for (std::size_t k = 0; k < poly.size(); ++k) {
            const Point2d a = poly[k];
            const Point2d b = poly[(k + 1) % poly.size()];
            const double len = std::hypot(b.x - a.x, b.y - a.y);
            if (len == 0.0) continue;
            const Point2d mid{(a.x + b.x) / 2 - kProbeOffset * (b.y - a.y) / len,
                              (a.y + b.y) / 2 + kProbeOffset * (b.x - a.x) / len};
            if (auto f = probe(t, mid)) return f;
        }
    }
    return std::nullopt;
}

bool consistency_check(const RenderedTiling& rt) {
    return !consistency_failure(rt).has_value();
}

std::optional<SimplicityViolation> find_self_intersection(const RenderedTiling& rt) {
    for (std::size_t t = 0; t < rt.tiles.size(); ++t) {
        // Outline segments tagged with the symbol of the edge they came from.
        std::vector<Point2d> pts;
        std::vector<EdgeSymbol> owner;
        for (const auto& e : rt.tiles[t].edges) {
            for (std::size_t k = 0; k + 1 < e.polyline.size(); ++k) {
                pts.push_back(e.polyline[k]);
                owner.push_back(e.symbol);
            }
        }
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2d a = pts[i];
            const Point2d b = pts[(i + 1) % n];
            // Consecutive segments must not fold back onto each other.
            const Point2d c = pts[(i + 2) % n];
            if (cross(a, b, c) == 0.0 && (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) < 0) {
                return SimplicityViolation{t, owner[(i + 1) % n]};
            }
            for (std::size_t j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                if (segments_touch(a, b, pts[j], pts[(j + 1) % n])) return SimplicityViolation{t, owner[i]};
            }
        }
    }
    return std::nullopt;
}

RenderOutput render(const SolveResult& solution, int s, const PerturbationAssignment& params, Prototile target) {
    const SymbolCurves curves = propagate(solution.system, params);
    const Spread spread = generate_mode_spread(solution.mode, solution.rule, target, s);
    RenderedTiling rt = realize(spread.placements, spread.level, curves);

    if (auto bad = find_self_intersection(rt)) {
        throw Error(ErrorKind::AmplitudeTooLarge,
                    "amplitude too large: tile outline self-intersects (class " +
                        std::to_string(solution.system.class_id(bad->symbol)) + ", edge " + bad->symbol.name() +
                        ")");
    }
    if (auto failure = consistency_failure(rt)) {
        throw Error(ErrorKind::Internal, "escherized tiling is inconsistent: " + *failure);
    }
    std::string svg = to_svg(rt);
    return {solution, std::move(rt), std::move(svg)};
}

RenderOutput render(SolveMode mode, const SubstitutionRule& rule, int s, const PerturbationAssignment& params,
                    Prototile target) {
    return render(solve(mode, rule), s, params, target);
}

namespace {

std::string fmt(double v) {
    if (std::abs(v) < 5e-7) v = 0.0;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
    std::string out(buf, end);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return out;
}

} // namespace

std::string to_svg(const RenderedTiling& rt) {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool first = true;
    std::vector<std::vector<Point2d>> outlines;
    outlines.reserve(rt.tiles.size());
    for (const auto& tile : rt.tiles) {
        outlines.push_back(tile.outline());
        for (const auto& p : outlines.back()) {
            if (first) {
                min_x = max_x = p.x;
                min_y = max_y = p.y;
                first = false;
            }
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double width = max_x - min_x;
    const double height = max_y - min_y;
    const double stroke = 0.04;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(min_x) << ' '
       << fmt(-max_y) << ' ' << fmt(width) << ' ' << fmt(height) << "\" width=\"" << fmt(width * 40)
       << "\" height=\"" << fmt(height * 40) << "\">\n"
       << "<g stroke=\"#1d1d1b\" stroke-width=\"" << fmt(stroke) << "\" stroke-linejoin=\"round\">\n";
    for (std::size_t t = 0; t < rt.tiles.size(); ++t) {
        const auto& poly = outlines[t];
        // SVG's y axis points down; negate y so the spread keeps its orientation.
        os << "<path fill=\"" << (rt.tiles[t].placement.label == Prototile::Alpha ? "#f2c14e" : "#5b8e7d")
           << "\" d=\"M" << fmt(poly[0].x) << ' ' << fmt(-poly[0].y);
        for (std::size_t k = 1; k < poly.size(); ++k) os << " L" << fmt(poly[k].x) << ' ' << fmt(-poly[k].y);
        os << " Z\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string to_tiling_dump(const RenderedTiling& rt, const RelationSystem& sys) {
    std::ostringstream os;
    os << "# level " << rt.level << ", " << rt.tiles.size() << " tiles; label tx ty rot | curve per edge a..h\n";
    for (const auto& tile : rt.tiles) {
        const auto& p = tile.placement;
        os << to_string(p.label) << ' ' << p.translation.x << ' ' << p.translation.y << ' ' << degrees(p.rotation)
           << " |";
        for (const auto& e : tile.edges) {
            os << ' ' << sys.class_id(e.symbol) << (sys.parity_in_class(e.symbol) == Parity::Dual ? "~" : "");
        }
        os << '\n';
    }
    return os.str();
}

} // namespace escher
