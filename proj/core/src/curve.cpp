#include "escher/curve.hpp"

#include "escher/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace escher {

PerturbedCurve::PerturbedCurve(std::vector<CurveSample> samples) : samples_(std::move(samples)) {
    double prev = 0.0;
    for (const auto& s : samples_) {
        if (!(s.t > prev) || !(s.t < 1.0)) {
            throw Error(ErrorKind::InvalidArgument,
                        "curve samples must have strictly increasing t in (0,1)");
        }
        if (!(std::abs(s.u) <= kAmplitudeCap)) {
            throw Error(ErrorKind::InvalidArgument,
                        "curve displacement " + std::to_string(s.u) + " exceeds amplitude cap");
        }
        prev = s.t;
    }
}

double PerturbedCurve::displacement(double t) const {
    if (t <= 0.0 || t >= 1.0 || samples_.empty()) return 0.0;
    auto hi = std::lower_bound(samples_.begin(), samples_.end(), t,
                               [](const CurveSample& s, double v) { return s.t < v; });
    double t0 = 0.0, u0 = 0.0, t1 = 1.0, u1 = 0.0;
    if (hi != samples_.end()) {
        t1 = hi->t;
        u1 = hi->u;
        if (t1 == t) return u1;
    }
    if (hi != samples_.begin()) {
        t0 = std::prev(hi)->t;
        u0 = std::prev(hi)->u;
    }
    return u0 + (u1 - u0) * (t - t0) / (t1 - t0);
}

namespace {

template <class Map>
PerturbedCurve transform(const PerturbedCurve& c, bool reverse, Map map) {
    std::vector<CurveSample> out;
    out.reserve(c.samples().size());
    for (const auto& s : c.samples()) out.push_back(map(s));
    if (reverse) std::reverse(out.begin(), out.end());
    return PerturbedCurve(std::move(out));
}

} // namespace

PerturbedCurve curve_mirror(const PerturbedCurve& c) {
    return transform(c, true, [](CurveSample s) { return CurveSample{1.0 - s.t, s.u}; });
}

PerturbedCurve curve_invert(const PerturbedCurve& c) {
    return transform(c, false, [](CurveSample s) { return CurveSample{s.t, -s.u}; });
}

PerturbedCurve curve_dual(const PerturbedCurve& c) {
    return transform(c, true, [](CurveSample s) { return CurveSample{1.0 - s.t, -s.u}; });
}

double curve_distance(const PerturbedCurve& a, const PerturbedCurve& b) {
    // Both are linear between the union of their breakpoints.
    double worst = 0.0;
    for (const auto& s : a.samples()) worst = std::max(worst, std::abs(s.u - b.displacement(s.t)));
    for (const auto& s : b.samples()) worst = std::max(worst, std::abs(a.displacement(s.t) - s.u));
    return worst;
}

bool curves_equal(const PerturbedCurve& a, const PerturbedCurve& b, double tol) {
    return curve_distance(a, b) <= tol;
}

bool curves_abut(const PerturbedCurve& a, const PerturbedCurve& b, double tol) {
    return curves_equal(a, curve_dual(b), tol);
}

bool is_self_dual(const PerturbedCurve& c, double tol) {
    return curves_equal(c, curve_dual(c), tol);
}

} // namespace escher
