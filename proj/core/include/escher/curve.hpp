#pragma once

#include <compare>
#include <span>
#include <vector>

namespace escher {

/// One displacement sample: t is the fraction of edge length in (0,1), u the
/// signed normal displacement in edge-length units (positive = into the tile,
/// i.e. to the left of the edge's traversal direction).
struct CurveSample {
    double t = 0.0;
    double u = 0.0;

    friend constexpr auto operator<=>(const CurveSample&, const CurveSample&) = default;
};

/// Piecewise-linear realization of a perturbed edge with fixed endpoints
/// (0,0) and (1,0). No samples means the straight edge.
class PerturbedCurve {
public:
    static constexpr double kAmplitudeCap = 0.3;

    PerturbedCurve() = default;
    /// Throws Error{InvalidArgument} unless t is strictly increasing inside
    /// (0,1) and every |u| <= kAmplitudeCap.
    explicit PerturbedCurve(std::vector<CurveSample> samples);

    std::span<const CurveSample> samples() const noexcept { return samples_; }
    bool is_straight() const noexcept { return samples_.empty(); }

    /// Linear interpolation between samples; zero at both endpoints.
    double displacement(double t) const;

    friend bool operator==(const PerturbedCurve&, const PerturbedCurve&) = default;

private:
    std::vector<CurveSample> samples_;
};

/// (t,u) -> (1-t, u)
PerturbedCurve curve_mirror(const PerturbedCurve& c);
/// (t,u) -> (t, -u)
PerturbedCurve curve_invert(const PerturbedCurve& c);
/// (t,u) -> (1-t, -u)
PerturbedCurve curve_dual(const PerturbedCurve& c);

/// Max |a(t) - b(t)| over [0,1]. Exact for piecewise-linear curves.
double curve_distance(const PerturbedCurve& a, const PerturbedCurve& b);

bool curves_equal(const PerturbedCurve& a, const PerturbedCurve& b, double tol = 1e-12);

/// Two edges glued along a shared segment: u_a(t) = -u_b(1-t) for all t.
bool curves_abut(const PerturbedCurve& a, const PerturbedCurve& b, double tol = 1e-12);

bool is_self_dual(const PerturbedCurve& c, double tol = 1e-9);

} // namespace escher
