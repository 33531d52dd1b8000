#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jlab/asymptotic.hpp"
#include "jlab/pertinent.hpp"

namespace jlab {

/// A diverging sequence xi_k = (k, (k^{-(r-1)} (1 + z/k^j))^{1/s}) in the
/// family's dominant variable (mirrored for Y-dominant). zeta multiplies the
/// principal s-th root and reaches the other root branches (zeta^s = 1).
struct SeqSpec {
    PertinentFamily family;
    int j = 1;  // correction exponent; equals the branch index when checking a curve
    Complex z;
    std::vector<long> k_schedule = {100, 1000, 10000, 100000};
    Complex zeta = Complex(1.0, 0.0);
};

std::pair<Complex, Complex> sequence_point(const SeqSpec& spec, long k);

struct LimitRow {
    long k = 0;
    Complex x, y;
    Complex f_raw, g_raw;        // plain bivariate evaluation
    Complex f_stable, g_stable;  // tag-form evaluation (cancellation-free)
    std::vector<Complex> u;      // u_1..u_D along the sequence
    double norm_xi = 0;
    double error = 0;  // |F(xi_k) - target|
};

struct LimitReport {
    std::vector<LimitRow> rows;
    Complex target_f, target_g;
    double final_error = 0;
    std::optional<double> slope;  // log-log least-squares slope of error vs k
    bool norms_increasing = false;
    bool errors_decreasing = false;  // non-increasing after the first point
    bool u_limits_ok = false;        // u_i -> 0 (i < D), u_D -> -D z
    bool overflow = false;
    bool converged = false;  // final_error <= tol and norms increasing
    std::string note;
};

/// Checks that xi_k diverges while F(xi_k) approaches the curve point
/// (P(z), Q(z)), and that the pertinent variables approach their limits.
/// The recognition supplies the tag form used for the cancellation-free
/// evaluation; it must belong to the same family as the curve.
/// Non-convergence is reported in the result, never thrown.
LimitReport limit_check(const PolyMap& F, const AsymptoticCurve& curve, const SeqSpec& spec,
                        double tol, const Recognition* recognition = nullptr);

/// Confirms a target point lies in the closure of the image: F(xi_k) -> a
/// along the schedule. Requires a to match curve_sample(curve, z) within 1e-9.
LimitReport closure_check(const PolyMap& F, const AsymptoticCurve& curve,
                          std::pair<Complex, Complex> a, const SeqSpec& spec, double tol,
                          const Recognition* recognition = nullptr);

/// CSV trace: k, x_k, y_k (re/im), f, g (re/im), error.
std::string limit_report_csv(const LimitReport& report);

/// Sum of |coeff| |x|^a |y|^b: magnitude majorant of plain evaluation, the
/// scale for the catastrophic-cancellation guard.
double bipoly_eval_majorant(const BiPoly& p, double ax, double ay);

}  // namespace jlab
