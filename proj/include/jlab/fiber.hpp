#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jlab/asymptotic.hpp"
#include "jlab/bipoly.hpp"

namespace jlab {

/// Root finding failed to converge within the iteration cap.
class RootFindError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All deg(p) complex roots (multiplicity clusters averaged and repeated) by
/// Aberth-Ehrlich simultaneous iteration from a fixed initial configuration;
/// deterministic for fixed input. Coefficients ascending; output sorted by
/// (re, im). Each root satisfies |p(root)| <= tol * max|coeff| * max(1,|root|)^deg.
std::vector<Complex> univariate_roots(std::vector<Complex> coeffs, double tol = 1e-9);

struct Fiber {
    std::pair<Complex, Complex> target;
    std::vector<std::pair<Complex, Complex>> points;
    double max_residual = 0.0;
    bool degenerate = false;  // positive-dimensional or degenerate fiber; no points fabricated
    std::string note;
};

/// Approximate solution set of F(x, y) = a: x-candidates from the exact
/// resultant Res_y(f - a1, g - a2), y-candidates per x from the univariate
/// slice, every returned point Newton-polished and residual-verified.
Fiber fiber_solve(const PolyMap& F, std::pair<Complex, Complex> a, double tol = 1e-9);

struct DominanceReport {
    int samples = 0;
    int nonempty_fibers = 0;
    int empty_fibers = 0;
    int skipped_near_sf = 0;
    int solver_failures = 0;
    std::uint64_t seed = 0;
    double box = 5.0;
    bool dominant_consistent = false;
    std::vector<std::pair<Complex, Complex>> empty_targets;
};

/// Seeded sample of targets in the box [-B, B]^2 (per complex coordinate);
/// targets within 1e-6 of a computed asymptotic curve are skipped, not
/// decided. Samples split a deterministic per-index generator, so the report
/// is identical under any parallel schedule.
DominanceReport dominancy_check(const PolyMap& F, int sample_count, std::uint64_t seed,
                                double tol = 1e-9, double box = 5.0,
                                const std::vector<AsymptoticCurve>* curves = nullptr);

/// Minimum distance from a target to the curves over the standard z-grid
/// (512 points in |z| <= 10).
double distance_to_curves(const std::vector<AsymptoticCurve>& curves,
                          std::pair<Complex, Complex> a);

}  // namespace jlab
