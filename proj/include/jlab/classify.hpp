#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jlab/bipoly.hpp"

namespace jlab {

/// f_x * g_y - f_y * g_x, exact.
BiPoly jacobian_det(const PolyMap& F);

/// Non-Zero Condition: det JF is a nonzero constant on all of C^2.
/// Decided exactly by the single-term test.
struct NzcVerdict {
    bool holds = false;
    BiPoly det;
    std::optional<GaussRat> constant_value;  // set iff holds
};

NzcVerdict check_nzc(const PolyMap& F);

enum class GoodViolation {
    DegFLe1,
    DegGLe1,
    MissingLinearXInF,
    MissingLinearYInF,
    MissingLinearXInG,
    MissingLinearYInG,
    DeterminantZero,
};

std::string to_string(GoodViolation v);

/// deg f > 1, deg g > 1, all four linear coefficients nonzero, and the
/// linear-part determinant alpha*beta' - alpha'*beta nonzero. All violations
/// are reported, not just the first.
struct GoodMapReport {
    bool is_good = false;
    GaussRat alpha, beta;         // linear coefficients of f
    GaussRat alpha_prime, beta_prime;  // linear coefficients of g
    std::vector<GoodViolation> violations;
};

GoodMapReport check_good(const PolyMap& F);

}  // namespace jlab
