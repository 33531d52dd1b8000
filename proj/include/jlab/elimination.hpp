#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "jlab/bipoly.hpp"

namespace jlab {

/// Exact quotient p / d, or nullopt when d does not divide p.
/// Non-divisibility is a value, not an error.
std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& d);

/// Determinant of a square matrix of exact polynomials by fraction-free
/// (Bareiss) elimination with row pivoting.
BiPoly bareiss_determinant(std::vector<std::vector<BiPoly>> m);

/// Sylvester resultant of p and q with respect to y; univariate in x.
/// Vanishes at x0 iff p(x0,.) and q(x0,.) share a root or both leading
/// coefficients vanish. Requires positive degree in y on both sides.
BiPoly resultant_y(const BiPoly& p, const BiPoly& q);

}  // namespace jlab
