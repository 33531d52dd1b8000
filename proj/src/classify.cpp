#include "jlab/classify.hpp"

namespace jlab {

BiPoly jacobian_det(const PolyMap& F) {
    return F.f.derivative_x() * F.g.derivative_y() - F.f.derivative_y() * F.g.derivative_x();
}

NzcVerdict check_nzc(const PolyMap& F) {
    NzcVerdict v;
    v.det = jacobian_det(F);
    v.holds = v.det.term_count() == 1 && v.det.terms().begin()->first == Mono2{0, 0};
    if (v.holds) v.constant_value = v.det.terms().begin()->second;
    return v;
}

std::string to_string(GoodViolation v) {
    switch (v) {
        case GoodViolation::DegFLe1: return "deg_f_le_1";
        case GoodViolation::DegGLe1: return "deg_g_le_1";
        case GoodViolation::MissingLinearXInF: return "missing_linear_x_in_f";
        case GoodViolation::MissingLinearYInF: return "missing_linear_y_in_f";
        case GoodViolation::MissingLinearXInG: return "missing_linear_x_in_g";
        case GoodViolation::MissingLinearYInG: return "missing_linear_y_in_g";
        case GoodViolation::DeterminantZero: return "determinant_zero";
    }
    return "?";
}

GoodMapReport check_good(const PolyMap& F) {
    GoodMapReport r;
    r.alpha = F.f.coeff(1, 0);
    r.beta = F.f.coeff(0, 1);
    r.alpha_prime = F.g.coeff(1, 0);
    r.beta_prime = F.g.coeff(0, 1);

    if (F.f.total_degree() <= 1) r.violations.push_back(GoodViolation::DegFLe1);
    if (F.g.total_degree() <= 1) r.violations.push_back(GoodViolation::DegGLe1);
    if (r.alpha.is_zero()) r.violations.push_back(GoodViolation::MissingLinearXInF);
    if (r.beta.is_zero()) r.violations.push_back(GoodViolation::MissingLinearYInF);
    if (r.alpha_prime.is_zero()) r.violations.push_back(GoodViolation::MissingLinearXInG);
    if (r.beta_prime.is_zero()) r.violations.push_back(GoodViolation::MissingLinearYInG);
    if ((r.alpha * r.beta_prime - r.alpha_prime * r.beta).is_zero())
        r.violations.push_back(GoodViolation::DeterminantZero);

    r.is_good = r.violations.empty();
    return r;
}

}  // namespace jlab
