#include "jlab/elimination.hpp"

#include <cassert>

namespace jlab {

std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& d) {
    if (d.is_zero()) throw std::domain_error("exact_divide by zero polynomial");
    BiPoly q;
    BiPoly r = p;
    const auto& dlt = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rlt = *r.terms().rbegin();
        if (rlt.first.x < dlt.first.x || rlt.first.y < dlt.first.y) return std::nullopt;
        Mono2 m{rlt.first.x - dlt.first.x, rlt.first.y - dlt.first.y};
        GaussRat c = rlt.second / dlt.second;
        q.add_term(m, c);
        r -= BiPoly::monomial(m.x, m.y, c) * d;
    }
    return q;
}

BiPoly bareiss_determinant(std::vector<std::vector<BiPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BiPoly(GaussRat(1));
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss_determinant: non-square matrix");

    int sign = 1;
    BiPoly prev(GaussRat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t l = k + 1;
            while (l < n && m[l][k].is_zero()) ++l;
            if (l == n) return BiPoly();  // singular
            std::swap(m[k], m[l]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_divide(num, prev);
                assert(q && "Bareiss division must be exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = BiPoly();
        }
        prev = m[k][k];
    }
    BiPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

BiPoly resultant_y(const BiPoly& p, const BiPoly& q) {
    const int dp = p.degrees().in_y;
    const int dq = q.degrees().in_y;
    if (dp < 1 && dq < 1)
        throw std::invalid_argument("resultant_y: both inputs constant in y");
    if (dp < 1 || dq < 1)
        throw std::invalid_argument("resultant_y: inputs must have positive degree in y");

    const std::size_t n = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<BiPoly>> m(n, std::vector<BiPoly>(n));
    // dq rows of p's coefficients, then dp rows of q's; highest y-power first.
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k) m[row][row + k] = p.coeff_of_y(dp - k);
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k) m[dq + row][row + k] = q.coeff_of_y(dq - k);
    return bareiss_determinant(std::move(m));
}

}  // namespace jlab
