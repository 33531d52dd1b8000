#include "jlab/bipoly.hpp"

#include <cmath>

namespace jlab {

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const GaussRat& c) {
    if (c.is_real()) return to_string(c.re());
    std::string s = to_string(c.re());
    if (c.im() > 0)
        s += "+" + to_string(c.im()) + " i";
    else
        s += "-" + to_string(Rational(-c.im())) + " i";
    return s;
}

GaussRat BiPoly::eval(const GaussRat& x, const GaussRat& y) const {
    // Horner in x; inner coefficients are Horner-evaluated in y.
    // Terms are grouped by x-degree, descending.
    std::map<int, std::map<int, GaussRat>> by_x;
    for (const auto& [m, c] : terms_) by_x[m.x][m.y] = c;

    GaussRat acc;
    int prev_dx = -1;
    for (auto it = by_x.rbegin(); it != by_x.rend(); ++it) {
        if (prev_dx >= 0)
            for (int k = 0; k < prev_dx - it->first; ++k) acc *= x;
        GaussRat cy;
        int prev_dy = -1;
        for (auto jt = it->second.rbegin(); jt != it->second.rend(); ++jt) {
            if (prev_dy >= 0)
                for (int k = 0; k < prev_dy - jt->first; ++k) cy *= y;
            cy += jt->second;
            prev_dy = jt->first;
        }
        for (int k = 0; k < prev_dy; ++k) cy *= y;
        acc += cy;
        prev_dx = it->first;
    }
    for (int k = 0; k < prev_dx; ++k) acc *= x;
    return acc;
}

std::optional<Complex> BiPoly::eval(Complex x, Complex y) const {
    std::map<int, std::map<int, Complex>> by_x;
    for (const auto& [m, c] : terms_) by_x[m.x][m.y] = c.to_complex();

    Complex acc = 0.0;
    int prev_dx = -1;
    for (auto it = by_x.rbegin(); it != by_x.rend(); ++it) {
        if (prev_dx >= 0)
            for (int k = 0; k < prev_dx - it->first; ++k) acc *= x;
        Complex cy = 0.0;
        int prev_dy = -1;
        for (auto jt = it->second.rbegin(); jt != it->second.rend(); ++jt) {
            if (prev_dy >= 0)
                for (int k = 0; k < prev_dy - jt->first; ++k) cy *= y;
            cy += jt->second;
            prev_dy = jt->first;
        }
        for (int k = 0; k < prev_dy; ++k) cy *= y;
        acc += cy;
        prev_dx = it->first;
    }
    for (int k = 0; k < prev_dx; ++k) acc *= x;

    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) return std::nullopt;
    return acc;
}

}  // namespace jlab
