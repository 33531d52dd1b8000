#pragma once

#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jlab/gaussrat.hpp"

namespace jlab {

/// Exponent pair (degree in x, degree in y).
struct Mono2 {
    int x = 0;
    int y = 0;

    friend bool operator==(const Mono2& a, const Mono2& b) { return a.x == b.x && a.y == b.y; }
};

/// Graded lexicographic order, x major. Canonical term order for all
/// bivariate iteration and printing.
struct GrlexXY {
    bool operator()(const Mono2& a, const Mono2& b) const {
        int da = a.x + a.y, db = b.x + b.y;
        if (da != db) return da < db;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

/// Sentinel for degree queries on the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

struct Degrees {
    int total = kMinusInfinity;
    int in_x = kMinusInfinity;
    int in_y = kMinusInfinity;
    int pure_x = kMinusInfinity;  // degree of p(x, 0)
};

/// Sparse exact polynomial in x, y over GaussRat. Terms are kept normalized:
/// no stored coefficient is zero; the zero polynomial has an empty term map.
class BiPoly {
public:
    using TermMap = std::map<Mono2, GaussRat, GrlexXY>;

    BiPoly() = default;
    explicit BiPoly(const GaussRat& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }

    static BiPoly monomial(int dx, int dy, GaussRat c = GaussRat(1)) {
        BiPoly p;
        if (!c.is_zero()) p.terms_[{dx, dy}] = std::move(c);
        return p;
    }
    static BiPoly var_x() { return monomial(1, 0); }
    static BiPoly var_y() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono2{0, 0});
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    GaussRat coeff(int dx, int dy) const {
        auto it = terms_.find({dx, dy});
        return it == terms_.end() ? GaussRat() : it->second;
    }

    void add_term(const Mono2& m, const GaussRat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend BiPoly operator*(const GaussRat& c, const BiPoly& p) {
        BiPoly r;
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(int e) const {
        BiPoly r(GaussRat(1));
        BiPoly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    Degrees degrees() const {
        Degrees d;
        for (const auto& [m, c] : terms_) {
            d.total = std::max(d.total, m.x + m.y);
            d.in_x = std::max(d.in_x, m.x);
            d.in_y = std::max(d.in_y, m.y);
            if (m.y == 0) d.pure_x = std::max(d.pure_x, m.x);
        }
        return d;
    }
    int total_degree() const { return degrees().total; }

    BiPoly derivative_x() const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.x > 0) r.terms_[{m.x - 1, m.y}] = GaussRat(m.x) * c;
        return r;
    }
    BiPoly derivative_y() const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.y > 0) r.terms_[{m.x, m.y - 1}] = GaussRat(m.y) * c;
        return r;
    }

    /// Substitution homomorphism, exact.
    GaussRat eval(const GaussRat& x, const GaussRat& y) const;

    /// Floating evaluation by Horner accumulation per variable.
    /// nullopt signals overflow ("diverged"), never a crash.
    std::optional<Complex> eval(Complex x, Complex y) const;

    /// p with y := 0 (resp. x := 0), as a polynomial in the surviving variable.
    BiPoly at_y0() const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.y == 0) r.terms_[m] = c;
        return r;
    }
    BiPoly at_x0() const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.x == 0) r.terms_[m] = c;
        return r;
    }

    /// Swap the roles of x and y.
    BiPoly swapped_xy() const {
        BiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[{m.y, m.x}] = c;
        return r;
    }

    /// Coefficient of y^k, as a polynomial in x alone.
    BiPoly coeff_of_y(int k) const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.y == k) r.terms_[{m.x, 0}] = c;
        return r;
    }

    /// Verifies the normalization invariant (no stored zero coefficient).
    bool normalized() const {
        for (const auto& [m, c] : terms_)
            if (c.is_zero()) return false;
        return true;
    }

private:
    TermMap terms_;
};

/// Ordered pair (f, g): the polynomial map F = (f, g) : C^2 -> C^2.
struct PolyMap {
    BiPoly f;
    BiPoly g;

    friend bool operator==(const PolyMap& a, const PolyMap& b) {
        return a.f == b.f && a.g == b.g;
    }
};

}  // namespace jlab
