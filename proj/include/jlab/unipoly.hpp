#pragma once

#include <vector>

#include "jlab/gaussrat.hpp"

namespace jlab {

/// Dense univariate polynomial over GaussRat, coefficients ascending.
/// Used for asymptotic-curve coordinates P(z), Q(z) and small exact
/// univariate work (gcds, root-line oracles).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const GaussRat& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    explicit UniPoly(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly var() { return UniPoly({GaussRat(0), GaussRat(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<GaussRat>& coeffs() const { return coeffs_; }

    GaussRat coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : GaussRat();
    }
    const GaussRat& leading() const { return coeffs_.back(); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<GaussRat> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(int(k)) + b.coeff(int(k));
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<GaussRat> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(int(k)) - b.coeff(int(k));
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<GaussRat> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const GaussRat& c, const UniPoly& p) {
        if (c.is_zero()) return UniPoly();
        std::vector<GaussRat> r = p.coeffs_;
        for (auto& x : r) x *= c;
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    GaussRat eval(const GaussRat& z) const {
        GaussRat acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }
    Complex eval(Complex z) const {
        Complex acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
        return acc;
    }

    /// Remainder of this modulo d (Euclidean division; d nonzero).
    UniPoly mod(const UniPoly& d) const {
        UniPoly r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            GaussRat q = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            std::vector<GaussRat> sub(r.coeffs_.size());
            for (std::size_t k = 0; k < d.coeffs_.size(); ++k) sub[k + shift] = q * d.coeffs_[k];
            r = r - UniPoly(std::move(sub));
        }
        return r;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return (GaussRat(1) / leading()) * *this;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<GaussRat> coeffs_;
};

/// Monic gcd by the Euclidean algorithm, exact over Q(i).
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace jlab
