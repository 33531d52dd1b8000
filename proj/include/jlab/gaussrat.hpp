#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jlab {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Gaussian rational a + b*i with exact rational parts; the scalar field of
/// every symbolic computation in this project.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}
    GaussRat(const Rational& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw std::domain_error("division by zero GaussRat");
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // Total order used only for canonical sorting of outputs.
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    Complex to_complex() const { return Complex(re_.get_d(), im_.get_d()); }

private:
    Rational re_, im_;
};

/// Exact embedding of a double (doubles are dyadic rationals).
inline Rational rational_from_double(double x) {
    Rational q(x);
    q.canonicalize();
    return q;
}

inline GaussRat gaussrat_from_complex(Complex z) {
    return GaussRat(rational_from_double(z.real()), rational_from_double(z.imag()));
}

std::string to_string(const Rational& q);
std::string to_string(const GaussRat& c);

}  // namespace jlab
