#pragma once

#include <random>

#include "jlab/bipoly.hpp"
#include "jlab/tagpoly.hpp"

namespace jlab::testing {

inline GaussRat random_gaussrat(std::mt19937_64& rng, int range = 5, bool allow_imag = true) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    Rational re(num(rng), den(rng));
    re.canonicalize();
    Rational im(0);
    if (allow_imag && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
        im = Rational(num(rng), den(rng));
        im.canonicalize();
    }
    return GaussRat(re, im);
}

inline BiPoly random_bipoly(std::mt19937_64& rng, int max_deg = 4, int max_terms = 5,
                            int coeff_range = 5, bool allow_imag = true) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> nterms(0, max_terms);
    BiPoly p;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        int dx = deg(rng), dy = deg(rng);
        p.add_term({dx, dy}, random_gaussrat(rng, coeff_range, allow_imag));
    }
    return p;
}

inline BiPoly random_nonzero_bipoly(std::mt19937_64& rng, int max_deg = 4, int max_terms = 5,
                                    int coeff_range = 5) {
    for (;;) {
        BiPoly p = random_bipoly(rng, max_deg, max_terms, coeff_range);
        if (!p.is_zero()) return p;
    }
}

}  // namespace jlab::testing
