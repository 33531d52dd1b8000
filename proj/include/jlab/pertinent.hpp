#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jlab/bipoly.hpp"
#include "jlab/classify.hpp"
#include "jlab/tagpoly.hpp"

namespace jlab {

enum class Orientation { XDominant, YDominant };

inline std::string to_string(Orientation o) {
    return o == Orientation::XDominant ? "x" : "y";
}

/// A family of pertinent variables u_0..u_N:
///   u_0 = y,  u_i = x^i - x^{i r} y^{i s}   (X-dominant)
///   u_0 = x,  u_i = y^i - y^{i r} x^{i s}   (Y-dominant)
/// Valid exponents: r = 1, or r >= 2 with gcd(r-1, s) = 1.
struct PertinentFamily {
    Orientation orientation;
    int r = 1;
    int s = 1;
    int N = 1;

    friend bool operator==(const PertinentFamily& a, const PertinentFamily& b) {
        return a.orientation == b.orientation && a.r == b.r && a.s == b.s && a.N == b.N;
    }
};

bool family_valid(const PertinentFamily& fam);

/// Exact generator list [u_0, ..., u_N]; rejects invalid (r, s) combinations.
std::vector<BiPoly> family_generators(const PertinentFamily& fam);

/// A successful rewrite of (f, g) into the family's variables: E_f, E_g are
/// tag-only and substituting u_i back reproduces f and g exactly.
struct Recognition {
    PertinentFamily family;
    TagPoly E_f;
    TagPoly E_g;
    bool f_uses_u0 = false, f_uses_u1 = false;
    bool g_uses_u0 = false, g_uses_u1 = false;
};

enum class ClassLabel { NotC1, C1MinusC2, C2, Undecided };

std::string to_string(ClassLabel label);

struct ClassReport {
    GoodMapReport good;
    std::vector<Recognition> recognitions;
    std::vector<PertinentFamily> undecided;  // candidates that hit the resource cap
    ClassLabel label = ClassLabel::NotC1;
};

struct RecognizeBounds {
    std::optional<int> r_max;  // default: max degree in the dominant variable
    std::optional<int> s_max;  // default: max degree in the other variable
};

/// Searches both orientations and all admissible (r, s) up to the bounds.
/// Membership is decided by elimination normal form; every emitted
/// recognition satisfies the round-trip identity and the U_0/U_1 usage
/// constraint. Class labels:
///   C2          some success has r = 1
///   C1_MINUS_C2 successes exist, all with r >= 2
///   NOT_C1      no success (and no candidate hit the resource cap)
///   UNDECIDED   no success but some candidate exceeded the cap
/// Labels other than NOT_C1 additionally require the map to be good.
ClassReport recognize(const PolyMap& F, const RecognizeBounds& bounds = {});

/// Exact witnesses that an r = 1 (class C2) map fails the Non-Zero Condition:
/// df/dx = (1 - y^s) q_f and dg/dx = (1 - y^s) q_g (mirrored for Y-dominant
/// families), so det JF vanishes on the curve y^s = 1.
struct RefutationCertificate {
    BiPoly divisor;  // 1 - y^s (X) or 1 - x^s (Y)
    BiPoly q_f;
    BiPoly q_g;
};

/// Requires a family with r = 1 under which F is recognized; divisibility
/// failure indicates a recognition bug and throws std::logic_error.
RefutationCertificate c2_refute(const PolyMap& F, const PertinentFamily& family);

/// Decides whether the system du_1/dx = ... = du_n/dx = 0 admits solution
/// curves of the witness form (x free, y = an s-th root of unity), via the
/// w-reduction: du_i/dx = i x^{i-1} (1 - r w^i) with w = x^{r-1} y^s. The
/// factorization is verified exactly; curve solutions exist iff r = 1.
struct LemmaVerdict {
    bool solvable = false;
    std::string witness;  // human-readable description when solvable
};

LemmaVerdict lemma_system_check(int r, int s, int n);

/// Necessary membership filter: every element of C[u_0..u_N] agrees with a
/// polynomial in the non-dominant variable alone on the vanishing curve of
/// the family (x^{r-1} y^s = 1, resp. mirrored). Returns false only when
/// membership is impossible; a true result is inconclusive.
bool vanishing_curve_filter(const BiPoly& p, int r, int s);

}  // namespace jlab
