#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "jlab/tagpoly.hpp"

namespace jlab {

/// Raised when a Groebner computation exceeds its size guard. Callers must
/// treat this as "undecided", never as a membership verdict.
class ResourceCapExceeded : public std::runtime_error {
public:
    explicit ResourceCapExceeded(std::uint64_t cap)
        : std::runtime_error("elimination resource cap exceeded (" + std::to_string(cap) +
                             " intermediate terms)"),
          cap(cap) {}
    std::uint64_t cap;
};

/// Default size guard: total number of intermediate terms produced across a
/// single basis computation. Overridable via the JLAB_RESOURCE_CAP
/// environment variable.
std::uint64_t default_resource_cap();

/// Reduced Groebner basis of the given generators under the elimination
/// order, by Buchberger's algorithm with the normal selection strategy
/// (smallest lcm degree first). Deterministic for a fixed generator order.
std::vector<TagPoly> groebner_basis(const std::vector<TagPoly>& generators,
                                    std::uint64_t resource_cap = default_resource_cap());

/// Unique remainder of p modulo a Groebner basis. Tag-only iff p lies in the
/// subalgebra generated by the tagged polynomials.
TagPoly normal_form(const TagPoly& p, const std::vector<TagPoly>& basis,
                    std::uint64_t resource_cap = default_resource_cap());

}  // namespace jlab
