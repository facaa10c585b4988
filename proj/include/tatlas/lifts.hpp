#pragma once

// Subgroups of GL2(Z/p^2) reducing onto a given H <= GL2(F_p).

#include <array>
#include <vector>

#include "tatlas/census.hpp"

namespace tatlas {

enum class LiftPath {
  kReference,  // census of the full preimage, filtered by reduction
  kCocycle,    // H-stable kernel subspaces plus first cohomology
};

struct LiftOptions {
  bool surjective_only = true;  // false: reduce(G) may be any subgroup of H
  LiftPath path = LiftPath::kCocycle;
  bool fingerprints = true;
};

/// N_{GL2(F_p)}(H), by scanning GL2(F_p).
MatGroup normalizer_in_gl2(const MatGroup& H);
/// Full preimage of H under GL2(Z/target) -> GL2(Z/p).
MatGroup full_preimage(const MatGroup& H, Modulus target);
/// Generators of the preimage of N_{GL2(F_p)}(H) in GL2(Z/target).
std::vector<Mat2> lift_conjugators(const MatGroup& H, Modulus target);

/// Classes of G <= GL2(Z/p^2) with reduce(G) = H, up to conjugation by the
/// preimage of N(H); every G whose reduction is conjugate to H is conjugate to
/// one of these. Throws kNonPrimeModulus, kInvalidArgument (target != p^2) and
/// kNotSolvable (reference path on a non-solvable preimage).
std::vector<SubgroupClass> enumerate_lifts(const MatGroup& H, Modulus target,
                                           const LiftOptions& options = {});

/// H-stable subspaces of M2(F_p) (as F_p^4, row-major) in RREF, for the
/// conjugation action of H.
std::vector<std::vector<std::array<std::uint32_t, 4>>> stable_kernel_subspaces(const MatGroup& H);

}  // namespace tatlas
