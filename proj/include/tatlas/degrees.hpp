#pragma once

// Degrees of fields of definition of points of prime order: orbit lengths of
// possible images, collected per prime with provenance flags.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tatlas/group.hpp"

namespace tatlas {

/// Distinct orbit lengths of vectors of additive order exactly N.
/// Throws kNonDivisor unless N | m.
std::vector<std::uint64_t> degrees_for_group(const MatGroup& G, std::uint64_t N);
std::vector<std::uint64_t> degrees_for_generators(std::span<const Mat2> generators, Modulus m,
                                                  std::uint64_t N);

struct DegreeEntry {
  std::uint64_t degree = 0;
  bool cm_only = false;      // no unconditional non-CM image produces it
  bool conditional = false;  // every witness needs the uniformity conjecture to fail
  std::vector<std::string> witnesses;
  std::string note;  // free text, e.g. the j = 0 refinement
};

struct DegreeReport {
  std::uint64_t p = 2;
  bool assume_conjecture = false;
  std::vector<DegreeEntry> entries;  // ascending degree

  std::vector<std::uint64_t> degrees() const;
  std::vector<std::uint64_t> unconditional_degrees() const;
};

DegreeReport degrees_for_prime(std::uint64_t p, bool assume_conjecture);

struct MinimalDivisorSet {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> elements;              // from unconditional degrees
  std::vector<std::uint64_t> conditional_elements;  // extra minima from conditional degrees
};

/// Divisor-minimal degrees. With assume_conjecture the conditional part is empty.
/// Cached per (p, flag); thread-safe.
MinimalDivisorSet minimal_divisor_set(std::uint64_t p, bool assume_conjecture);
/// Divisor-minimal elements of a set.
std::vector<std::uint64_t> divisor_minimal(std::vector<std::uint64_t> values);

}  // namespace tatlas
