#pragma once

// Finite subgroups of GL2(Z/mZ): closure from generators, orbits and
// stabilizers on (Z/mZ)^2, normal cores, derived series and stable lines.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tatlas/residue.hpp"

namespace tatlas {

inline constexpr std::size_t kDefaultSizeCap = 10'000'000;

/// A finite subgroup of GL2(Z/mZ), fully enumerated.
///
/// Elements are kept sorted by Mat2::key(), which is the lexicographic order
/// on row-major entries. Two MatGroups compare equal iff their element sets
/// agree; generators are presentation data only.
class MatGroup {
 public:
  /// Subgroup generated by `generators`. Throws kNonInvertible for a singular
  /// generator, kModulusMismatch if a generator has a different modulus and
  /// kSizeCapExceeded if the group grows beyond `cap` elements.
  static MatGroup closure(std::span<const Mat2> generators, Modulus m,
                          std::size_t cap = kDefaultSizeCap);
  static MatGroup trivial(Modulus m);

  /// Builds a group from an element list already known to be a subgroup.
  /// Elements are sorted here; generators are chosen greedily from them.
  static MatGroup from_elements(std::vector<Mat2> elements, Modulus m);
  /// As from_elements, keeping the supplied generators.
  static MatGroup from_elements(std::vector<Mat2> elements,
                                std::vector<Mat2> generators, Modulus m);

  Modulus modulus() const noexcept { return m_; }
  const std::vector<Mat2>& generators() const noexcept { return generators_; }
  const std::vector<Mat2>& elements() const noexcept { return elements_; }
  const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool contains(const Mat2& A) const noexcept;
  bool is_subgroup_of(const MatGroup& other) const noexcept;
  bool is_abelian() const noexcept;

  friend bool operator==(const MatGroup& x, const MatGroup& y) noexcept {
    return x.m_ == y.m_ && x.keys_ == y.keys_;
  }

 private:
  Modulus m_ = 1;
  std::vector<Mat2> generators_;
  std::vector<Mat2> elements_;
  std::vector<std::uint64_t> keys_;
};

/// Orbit of v under the group generated by `generators` (sorted).
std::vector<Vec2> orbit(std::span<const Mat2> generators, const Vec2& v);
std::vector<Vec2> orbit(const MatGroup& G, const Vec2& v);
MatGroup stabilizer(const MatGroup& G, const Vec2& v);

struct Orbit {
  Vec2 representative;      // least vector of the orbit
  std::size_t length = 0;
  std::vector<Vec2> members;  // empty unless requested
};

/// Partition of (Z/mZ)^2 into orbits, ordered by representative.
struct OrbitDecomposition {
  Modulus modulus = 1;
  std::vector<Orbit> orbits;

  /// Orbit lengths in ascending order (a multiset).
  std::vector<std::size_t> lengths() const;
  /// Distinct lengths of orbits whose vectors have additive order n.
  std::vector<std::size_t> lengths_of_order(std::uint64_t n) const;
};

OrbitDecomposition orbit_decomposition(std::span<const Mat2> generators,
                                       Modulus m, bool retain_members = false);
OrbitDecomposition orbit_decomposition(const MatGroup& G,
                                       bool retain_members = false);

MatGroup conjugate(const MatGroup& H, const Mat2& g);  // g H g^-1
bool normalizes(const Mat2& g, const MatGroup& H);
bool is_normal(const MatGroup& G, const MatGroup& N);
/// Largest subgroup of H normal in G. Throws kNotASubgroup unless H <= G.
MatGroup normal_core(const MatGroup& G, const MatGroup& H);
/// Smallest normal subgroup of G containing `seeds`.
MatGroup normal_closure(const MatGroup& G, std::span<const Mat2> seeds);
MatGroup intersection(const MatGroup& A, const MatGroup& B);

MatGroup derived_subgroup(const MatGroup& G);
bool is_solvable(const MatGroup& G);

/// Invariant factors d1 | d2 | ... | dk of G/[G,G] (empty when perfect).
std::vector<std::uint64_t> abelianization_invariants(const MatGroup& G);
/// True iff G has a normal subgroup with cyclic quotient of order a.
bool has_cyclic_quotient_of_order(const MatGroup& G, std::uint64_t a);

struct StableLines {
  std::size_t count = 0;
  std::vector<Vec2> lines;  // one spanning vector per line: (1,x) or (0,1)
};
/// G-invariant lines of F_p^2; requires a prime modulus.
StableLines stable_lines(const MatGroup& G);
StableLines stable_lines(std::span<const Mat2> generators, Modulus p);
/// Number of two-element sets of lines stabilized (setwise) by G whose
/// members are swapped by some element.
std::size_t swapped_line_pairs(const MatGroup& G);

std::size_t det_image_size(const MatGroup& G);
std::map<std::uint64_t, std::uint64_t> element_order_histogram(const MatGroup& G);

/// Reduction mod a divisor of the modulus, as a group.
MatGroup reduce_group(const MatGroup& G, Modulus new_modulus);

}  // namespace tatlas
