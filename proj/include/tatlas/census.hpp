#pragma once

// Conjugacy classes of subgroups: the cyclic-extension census for solvable
// ambients, a join-closure fallback for small ones, conjugacy fusion under an
// arbitrary conjugating group, and quotient/subgroup searches built on them.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tatlas/group.hpp"
#include "tatlas/isotype.hpp"

namespace tatlas {

struct SubgroupFingerprint {
  std::uint64_t order = 1;
  std::vector<std::size_t> orbit_lengths;  // all orbits on (Z/mZ)^2, ascending
  std::size_t det_image = 1;
  std::optional<std::size_t> stable_lines;  // prime modulus only
  std::map<std::uint64_t, std::uint64_t> element_orders;

  /// Distinct lengths of orbits of nonzero vectors.
  std::vector<std::size_t> nonzero_orbit_lengths() const;
  friend bool operator==(const SubgroupFingerprint&, const SubgroupFingerprint&) = default;
};

SubgroupFingerprint fingerprint_of(const MatGroup& G);

struct SubgroupClass {
  MatGroup representative;  // least element list in the class
  SubgroupFingerprint fingerprint;
  std::size_t class_size = 1;
};

struct CensusOptions {
  /// Non-solvable ambients up to this order use the join-closure method.
  std::size_t small_order_cap = 500;
  /// Skip fingerprints (orbits, element orders) when only groups are needed.
  bool fingerprints = true;
};

/// All conjugacy classes of subgroups of `ambient`, sorted by (order,
/// representative keys). Throws kNotSolvableAndTooLarge for non-solvable
/// ambients above options.small_order_cap.
std::vector<SubgroupClass> subgroups_up_to_conjugacy(const MatGroup& ambient,
                                                     const CensusOptions& options = {});

/// Streaming form: `visit(rep, class_size)` is called once per class, in
/// discovery order. Representatives are canonical.
void for_each_subgroup_class(const MatGroup& ambient,
                             const std::function<void(const MatGroup&, std::size_t)>& visit,
                             const CensusOptions& options = {});

struct CanonicalConjugate {
  MatGroup group;           // least conjugate by key order
  std::size_t class_size = 1;  // number of distinct conjugates
};

/// Canonical conjugate of H under the group generated by `conjugators`.
CanonicalConjugate canonical_conjugate(const MatGroup& H, std::span<const Mat2> conjugators);

/// Deduplicates `groups` up to conjugation by <conjugators>; output sorted
/// like a census.
std::vector<SubgroupClass> fuse_classes(const std::vector<MatGroup>& groups,
                                        std::span<const Mat2> conjugators,
                                        bool fingerprints = true);

/// All normal subgroups of G (joins of normal closures of conjugacy classes),
/// sorted by order then keys.
std::vector<MatGroup> normal_subgroups(const MatGroup& G);

/// True iff some H <= ambient and N normal in H give H/N isomorphic to target.
bool is_quotient_of_subgroup(const FiniteGroup& target, const MatGroup& ambient,
                             const CensusOptions& options = {});
/// True iff some N normal in G gives G/N isomorphic to target.
bool is_quotient_of(const FiniteGroup& target, const MatGroup& G);
/// True iff some subgroup of ambient is isomorphic to target.
bool has_subgroup_isomorphic_to(const FiniteGroup& target, const MatGroup& ambient,
                                const CensusOptions& options = {});

}  // namespace tatlas
