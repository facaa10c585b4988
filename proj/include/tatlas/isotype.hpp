#pragma once

// Abstract finite groups given by Cayley tables, their fingerprints and a
// small library of named groups used to put names on quotients.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tatlas/group.hpp"

namespace tatlas {

/// Largest quotient for which a Cayley table is built.
inline constexpr std::size_t kQuotientTableCap = 4096;
/// Largest order at which a name is confirmed by explicit isomorphism.
inline constexpr std::size_t kIsomorphismSearchCap = 48;

/// Group on {0, ..., n-1} with element 0 the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Row-major n x n table. Throws kInvalidArgument if 0 is not the identity
  /// or the table is not a Latin square.
  static FiniteGroup from_table(std::vector<std::uint32_t> table, std::size_t n);
  static FiniteGroup from_mat_group(const MatGroup& G);
  /// G/N via coset multiplication. Throws kNotNormal, kSizeCapExceeded.
  static FiniteGroup quotient(const MatGroup& G, const MatGroup& N,
                              std::size_t cap = kQuotientTableCap);
  /// Closure of permutations of {0, ..., degree-1}.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& gens);
  static FiniteGroup cyclic(std::size_t n);
  /// C_m x| C_n with b a b^-1 = a^r; requires r^n = 1 mod m.
  static FiniteGroup semidirect_cyclic(std::size_t m, std::size_t n, std::size_t r);
  /// Dicyclic group of order 4n: <a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>.
  static FiniteGroup dicyclic(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

  std::size_t order() const noexcept { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return table_[std::size_t{a} * n_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const noexcept { return inverse_[a]; }
  std::uint64_t element_order(std::uint32_t a) const noexcept;
  bool is_abelian() const noexcept;
  /// A small generating set, preferring elements of large order.
  const std::vector<std::uint32_t>& generators() const noexcept { return gens_; }

  /// Subgroup generated by `elements`, as a membership mask.
  std::vector<char> closure(const std::vector<std::uint32_t>& elements) const;

 private:
  void finish();

  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> gens_;
};

struct GroupIsoType {
  std::uint64_t order = 1;
  bool abelian = true;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // order -> count
  std::uint64_t center_order = 1;
  std::vector<std::uint64_t> abelianization;  // invariant factors
  std::optional<std::string> name;

  /// The name if known, otherwise the fingerprint spelled out.
  std::string describe() const;
  std::string fingerprint_string() const;
  bool same_fingerprint(const GroupIsoType& other) const;
};

GroupIsoType classify(const FiniteGroup& G);
/// Backtracking search for an isomorphism; fingerprints are compared first.
bool are_isomorphic(const FiniteGroup& A, const FiniteGroup& B);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
  GroupIsoType type;
};
/// Named non-abelian groups of order <= 48 (abelian ones are named from
/// their invariants).
const std::vector<NamedGroup>& named_group_library();
/// Group for a name: library entries, "Cn" and abelian products "C2xC4".
/// Throws kInvalidArgument for unknown names.
FiniteGroup group_by_name(std::string_view name);
std::string abelian_name(const std::vector<std::uint64_t>& invariants);

GroupIsoType iso_type(const MatGroup& G);
GroupIsoType quotient_iso_type(const MatGroup& G, const MatGroup& N);
/// True iff the group with this fingerprint has a cyclic quotient of order a.
bool has_cyclic_quotient_of_order(const GroupIsoType& type, std::uint64_t a);

/// Type of G / core(G, Stab(v)).
GroupIsoType galois_closure_quotient(const MatGroup& G, const Vec2& v);

/// Invariant factors of a finite abelian group of the given order, from the
/// counts c(e) = #{x : x^e = 1} for prime powers e dividing the order.
std::vector<std::uint64_t> abelian_invariants_from_counts(
    std::uint64_t order, const std::function<std::uint64_t(std::uint64_t)>& count_killed);

}  // namespace tatlas
