#pragma once

// Named subgroups of GL2(F_p), the labelled image tables (identified by
// fingerprint inside censuses), and the lists of possible mod-p images for
// non-CM and CM curves over Q.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tatlas/census.hpp"
#include "tatlas/group.hpp"

namespace tatlas {

/// epsilon = -1 for p = 3 mod 4, else the least non-residue >= 2.
Residue epsilon_for(std::uint64_t p);

/// Legendre symbol by Euler's criterion.
int legendre_euler(std::int64_t a, std::uint64_t p);
/// Legendre symbol by quadratic reciprocity (Jacobi-symbol recursion).
int legendre_reciprocity(std::int64_t a, std::uint64_t p);
/// Both paths; throws kInternal if they disagree. p must be an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

enum class GroupName {
  Cs,
  CsPlus,
  Cns,
  CnsPlus,
  G0,
  G3,
  G00,
  G10,
  G01,
  BorelFull,
  BorelFixLine,       // [[1,b],[0,d]]
  BorelQuotientLine,  // [[a,b],[0,1]]
  SL2,
  GL2,
  PS4Preimage,
};

std::string_view group_name_string(GroupName name);
/// Inverse of group_name_string; throws kParseError.
GroupName parse_group_name(std::string_view text);

struct NamedGroupSpec {
  GroupName name = GroupName::GL2;
  std::uint64_t p = 2;
  std::optional<std::uint64_t> epsilon;  // non-split Cartan parameter override

  std::string label() const;  // e.g. "CnsPlus(5)"
};

/// Throws kSpecViolation (with the violated condition in the message) when the
/// spec's preconditions fail.
void validate(const NamedGroupSpec& spec);
/// Generators only; works for every p (GL2(F_163) is never enumerated).
std::vector<Mat2> named_generators(const NamedGroupSpec& spec);
/// Order by closed form.
std::uint64_t named_order(const NamedGroupSpec& spec);
/// The group itself; subject to the closure size cap.
MatGroup build_named(const NamedGroupSpec& spec);

// ------------------------------------------------------------ CM data

struct CMDatum {
  std::uint64_t D = 3;  // discriminant -D
  std::uint64_t f = 1;  // conductor
  friend bool operator==(const CMDatum&, const CMDatum&) = default;
};

/// The 13 rational CM pairs.
const std::array<CMDatum, 13>& rational_cm_pairs();
/// {1,2,7,11,19,43,67,163}
const std::array<std::uint64_t, 8>& cm_constant();

struct ExceptionalJ {
  std::uint64_t p;
  std::string j;  // exact rational, as text
};
/// Known (p, j) pairs with non-surjective image for p >= 17 (data only).
const std::vector<ExceptionalJ>& exceptional_j_invariants();

// ------------------------------------------------------------ table rows

/// One labelled image: its order d and the distinct orbit lengths d_v of
/// nonzero vectors. Labels are names only and are never parsed.
struct TableRow {
  std::string label;
  std::uint64_t p;
  std::uint64_t d;
  std::vector<std::size_t> dv;
};

/// Every labelled row (p <= 11 first, then 13, 17, 37), in printed order.
const std::vector<TableRow>& table_rows();
std::vector<TableRow> table_rows_for(std::uint64_t p);

/// Solvable ambients whose censuses contain the labelled groups at p:
/// GL2 itself for p <= 3, else BorelFull, CsPlus, CnsPlus and (p in {5,13})
/// PS4Preimage.
std::vector<NamedGroupSpec> table_ambients(std::uint64_t p);

struct RowMatch {
  TableRow row;
  std::vector<MatGroup> matches;  // one per matching census class, fused under GL2(F_p)
  std::vector<std::string> nearest;  // fingerprints of the closest classes when none match
};

/// Census-based identification for p <= 13, targeted Borel search for 17, 37.
/// Cached per p; thread-safe.
const std::vector<RowMatch>& identify_table_rows(std::uint64_t p);

/// Subgroups <D, s I, [[1,1],[0,1]]> of BorelFull(p) for diagonal D and scalar
/// s, deduplicated by element set.
std::vector<MatGroup> borel_targeted_search(std::uint64_t p);

/// -I in G, det(G) = F_p^*, and G has an element of trace 0 and det -1.
bool is_applicable(const MatGroup& G);

struct Prop13Census {
  std::vector<SubgroupClass> applicable;  // fused under GL2(F_13), ambients and labelled rows removed
  std::vector<SubgroupClass> excluded;    // >= 2 stable lines
  std::vector<SubgroupClass> survivors;
};
/// Applicable subgroups of CsPlus(13), CnsPlus(13) and PS4Preimage(13). Cached.
const Prop13Census& prop13_census();

// ------------------------------------------------------------ images

enum class Conditionality { Unconditional, OnlyIfConjectureFails };

struct ImagePossibility {
  std::string label;
  std::optional<NamedGroupSpec> spec;  // set for named groups
  std::vector<Mat2> generators;
  std::uint64_t order = 1;
  Conditionality conditionality = Conditionality::Unconditional;
  bool cm_only = false;
};

std::vector<ImagePossibility> noncm_possible_images(std::uint64_t p, bool assume_conjecture);
/// Throws kUnknownCMPair for pairs outside rational_cm_pairs().
std::vector<ImagePossibility> cm_possible_images(const CMDatum& cm, std::uint64_t p);

}  // namespace tatlas
