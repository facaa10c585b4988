#include "doctest.h"
#include "support.hpp"
#include "tatlas/catalog.hpp"
#include "tatlas/census.hpp"
#include "tatlas/error.hpp"
#include "tatlas/isotype.hpp"

using namespace tatlas;

namespace {

std::vector<oracle::ClassSummary> census_summary(const std::vector<SubgroupClass>& classes) {
  std::vector<oracle::ClassSummary> out;
  for (const auto& c : classes) out.push_back({c.representative.order(), c.class_size});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::ClassSummary> brute_summary(const MatGroup& G) {
  const oracle::Table t(support::elements(G), G.modulus());
  std::vector<std::size_t> all(t.n);
  std::iota(all.begin(), all.end(), 0);
  return oracle::summarize(oracle::classes_under(t, oracle::all_subgroups(t), all));
}

}  // namespace

TEST_CASE("census agrees with brute-force subgroup enumeration") {
  for (auto spec : {NamedGroupSpec{GroupName::GL2, 3, {}}, NamedGroupSpec{GroupName::BorelFull, 5, {}},
                    NamedGroupSpec{GroupName::CsPlus, 5, {}}, NamedGroupSpec{GroupName::CnsPlus, 5, {}},
                    NamedGroupSpec{GroupName::GL2, 2, {}}, NamedGroupSpec{GroupName::BorelFull, 7, {}}}) {
    CAPTURE(spec.label());
    const MatGroup G = build_named(spec);
    CHECK(census_summary(subgroups_up_to_conjugacy(G)) == brute_summary(G));
  }
}

TEST_CASE("GL2(F3) has 16 classes of subgroups") {
  CHECK(subgroups_up_to_conjugacy(build_named({GroupName::GL2, 3, {}})).size() == 16);
}

TEST_CASE("representatives are canonical and fingerprints consistent") {
  const MatGroup G = build_named({GroupName::CnsPlus, 7, {}});
  for (const auto& c : subgroups_up_to_conjugacy(G)) {
    const auto cc = canonical_conjugate(c.representative, G.elements());
    CHECK(cc.group == c.representative);
    CHECK(cc.class_size == c.class_size);
    CHECK(c.fingerprint == fingerprint_of(c.representative));
  }
}

TEST_CASE("non-solvable ambients: small ones by joins, large ones refused") {
  const MatGroup sl25 = build_named({GroupName::SL2, 5, {}});
  CHECK(census_summary(subgroups_up_to_conjugacy(sl25)) == brute_summary(sl25));
  try {
    subgroups_up_to_conjugacy(build_named({GroupName::GL2, 7, {}}));
    FAIL("expected refusal");
  } catch (const AtlasError& e) {
    CHECK(e.code() == ErrorCode::kNotSolvableAndTooLarge);
  }
}

TEST_CASE("fusing duplicates and conjugates") {
  const MatGroup G = build_named({GroupName::GL2, 3, {}});
  const MatGroup B = build_named({GroupName::BorelFull, 3, {}});
  const Mat2 w(0, 1, 1, 0, 3);
  const std::vector<MatGroup> list{B, conjugate(B, w), B};
  const auto fused = fuse_classes(list, G.generators());
  REQUIRE(fused.size() == 1);
  CHECK(fused[0].class_size == 4);
}

TEST_CASE("normal subgroups and quotient searches") {
  const MatGroup G5 = build_named({GroupName::GL2, 5, {}});
  std::vector<std::size_t> orders;
  for (const auto& N : normal_subgroups(G5)) orders.push_back(N.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 4, 120, 240, 480});
  CHECK_FALSE(is_quotient_of(group_by_name("S4"), G5));
  CHECK(is_quotient_of(group_by_name("S4"), build_named({GroupName::GL2, 3, {}})));
  CHECK_FALSE(is_quotient_of_subgroup(group_by_name("S4"), build_named({GroupName::CnsPlus, 5, {}})));
  CHECK(has_subgroup_isomorphic_to(group_by_name("Q8"), build_named({GroupName::GL2, 3, {}})));
  CHECK_FALSE(has_subgroup_isomorphic_to(group_by_name("S4"), build_named({GroupName::GL2, 3, {}})));
}
