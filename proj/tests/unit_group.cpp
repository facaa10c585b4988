#include "doctest.h"
#include "support.hpp"
#include "tatlas/catalog.hpp"
#include "tatlas/error.hpp"
#include "tatlas/group.hpp"

using namespace tatlas;

TEST_CASE("closure matches breadth-first search") {
  oracle::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t m = rng.range(2, 12);
    std::vector<Mat2> gens;
    std::vector<oracle::M> plain;
    const int k = static_cast<int>(rng.range(1, 2));
    for (int j = 0; j < k; ++j) {
      plain.push_back(support::random_invertible(rng, m));
      gens.push_back(support::mat(plain.back(), m));
    }
    const MatGroup G = MatGroup::closure(gens, m);
    CHECK(support::elements(G) == oracle::closure(plain, m));
  }
}

TEST_CASE("closure refuses bad generators and respects the cap") {
  const std::vector<Mat2> singular{Mat2(2, 0, 0, 1, 4)};
  CHECK_THROWS_AS(MatGroup::closure(singular, 4), AtlasError);
  const std::vector<Mat2> gl{Mat2(1, 1, 0, 1, 7), Mat2(1, 0, 1, 1, 7), diag(3, 1, 7)};
  CHECK(MatGroup::closure(gl, 7).order() == 2016);
  try {
    MatGroup::closure(gl, 7, 100);
    FAIL("expected size cap");
  } catch (const AtlasError& e) {
    CHECK(e.code() == ErrorCode::kSizeCapExceeded);
  }
}

TEST_CASE("orbits and stabilizers") {
  const MatGroup G = build_named({GroupName::CnsPlus, 5, {}});
  const auto d = orbit_decomposition(G);
  CHECK(d.lengths() == std::vector<std::size_t>{1, 24});
  const MatGroup S = stabilizer(G, Vec2::make(1, 0, 5));
  CHECK(S.order() == 2);
  const MatGroup B = build_named({GroupName::BorelFixLine, 7, {}});
  CHECK(stabilizer(B, Vec2::make(1, 0, 7)) == B);
  CHECK(orbit_decomposition(build_named({GroupName::G00, 7, {}})).lengths_of_order(7) ==
        std::vector<std::size_t>{6, 42});
}

TEST_CASE("normality, cores and solvability") {
  const MatGroup G = build_named({GroupName::GL2, 3, {}});
  const MatGroup S = build_named({GroupName::SL2, 3, {}});
  CHECK(is_normal(G, S));
  CHECK(derived_subgroup(G) == S);
  CHECK(is_solvable(G));
  CHECK_FALSE(is_solvable(build_named({GroupName::SL2, 5, {}})));
  const MatGroup stab = stabilizer(G, Vec2::make(1, 0, 3));
  CHECK_FALSE(is_normal(G, stab));
  CHECK(normal_core(G, stab).order() == 1);
  CHECK(abelianization_invariants(G) == std::vector<std::uint64_t>{2});
  CHECK(has_cyclic_quotient_of_order(G, 2));
  CHECK_FALSE(has_cyclic_quotient_of_order(G, 3));
}

TEST_CASE("stable lines, determinant images and reduction") {
  CHECK(stable_lines(build_named({GroupName::BorelFull, 5, {}})).count == 1);
  CHECK(stable_lines(build_named({GroupName::Cs, 5, {}})).count == 2);
  CHECK(stable_lines(build_named({GroupName::CsPlus, 5, {}})).count == 0);
  CHECK(swapped_line_pairs(build_named({GroupName::CsPlus, 5, {}})) >= 1);
  CHECK(stable_lines(build_named({GroupName::CnsPlus, 5, {}})).count == 0);
  CHECK(det_image_size(build_named({GroupName::SL2, 7, {}})) == 1);
  CHECK(det_image_size(build_named({GroupName::GL2, 7, {}})) == 6);
  const std::vector<Mat2> gens{Mat2(1, 1, 0, 1, 9), Mat2(2, 0, 0, 1, 9)};
  const MatGroup G = MatGroup::closure(gens, 9);
  const MatGroup R = reduce_group(G, 3);
  CHECK(R.order() == 6);
  CHECK(R == build_named({GroupName::BorelQuotientLine, 3, {}}));
}
