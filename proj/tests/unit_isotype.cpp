#include "doctest.h"
#include "support.hpp"
#include "tatlas/catalog.hpp"
#include "tatlas/error.hpp"
#include "tatlas/isotype.hpp"

using namespace tatlas;

TEST_CASE("named groups have their textbook invariants") {
  const GroupIsoType s4 = classify(group_by_name("S4"));
  CHECK(s4.order == 24);
  CHECK(s4.center_order == 1);
  CHECK(s4.abelianization == std::vector<std::uint64_t>{2});
  CHECK(s4.element_orders == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
  const GroupIsoType a4 = classify(group_by_name("A4"));
  CHECK(a4.abelianization == std::vector<std::uint64_t>{3});
  CHECK(classify(group_by_name("Q8")).center_order == 2);
  CHECK(classify(FiniteGroup::cyclic(12)).describe() == "C12");
  CHECK(abelian_name({2, 4}) == "C2xC4");
  CHECK_THROWS_AS(group_by_name("nonsense"), AtlasError);
}

TEST_CASE("isomorphism search separates lookalikes") {
  // D4 and Q8 share order and center; C4xC2 vs C8.
  CHECK_FALSE(are_isomorphic(group_by_name("D4"), group_by_name("Q8")));
  CHECK(are_isomorphic(FiniteGroup::dicyclic(2), group_by_name("Q8")));
  CHECK_FALSE(are_isomorphic(FiniteGroup::cyclic(8), group_by_name("C2xC4")));
  CHECK(are_isomorphic(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)),
                       FiniteGroup::cyclic(6)));
}

TEST_CASE("quotients of matrix groups") {
  const MatGroup G = build_named({GroupName::GL2, 3, {}});
  const std::vector<Mat2> minus{Mat2::scalar(-1, 3)};
  CHECK(quotient_iso_type(G, MatGroup::closure(minus, 3)).describe() == "S4");
  CHECK(iso_type(build_named({GroupName::SL2, 3, {}})).describe() == "SL(2,3)");
  CHECK(iso_type(build_named({GroupName::Cs, 5, {}})).describe() == "C4xC4");
  CHECK_THROWS_AS(FiniteGroup::quotient(G, stabilizer(G, Vec2::make(1, 0, 3))), AtlasError);
}

TEST_CASE("cyclic quotients from a fingerprint") {
  const GroupIsoType s4 = classify(group_by_name("S4"));
  CHECK(has_cyclic_quotient_of_order(s4, 1));
  CHECK(has_cyclic_quotient_of_order(s4, 2));
  CHECK_FALSE(has_cyclic_quotient_of_order(s4, 4));
  CHECK_FALSE(has_cyclic_quotient_of_order(s4, 6));
  CHECK_THROWS_AS(has_cyclic_quotient_of_order(s4, 0), AtlasError);
}

TEST_CASE("galois closure quotient of a point field") {
  // Borel mod 5 acting on (1,0): the orbit has 4 points and the core is the
  // kernel of the character, so the quotient is cyclic of order 4.
  const MatGroup B = build_named({GroupName::BorelFull, 5, {}});
  CHECK(galois_closure_quotient(B, Vec2::make(1, 0, 5)).describe() == "C4");
  // GL2(F3) on 8 nonzero vectors: faithful.
  const MatGroup G = build_named({GroupName::GL2, 3, {}});
  CHECK(galois_closure_quotient(G, Vec2::make(1, 0, 3)).order == 48);
}
