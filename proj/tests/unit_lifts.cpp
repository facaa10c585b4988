#include "doctest.h"
#include "support.hpp"
#include "tatlas/catalog.hpp"
#include "tatlas/error.hpp"
#include "tatlas/lifts.hpp"

using namespace tatlas;

TEST_CASE("stable subspaces of M2(F_p) for the trivial group are all subspaces") {
  // Gaussian binomials: subspaces of F_p^4.
  CHECK(stable_kernel_subspaces(MatGroup::trivial(2)).size() == 1 + 15 + 35 + 15 + 1);
  CHECK(stable_kernel_subspaces(MatGroup::trivial(3)).size() == 1 + 40 + 130 + 40 + 1);
}

TEST_CASE("stable subspaces for GL2 are 0, scalars, sl2 and everything") {
  // Mod 5 the trace form splits M2 = scalars + sl2, both irreducible.
  CHECK(stable_kernel_subspaces(build_named({GroupName::GL2, 5, {}})).size() == 4);
}

TEST_CASE("preimages and conjugators") {
  const MatGroup H = build_named({GroupName::BorelFixLine, 3, {}});
  const MatGroup P = full_preimage(H, 9);
  CHECK(P.order() == H.order() * 81);
  CHECK(reduce_group(P, 3) == H);
  CHECK(normalizer_in_gl2(H) == build_named({GroupName::BorelFull, 3, {}}));
  for (const auto& g : lift_conjugators(H, 9)) CHECK(is_invertible(g));
}

TEST_CASE("cocycle and reference paths agree on small bases") {
  for (auto spec : {NamedGroupSpec{GroupName::GL2, 2, {}}, NamedGroupSpec{GroupName::BorelFull, 3, {}},
                    NamedGroupSpec{GroupName::Cs, 3, {}}, NamedGroupSpec{GroupName::CnsPlus, 3, {}},
                    NamedGroupSpec{GroupName::BorelQuotientLine, 5, {}}}) {
    CAPTURE(spec.label());
    const MatGroup H = build_named(spec);
    const Modulus t = static_cast<Modulus>(spec.p * spec.p);
    for (bool surj : {true, false}) {
      const auto a = enumerate_lifts(H, t, {surj, LiftPath::kCocycle, false});
      const auto b = enumerate_lifts(H, t, {surj, LiftPath::kReference, false});
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].representative == b[i].representative);
        CHECK(a[i].class_size == b[i].class_size);
      }
    }
  }
}

TEST_CASE("lift arguments are validated") {
  const MatGroup H = build_named({GroupName::Cs, 5, {}});
  CHECK_THROWS_AS(enumerate_lifts(H, 125), AtlasError);
  CHECK_THROWS_AS(enumerate_lifts(MatGroup::trivial(6), 36), AtlasError);
}
