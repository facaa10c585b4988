#include "doctest.h"
#include "support.hpp"
#include "tatlas/catalog.hpp"
#include "tatlas/degrees.hpp"
#include "tatlas/error.hpp"

using namespace tatlas;

namespace {

std::string compact(const DegreeReport& r) {
  std::string s;
  for (const auto& e : r.entries) {
    if (!s.empty()) s += ",";
    s += std::to_string(e.degree) + (e.cm_only ? "*" : "") + (e.conditional ? "?" : "");
  }
  return s;
}

}  // namespace

TEST_CASE("degree rows for the small primes") {
  CHECK(compact(degrees_for_prime(2, false)) == "1,2,3");
  CHECK(compact(degrees_for_prime(3, false)) == "1,2,3,4,6,8");
  CHECK(compact(degrees_for_prime(5, false)) == "1,2,4,5,8,10,16,20,24");
  CHECK(compact(degrees_for_prime(7, false)) == "1,2,3,6,7,9,12,14,18,21,24*,36,42,48");
  CHECK(compact(degrees_for_prime(11, false)) == "5,10,20*,40*,55,80*,100*,110,120");
  CHECK(compact(degrees_for_prime(13, false)) == "3,4,6,12,24*,39,48*,52,72,78,96,144*,156,168");
  CHECK(compact(degrees_for_prime(17, false)) == "8,16,32*,96?,136,192?,256*,272,288");
  CHECK(compact(degrees_for_prime(37, false)) == "12,36,72*,444,1296*,1332,1368");
}

TEST_CASE("the conjecture toggle removes exactly the conditional degrees") {
  CHECK(compact(degrees_for_prime(17, true)) == "8,16,32*,136,256*,272,288");
  for (std::uint64_t p : {11, 13, 37, 41, 47, 53}) {
    const auto a = degrees_for_prime(p, false), b = degrees_for_prime(p, true);
    CHECK(b.degrees() == a.unconditional_degrees());
  }
}

TEST_CASE("j = 0 refinement is noted") {
  for (const auto& e : degrees_for_prime(7, false).entries) {
    if (e.degree == 24) CHECK(e.note == "j-invariant 0 only");
  }
  for (const auto& e : degrees_for_prime(13, false).entries) {
    if (e.degree == 24) CHECK(e.note.empty());
  }
}

TEST_CASE("orbit degrees of every listed image agree with BFS orbits") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const auto pi = static_cast<std::int64_t>(p);
    std::vector<ImagePossibility> all = noncm_possible_images(p, false);
    for (const auto& cm : rational_cm_pairs()) {
      for (auto& x : cm_possible_images(cm, p)) all.push_back(std::move(x));
    }
    for (const auto& x : all) {
      if (x.order > 3000) continue;
      CAPTURE(x.label);
      CHECK(degrees_for_generators(x.generators, static_cast<Modulus>(p), p) ==
            oracle::degrees(oracle::closure(support::plain(x.generators), pi), pi, pi));
    }
  }
}

TEST_CASE("degrees of composite-order points") {
  const std::vector<Mat2> gens{Mat2(1, 1, 0, 1, 49), Mat2(1, 0, 0, 3, 49)};
  const MatGroup G = MatGroup::closure(gens, 49);
  const auto plain = support::elements(G);
  CHECK(degrees_for_group(G, 49) == oracle::degrees(plain, 49, 49));
  CHECK(degrees_for_group(G, 7) == oracle::degrees(plain, 49, 7));
  CHECK_THROWS_AS(degrees_for_group(G, 5), AtlasError);
}

TEST_CASE("minimal divisor sets") {
  CHECK(divisor_minimal({12, 4, 6, 8, 3}) == std::vector<std::uint64_t>{3, 4});
  CHECK(minimal_divisor_set(13, false).elements == std::vector<std::uint64_t>{3, 4});
  CHECK(minimal_divisor_set(17, false).elements == std::vector<std::uint64_t>{8});
  CHECK(minimal_divisor_set(17, false).conditional_elements.empty());  // 96 = 12 * 8
  CHECK(minimal_divisor_set(43, false).elements == std::vector<std::uint64_t>{21});
}
