#include "doctest.h"
#include "oracle.hpp"
#include "tatlas/error.hpp"
#include "tatlas/rqd.hpp"

using namespace tatlas;

namespace {

using V = std::vector<std::uint64_t>;

}  // namespace

TEST_CASE("closed-form memberships") {
  CHECK(rq_membership(11, 5) == Membership3::Member);
  CHECK(rq_membership(11, 4) == Membership3::NonMember);
  CHECK(rq_membership(13, 4) == Membership3::Member);
  CHECK(rq_membership(13, 6) == Membership3::Member);
  CHECK(rq_membership(13, 5) == Membership3::NonMember);
  CHECK(rq_membership(37, 12) == Membership3::Member);
  CHECK(rq_membership(163, 81) == Membership3::Member);
  CHECK(rq_membership(23, 44) == Membership3::Member);    // (-7/23) = 1
  CHECK(rq_membership(31, 60) == Membership3::Member);    // 31 = 1 mod 3
  CHECK(rq_membership(47, 92) == Membership3::Member);
  CHECK(rq_membership(3167, 3343296) == Membership3::ConditionalOnConjecture);
  CHECK(rq_membership(3167, 3 * 3343296) == Membership3::Member);
  CHECK(rq_membership(15, 100) == Membership3::NonMember);
  CHECK_THROWS_AS(rq_membership(5, 0), AtlasError);
  CHECK(rq_member(3167, 3343296, false));
  CHECK_FALSE(rq_member(3167, 3343296, true));
}

TEST_CASE("R_Q(p) = R_Q(1) for p = 2 and primes p > 5") {
  const RQRow one = rq(1);
  CHECK(one.members == V{2, 3, 5, 7});
  for (std::uint64_t p = 2; p < 600; ++p) {
    if (!oracle::is_prime(p) || p == 3 || p == 5) continue;
    CHECK(rq(p).members == one.members);
  }
}

TEST_CASE("R* and S* tables") {
  std::map<std::uint64_t, V> nonempty;
  for (const auto& r : rq_table(100, RQView::RStar)) {
    if (!r.members.empty()) nonempty[r.d] = r.members;
    CHECK(r.conditional.empty());
  }
  const std::map<std::uint64_t, V> want{{1, {2, 3, 5, 7}}, {3, {13}}, {4, {13}}, {5, {11}},  {8, {17}},
                                        {9, {19}},         {12, {37}}, {21, {43}}, {33, {67}}, {44, {23}},
                                        {56, {29}},        {60, {31}}, {80, {41}}, {81, {163}}, {92, {47}}};
  CHECK(nonempty == want);
  std::map<std::uint64_t, V> s_nonempty;
  for (const auto& r : rq_table(42, RQView::SStar)) {
    if (!r.members.empty()) s_nonempty[r.d] = r.members;
  }
  const std::map<std::uint64_t, V> s_want{{1, {2, 3, 5, 7}}, {3, {13}}, {5, {11}},  {8, {17}},
                                          {9, {19}},         {12, {37}}, {21, {43}}, {33, {67}}};
  CHECK(s_nonempty == s_want);
}

TEST_CASE("table views are consistent with the single-row functions") {
  const auto r = rq_table(60, RQView::R), rs = rq_table(60, RQView::RStar);
  const auto s = rq_table(60, RQView::S), ss = rq_table(60, RQView::SStar);
  for (std::uint64_t d = 1; d <= 60; ++d) {
    CHECK(r[d - 1].members == rq(d).members);
    CHECK(rs[d - 1].members == rq_star(d).members);
    CHECK(s[d - 1].members == sq(d).members);
    CHECK(ss[d - 1].members == sq_star(d).members);
  }
}

TEST_CASE("scans and densities") {
  CHECK(scan_smallest_exceptional_prime() == 3167);
  CHECK(first_ambiguous_degree() == 3343296);
  CHECK(first_ambiguous_degree() == (3167ULL * 3167 - 1) / 3);
  CHECK(exceptional_prime_density() == boost::rational<std::int64_t>(1, 1536));
  CHECK(no_growth_density() == boost::rational<std::int64_t>(8, 35));
  CHECK(is_exceptional_prime(3167));
  CHECK_FALSE(is_exceptional_prime(17));  // (-1/17) = 1
  // Brute-force the first exceptional prime with square lists.
  std::uint64_t first = 0;
  for (std::uint64_t p = 5; first == 0; ++p) {
    if (!oracle::is_prime(p) || p % 9 != 8) continue;
    bool all = true;
    for (std::int64_t D : {1, 2, 7, 11, 19, 43, 67, 163}) all = all && oracle::legendre(-D, p) == -1;
    if (all) first = p;
  }
  CHECK(first == 3167);
}

TEST_CASE("no degree below the first ambiguous one is ambiguous") {
  // Conditional memberships need an exceptional p with (p^2-1)/3 | d.
  for (std::uint64_t d = 1; d <= 3000; ++d) CHECK(rq(d).conditional.empty());
}
