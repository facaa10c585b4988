#pragma once

// Which primes p admit a point of order p over a number field of degree d:
// tri-state membership, the R, R* and S tables, density constants and scans.

#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace tatlas {

enum class Membership3 { Member, NonMember, ConditionalOnConjecture };

std::string_view to_string(Membership3 m);

/// Closed-form rules with Legendre tests, valid for every prime.
Membership3 rq_membership_branch(std::uint64_t p, std::uint64_t d);
/// Divisibility by an element of the minimal divisor set from the degree atlas.
Membership3 rq_membership_divisors(std::uint64_t p, std::uint64_t d);
/// Divisor path for p <= 37, closed form above. NonMember for non-primes.
/// Throws kInvalidArgument for d = 0.
Membership3 rq_membership(std::uint64_t p, std::uint64_t d);
/// Boolean form: conditional memberships count iff the conjecture is not assumed.
bool rq_member(std::uint64_t p, std::uint64_t d, bool assume_conjecture);

/// Every member prime for degree d is at most this. The least divisor-set
/// element for p is (p-1)/2 in the worst branch, so p <= 2d+1; 37 covers the
/// tabulated primes.
std::uint64_t rq_prime_bound(std::uint64_t d);

struct RQRow {
  std::uint64_t d = 1;
  std::vector<std::uint64_t> members;
  std::vector<std::uint64_t> conditional;
};

RQRow rq(std::uint64_t d);
/// rq(d) minus primes already present for a proper divisor of d.
RQRow rq_star(std::uint64_t d);
/// Union of rq(k) over k <= d.
RQRow sq(std::uint64_t d);
/// sq(d) minus sq(d - 1).
RQRow sq_star(std::uint64_t d);

enum class RQView { R, RStar, S, SStar };
/// Rows 1..max_d; rows computed in parallel and returned in d order.
std::vector<RQRow> rq_table(std::uint64_t max_d, RQView view);

/// p = 8 mod 9 and (-D/p) = -1 for every D in the CM constant.
bool is_exceptional_prime(std::uint64_t p);
/// Exact density of exceptional primes, by per-factor residue counts.
boost::rational<std::int64_t> exceptional_prime_density();
std::uint64_t scan_smallest_exceptional_prime();
/// Least d with a conditional membership.
std::uint64_t first_ambiguous_degree();
/// phi(210)/210 from a residue count.
boost::rational<std::int64_t> no_growth_density();

}  // namespace tatlas
