#include "tatlas/rqd.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "tatlas/catalog.hpp"
#include "tatlas/degrees.hpp"
#include "tatlas/error.hpp"
#include "tatlas/residue.hpp"

namespace tatlas {

std::string_view to_string(Membership3 m) {
  switch (m) {
    case Membership3::Member: return "member";
    case Membership3::NonMember: return "non-member";
    case Membership3::ConditionalOnConjecture: return "conditional";
  }
  return "?";
}

namespace {

bool all_cm_nonresidue(std::uint64_t p) {
  const auto& cm = cm_constant();
  return std::all_of(cm.begin(), cm.end(),
                     [&](std::uint64_t D) { return legendre(-static_cast<std::int64_t>(D), p) == -1; });
}

void check_degree(std::uint64_t d) {
  if (d == 0) fail(ErrorCode::kInvalidArgument, "degree must be positive");
}

}  // namespace

Membership3 rq_membership_branch(std::uint64_t p, std::uint64_t d) {
  check_degree(d);
  if (!is_prime(p)) return Membership3::NonMember;
  auto iff = [](bool b) { return b ? Membership3::Member : Membership3::NonMember; };
  switch (p) {
    case 2: case 3: case 5: case 7: return Membership3::Member;
    case 11: return iff(d % 5 == 0);
    case 13: return iff(d % 3 == 0 || d % 4 == 0);
    case 17: return iff(d % 8 == 0);
    case 37: return iff(d % 12 == 0);
    case 19: case 43: case 67: case 163: return iff(d % ((p - 1) / 2) == 0);
    default: break;
  }
  if (p % 3 == 1 || !all_cm_nonresidue(p)) return iff(d % (2 * (p - 1)) == 0);
  const std::uint64_t full = p * p - 1;
  if (p % 9 == 2 || p % 9 == 5) return iff(d % (full / 3) == 0);
  // p = 8 mod 9 with every CM symbol -1: only one-sided implications.
  if (d % full == 0) return Membership3::Member;
  if (d % (full / 3) == 0) return Membership3::ConditionalOnConjecture;
  return Membership3::NonMember;
}

Membership3 rq_membership_divisors(std::uint64_t p, std::uint64_t d) {
  check_degree(d);
  if (!is_prime(p)) return Membership3::NonMember;
  const MinimalDivisorSet s = minimal_divisor_set(p, false);
  auto divides = [&](const std::vector<std::uint64_t>& v) {
    return std::any_of(v.begin(), v.end(), [&](std::uint64_t a) { return d % a == 0; });
  };
  if (divides(s.elements)) return Membership3::Member;
  if (divides(s.conditional_elements)) return Membership3::ConditionalOnConjecture;
  return Membership3::NonMember;
}

Membership3 rq_membership(std::uint64_t p, std::uint64_t d) {
  return p <= 37 ? rq_membership_divisors(p, d) : rq_membership_branch(p, d);
}

bool rq_member(std::uint64_t p, std::uint64_t d, bool assume_conjecture) {
  const Membership3 m = rq_membership(p, d);
  return m == Membership3::Member || (!assume_conjecture && m == Membership3::ConditionalOnConjecture);
}

std::uint64_t rq_prime_bound(std::uint64_t d) { return std::max<std::uint64_t>(37, 2 * d + 1); }

RQRow rq(std::uint64_t d) {
  check_degree(d);
  RQRow row{d, {}, {}};
  const std::uint64_t bound = rq_prime_bound(d);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    switch (rq_membership(p, d)) {
      case Membership3::Member: row.members.push_back(p); break;
      case Membership3::ConditionalOnConjecture: row.conditional.push_back(p); break;
      case Membership3::NonMember: break;
    }
  }
  return row;
}

namespace {

std::vector<std::uint64_t> minus(const std::vector<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  for (auto x : a) {
    if (!b.count(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

RQRow rq_star(std::uint64_t d) {
  RQRow row = rq(d);
  std::set<std::uint64_t> members, conditional;
  for (std::uint64_t k = 1; k < d; ++k) {
    if (d % k) continue;
    const RQRow r = rq(k);
    members.insert(r.members.begin(), r.members.end());
    conditional.insert(r.conditional.begin(), r.conditional.end());
  }
  row.members = minus(row.members, members);
  row.conditional = minus(row.conditional, conditional);
  return row;
}

RQRow sq(std::uint64_t d) {
  check_degree(d);
  std::set<std::uint64_t> members, conditional;
  for (std::uint64_t k = 1; k <= d; ++k) {
    const RQRow r = rq(k);
    members.insert(r.members.begin(), r.members.end());
    conditional.insert(r.conditional.begin(), r.conditional.end());
  }
  for (auto p : members) conditional.erase(p);
  return RQRow{d, {members.begin(), members.end()}, {conditional.begin(), conditional.end()}};
}

RQRow sq_star(std::uint64_t d) {
  RQRow row = sq(d);
  if (d == 1) return row;
  const RQRow prev = sq(d - 1);
  row.members = minus(row.members, {prev.members.begin(), prev.members.end()});
  row.conditional = minus(row.conditional, {prev.conditional.begin(), prev.conditional.end()});
  return row;
}

std::vector<RQRow> rq_table(std::uint64_t max_d, RQView view) {
  // Fill the divisor-set caches before fanning out.
  for (std::uint64_t p = 2; p <= 37; ++p) {
    if (is_prime(p)) minimal_divisor_set(p, false);
  }
  std::vector<RQRow> rows(max_d);
  if (view == RQView::S || view == RQView::SStar) {
    // Cumulative: one pass.
    std::set<std::uint64_t> members, conditional, prev_members, prev_conditional;
    for (std::uint64_t d = 1; d <= max_d; ++d) {
      const RQRow r = rq(d);
      prev_members = members;
      prev_conditional = conditional;
      members.insert(r.members.begin(), r.members.end());
      conditional.insert(r.conditional.begin(), r.conditional.end());
      for (auto p : members) conditional.erase(p);
      RQRow row{d, {members.begin(), members.end()}, {conditional.begin(), conditional.end()}};
      if (view == RQView::SStar) {
        row.members = minus(row.members, prev_members);
        row.conditional = minus(row.conditional, prev_conditional);
      }
      rows[d - 1] = std::move(row);
    }
    return rows;
  }
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t d = 1 + w; d <= max_d; d += workers) {
        rows[d - 1] = view == RQView::R ? rq(d) : rq_star(d);
      }
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

bool is_exceptional_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p) || p % 9 != 8) return false;
  return all_cm_nonresidue(p);
}

boost::rational<std::int64_t> exceptional_prime_density() {
  // Per prime p, (-1/p) = -1 and (-2/p) = -1 depend on p mod 8; reciprocity
  // turns (-D/p) for odd D = 3 mod 4 into (p/D). Each factor is counted on
  // its own residues; the Chinese remainder theorem multiplies the counts.
  std::int64_t hits = 1, total = 1;
  auto chi_m4 = [](std::uint64_t r) { return r % 4 == 3 ? -1 : 1; };             // (-1/r)
  auto chi_m8 = [](std::uint64_t r) { return r % 8 == 1 || r % 8 == 3 ? 1 : -1; };  // (-2/r)
  {
    std::int64_t h = 0, t = 0;
    for (std::uint64_t r = 1; r < 8; r += 2) {
      ++t;
      if (chi_m4(r) == -1 && chi_m8(r) == -1) ++h;
    }
    hits *= h;
    total *= t;
  }
  {
    std::int64_t h = 0, t = 0;
    for (std::uint64_t r = 1; r < 9; ++r) {
      if (r % 3 == 0) continue;
      ++t;
      if (r == 8) ++h;
    }
    hits *= h;
    total *= t;
  }
  for (auto D : cm_constant()) {
    if (D <= 2) continue;
    std::int64_t h = 0, t = 0;
    for (std::uint64_t r = 1; r < D; ++r) {
      ++t;
      if (legendre_euler(static_cast<std::int64_t>(r), D) == -1) ++h;
    }
    hits *= h;
    total *= t;
  }
  return {hits, total};
}

std::uint64_t scan_smallest_exceptional_prime() {
  for (std::uint64_t p = 2;; ++p) {
    if (is_exceptional_prime(p)) return p;
  }
}

std::uint64_t first_ambiguous_degree() {
  // A conditional membership needs an exceptional p with (p^2-1)/3 | d, so the
  // least such d comes from the least exceptional prime.
  const std::uint64_t q = scan_smallest_exceptional_prime();
  const std::uint64_t d = (q * q - 1) / 3;
  if (rq_membership(q, d) != Membership3::ConditionalOnConjecture) {
    fail(ErrorCode::kInternal, "expected a conditional membership at the first ambiguous degree");
  }
  return d;
}

boost::rational<std::int64_t> no_growth_density() {
  std::int64_t coprime = 0;
  for (std::int64_t r = 0; r < 210; ++r) {
    if (std::gcd(r, std::int64_t{210}) == 1) ++coprime;
  }
  return {coprime, 210};
}

}  // namespace tatlas
