// Property suites. Each case is drawn from a seeded splitmix64 stream, so a
// failure reproduces from the printed case index alone.

#include "doctest.h"
#include "support.hpp"
#include "tatlas/catalog.hpp"
#include "tatlas/census.hpp"
#include "tatlas/error.hpp"
#include "tatlas/lifts.hpp"
#include "tatlas/rqd.hpp"

using namespace tatlas;

namespace {

constexpr int kCases = 1000;

struct RandomGroup {
  Modulus m;
  std::vector<Mat2> gens;
  MatGroup G;
};

// Random subgroup of GL2(Z/m) with at most `cap` elements.
RandomGroup random_group(oracle::Rng& rng, std::int64_t max_m, std::size_t cap) {
  for (;;) {
    const auto m = static_cast<Modulus>(rng.range(2, max_m));
    std::vector<Mat2> gens;
    const int k = static_cast<int>(rng.range(1, 2));
    for (int i = 0; i < k; ++i) gens.push_back(support::mat(support::random_invertible(rng, m), m));
    try {
      MatGroup G = MatGroup::closure(gens, m, cap);
      return {m, gens, std::move(G)};
    } catch (const AtlasError& e) {
      if (e.code() != ErrorCode::kSizeCapExceeded) throw;
    }
  }
}

Vec2 random_vec(oracle::Rng& rng, Modulus m) {
  return Vec2::make(rng.range(0, m - 1), rng.range(0, m - 1), m);
}

std::vector<std::size_t> sorted_lengths(const MatGroup& G) {
  auto v = orbit_decomposition(G).lengths();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("orbit-stabilizer: |orbit| * |stabilizer| = |G|") {
  oracle::Rng rng(0x5eed0001);
  for (int i = 0; i < kCases; ++i) {
    CAPTURE(i);
    const auto g = random_group(rng, 16, 4000);
    const Vec2 v = random_vec(rng, g.m);
    const auto o = orbit(g.G, v);
    CHECK(o.size() * stabilizer(g.G, v).order() == g.G.order());
    CHECK(o.size() == oracle::orbit(support::elements(g.G), {v.x, v.y}, g.m).size());
  }
}

TEST_CASE("orbit lengths partition (Z/m)^2") {
  oracle::Rng rng(0x5eed0002);
  for (int i = 0; i < kCases; ++i) {
    CAPTURE(i);
    const auto g = random_group(rng, 14, 3000);
    const auto lengths = sorted_lengths(g.G);
    CHECK(std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}) == std::size_t{g.m} * g.m);
    CHECK(lengths == oracle::orbit_lengths(support::elements(g.G), g.m));
  }
}

TEST_CASE("conjugate groups have the same orbit-length multiset") {
  oracle::Rng rng(0x5eed0003);
  for (int i = 0; i < kCases; ++i) {
    CAPTURE(i);
    const auto g = random_group(rng, 16, 4000);
    const Mat2 h = support::mat(support::random_invertible(rng, g.m), g.m);
    const MatGroup C = conjugate(g.G, h);
    CHECK(C.order() == g.G.order());
    CHECK(sorted_lengths(C) == sorted_lengths(g.G));
  }
}

TEST_CASE("reduction is a homomorphism and commutes with closure") {
  oracle::Rng rng(0x5eed0004);
  for (int i = 0; i < kCases; ++i) {
    CAPTURE(i);
    const auto a = static_cast<Modulus>(rng.range(2, 6));
    const auto b = static_cast<Modulus>(rng.range(2, 4));
    const Modulus m = a * b;
    const Mat2 A = support::mat(support::random_invertible(rng, m), m);
    const Mat2 B = support::mat(support::random_invertible(rng, m), m);
    CHECK(reduce_mat(A * B, a) == reduce_mat(A, a) * reduce_mat(B, a));
    const std::vector<Mat2> gens{A, B};
    const std::vector<Mat2> reduced{reduce_mat(A, a), reduce_mat(B, a)};
    try {
      const MatGroup G = MatGroup::closure(gens, m, 20000);
      CHECK(reduce_group(G, a) == MatGroup::closure(reduced, a));
    } catch (const AtlasError& e) {
      CHECK(e.code() == ErrorCode::kSizeCapExceeded);
    }
  }
}

TEST_CASE("census matches brute-force subgroup classes for |G| <= 200") {
  oracle::Rng rng(0x5eed0005);
  for (int i = 0; i < kCases; ++i) {
    CAPTURE(i);
    const auto g = random_group(rng, 9, 200);
    std::vector<oracle::ClassSummary> got;
    for (const auto& c : subgroups_up_to_conjugacy(g.G, {500, false})) {
      got.push_back({c.representative.order(), c.class_size});
    }
    std::sort(got.begin(), got.end());
    const oracle::Table t(support::elements(g.G), g.m);
    std::vector<std::size_t> all(t.n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(got == oracle::summarize(oracle::classes_under(t, oracle::all_subgroups(t), all)));
  }
}

TEST_CASE("lift enumeration at modulus 4 matches a brute-force search") {
  // All subgroups of GL2(Z/4) once; each case filters and fuses them.
  std::vector<oracle::M> gl4_gens{{1, 1, 0, 1}, {1, 0, 1, 1}, {3, 0, 0, 1}};
  const auto gl4 = oracle::closure(gl4_gens, 4);
  REQUIRE(gl4.size() == 96);
  const oracle::Table t(gl4, 4);
  const auto subs = oracle::all_subgroups(t);
  auto reduce2 = [&](std::size_t idx) {
    oracle::M x = t.elems[idx];
    for (auto& e : x) e %= 2;
    return x;
  };
  const std::vector<oracle::M> gl2_all{{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 1},
                                       {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}};
  oracle::Rng rng(0x5eed0006);
  for (int i = 0; i < kCases; ++i) {
    CAPTURE(i);
    std::vector<oracle::M> hgens;
    for (const auto& x : gl2_all) {
      if (rng.below(3) == 0) hgens.push_back(x);
    }
    const bool surjective = rng.below(2) == 0;
    const auto Hplain = oracle::closure(hgens, 2);
    std::vector<Mat2> hg;
    for (const auto& x : hgens) hg.push_back(support::mat(x, 2));
    const MatGroup H = MatGroup::closure(hg, 2);

    // Normalizer of H in GL2(F2), then its preimage in GL2(Z/4).
    std::set<oracle::M> N;
    for (const auto& g : gl2_all) {
      const auto gi = *std::find_if(gl2_all.begin(), gl2_all.end(),
                                    [&](const oracle::M& y) { return oracle::mul(g, y, 2) == oracle::M{1, 0, 0, 1}; });
      bool ok = true;
      for (const auto& h : Hplain) ok = ok && Hplain.count(oracle::mul(oracle::mul(g, h, 2), gi, 2));
      if (ok) N.insert(g);
    }
    std::vector<std::size_t> by;
    for (std::size_t k = 0; k < t.n; ++k) {
      if (N.count(reduce2(k))) by.push_back(k);
    }
    std::vector<oracle::Bits> wanted;
    for (const auto& S : subs) {
      std::set<oracle::M> image;
      for (std::size_t k = 0; k < t.n; ++k) {
        if (S[k]) image.insert(reduce2(k));
      }
      const bool inside = std::includes(Hplain.begin(), Hplain.end(), image.begin(), image.end());
      if (surjective ? image == Hplain : inside) wanted.push_back(S);
    }
    const auto classes = oracle::classes_under(t, wanted, by);
    // Least sorted element list in each class, as the library reports it.
    std::vector<std::pair<std::vector<oracle::M>, std::size_t>> expect;
    for (const auto& cls : classes) {
      std::vector<oracle::M> best;
      for (const auto& S : cls) {
        std::vector<oracle::M> els;
        for (std::size_t k = 0; k < t.n; ++k) {
          if (S[k]) els.push_back(t.elems[k]);
        }
        if (best.empty() || els < best) best = els;
      }
      expect.emplace_back(best, cls.size());
    }
    std::sort(expect.begin(), expect.end());
    std::vector<std::pair<std::vector<oracle::M>, std::size_t>> got;
    for (const auto& c : enumerate_lifts(H, 4, {surjective, LiftPath::kCocycle, false})) {
      got.emplace_back(support::plain(c.representative.elements()), c.class_size);
    }
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("closed-form membership equals divisor-set membership for d <= 500, p <= 37") {
  int cases = 0;
  for (std::uint64_t p = 2; p <= 37; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (std::uint64_t d = 1; d <= 500; ++d) {
      CAPTURE(p);
      CAPTURE(d);
      CHECK(rq_membership_branch(p, d) == rq_membership_divisors(p, d));
      ++cases;
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("R_Q is monotone under divisibility") {
  oracle::Rng rng(0x5eed0008);
  for (int i = 0; i < kCases; ++i) {
    const std::uint64_t d = rng.range(1, 500), k = rng.range(1, 20);
    CAPTURE(d);
    CAPTURE(k);
    const RQRow a = rq(d), b = rq(d * k);
    CHECK(std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end()));
    std::vector<std::uint64_t> ua = a.members, ub = b.members;
    ua.insert(ua.end(), a.conditional.begin(), a.conditional.end());
    ub.insert(ub.end(), b.conditional.begin(), b.conditional.end());
    std::sort(ua.begin(), ua.end());
    std::sort(ub.begin(), ub.end());
    CHECK(std::includes(ub.begin(), ub.end(), ua.begin(), ua.end()));
  }
}
