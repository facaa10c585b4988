#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library: matrices are plain tuples, groups are key sets built by
// breadth-first search, subgroups are bitsets over a Cayley table.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// splitmix64: deterministic, seedable, no library state.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(below(hi - lo + 1)); }
};

using M = std::array<std::int64_t, 4>;  // row-major, reduced mod m

inline std::int64_t md(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

inline M mul(const M& x, const M& y, std::int64_t m) {
  return {md(x[0] * y[0] + x[1] * y[2], m), md(x[0] * y[1] + x[1] * y[3], m),
          md(x[2] * y[0] + x[3] * y[2], m), md(x[2] * y[1] + x[3] * y[3], m)};
}

inline bool unit(std::int64_t x, std::int64_t m) { return std::gcd(md(x, m), m) == 1; }
inline std::int64_t det(const M& x, std::int64_t m) { return md(x[0] * x[3] - x[1] * x[2], m); }
inline bool invertible(const M& x, std::int64_t m) { return unit(det(x, m), m); }

inline std::pair<std::int64_t, std::int64_t> act(const M& x, std::pair<std::int64_t, std::int64_t> v, std::int64_t m) {
  return {md(x[0] * v.first + x[1] * v.second, m), md(x[2] * v.first + x[3] * v.second, m)};
}

inline M identity() { return {1, 0, 0, 1}; }

// Every product of generators, by BFS on right multiplication.
inline std::set<M> closure(const std::vector<M>& gens, std::int64_t m) {
  M id = identity();
  for (auto& e : id) e = md(e, m);
  std::set<M> seen{id};
  std::vector<M> frontier{id};
  while (!frontier.empty()) {
    std::vector<M> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        M y = mul(x, g, m);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier.swap(next);
  }
  return seen;
}

inline std::set<std::pair<std::int64_t, std::int64_t>> orbit(const std::set<M>& G, std::pair<std::int64_t, std::int64_t> v,
                                                             std::int64_t m) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& g : G) out.insert(act(g, v, m));
  return out;
}

// Orbit lengths of all of (Z/m)^2, sorted.
inline std::vector<std::size_t> orbit_lengths(const std::set<M>& G, std::int64_t m) {
  std::set<std::pair<std::int64_t, std::int64_t>> done;
  std::vector<std::size_t> out;
  for (std::int64_t x = 0; x < m; ++x) {
    for (std::int64_t y = 0; y < m; ++y) {
      if (done.count({x, y})) continue;
      auto o = orbit(G, {x, y}, m);
      out.push_back(o.size());
      done.insert(o.begin(), o.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t additive_order(std::pair<std::int64_t, std::int64_t> v, std::int64_t m) {
  for (std::int64_t k = 1;; ++k) {
    if (md(k * v.first, m) == 0 && md(k * v.second, m) == 0) return k;
  }
}

// Distinct orbit lengths of vectors of additive order n.
inline std::vector<std::uint64_t> degrees(const std::set<M>& G, std::int64_t m, std::int64_t n) {
  std::set<std::uint64_t> out;
  for (std::int64_t x = 0; x < m; ++x) {
    for (std::int64_t y = 0; y < m; ++y) {
      if (additive_order({x, y}, m) == n) out.insert(orbit(G, {x, y}, m).size());
    }
  }
  return {out.begin(), out.end()};
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Legendre symbol from the list of squares.
inline int legendre(std::int64_t a, std::int64_t p) {
  a = md(a, p);
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

// Finite group given by its elements; subgroups are bitsets of indices.
constexpr std::size_t kMaxOrder = 256;
using Bits = std::bitset<kMaxOrder>;

struct Table {
  std::vector<M> elems;
  std::map<M, std::size_t> index;
  std::vector<std::size_t> mul;  // n*n
  std::vector<std::size_t> inv;
  std::size_t n = 0;

  Table(const std::set<M>& G, std::int64_t m) : elems(G.begin(), G.end()), n(G.size()) {
    for (std::size_t i = 0; i < n; ++i) index[elems[i]] = i;
    mul.resize(n * n);
    inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mul[i * n + j] = index.at(oracle::mul(elems[i], elems[j], m));
      }
    }
    M id = identity();
    for (auto& e : id) e = md(e, m);
    const std::size_t e = index.at(id);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (mul[i * n + j] == e) inv[i] = j;
      }
    }
  }

  Bits generate(Bits seed) const {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (seed[i]) members.push_back(i);
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t l = 0; l <= k; ++l) {
        for (auto [x, y] : {std::pair{members[k], members[l]}, std::pair{members[l], members[k]}}) {
          const std::size_t z = mul[x * n + y];
          if (!seed[z]) {
            seed[z] = true;
            members.push_back(z);
          }
        }
      }
    }
    return seed;
  }

  Bits conjugate(const Bits& H, std::size_t g) const {
    Bits out;
    for (std::size_t i = 0; i < n; ++i) {
      if (H[i]) out[mul[mul[g * n + i] * n + inv[g]]] = true;
    }
    return out;
  }
};

inline bool bits_less(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < kMaxOrder; ++i) {
    if (a[i] != b[i]) return b[i];
  }
  return false;
}

struct BitsLess {
  bool operator()(const Bits& a, const Bits& b) const { return bits_less(a, b); }
};

// Every subgroup: joins of cyclic subgroups until nothing new appears.
inline std::vector<Bits> all_subgroups(const Table& t) {
  std::set<Bits, BitsLess> seen;
  std::vector<Bits> cyclic;
  for (std::size_t g = 0; g < t.n; ++g) {
    Bits b;
    b[g] = true;
    Bits c = t.generate(b);
    if (seen.insert(c).second) cyclic.push_back(c);
  }
  std::vector<Bits> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& H : frontier) {
      for (const auto& C : cyclic) {
        if ((C & ~H).none()) continue;
        Bits J = t.generate(H | C);
        if (seen.insert(J).second) next.push_back(J);
      }
    }
    frontier.swap(next);
  }
  return {seen.begin(), seen.end()};
}

struct ClassSummary {
  std::size_t order;
  std::size_t class_size;
  friend bool operator<(const ClassSummary& a, const ClassSummary& b) {
    return std::tie(a.order, a.class_size) < std::tie(b.order, b.class_size);
  }
  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

// Conjugacy classes of the given subgroups under the elements `by` (indices).
inline std::vector<std::vector<Bits>> classes_under(const Table& t, const std::vector<Bits>& subs,
                                                    const std::vector<std::size_t>& by) {
  std::set<Bits, BitsLess> done;
  std::vector<std::vector<Bits>> out;
  for (const auto& H : subs) {
    if (done.count(H)) continue;
    std::set<Bits, BitsLess> cls{H};
    std::vector<Bits> frontier{H};
    while (!frontier.empty()) {
      std::vector<Bits> next;
      for (const auto& K : frontier) {
        for (auto g : by) {
          Bits c = t.conjugate(K, g);
          if (cls.insert(c).second) next.push_back(c);
        }
      }
      frontier.swap(next);
    }
    done.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

inline std::vector<ClassSummary> summarize(const std::vector<std::vector<Bits>>& classes) {
  std::vector<ClassSummary> out;
  for (const auto& c : classes) out.push_back({c.front().count(), c.size()});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
