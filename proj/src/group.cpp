#include "tatlas/group.hpp"

#include "tatlas/isotype.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace tatlas {

namespace {

void check_generators(std::span<const Mat2> generators, Modulus m) {
  for (const auto& g : generators) {
    if (g.modulus() != m) {
      fail(ErrorCode::kModulusMismatch, "generator " + to_string(g) +
                                            " does not have modulus " + std::to_string(m));
    }
    if (!is_invertible(g)) {
      fail(ErrorCode::kNonInvertible, "generator " + to_string(g) + " is not invertible");
    }
  }
}

std::vector<Mat2> sorted_unique(std::vector<Mat2> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::uint64_t> keys_of(const std::vector<Mat2>& elements) {
  std::vector<std::uint64_t> keys;
  keys.reserve(elements.size());
  for (const auto& e : elements) keys.push_back(e.key());
  return keys;
}

// Greedy generating set: walk the sorted elements, keep those outside the
// closure of the ones kept so far.
std::vector<Mat2> greedy_generators(const std::vector<Mat2>& elements, Modulus m) {
  std::vector<Mat2> gens;
  std::unordered_set<std::uint64_t> reached{Mat2::identity(m).key()};
  std::vector<Mat2> reached_list{Mat2::identity(m)};
  for (const auto& x : elements) {
    if (reached.count(x.key())) continue;
    gens.push_back(x);
    // Extend the closure: BFS from everything reached so far with all gens.
    std::deque<Mat2> queue(reached_list.begin(), reached_list.end());
    while (!queue.empty()) {
      const Mat2 y = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        const Mat2 z = y.mul_unchecked(g);
        if (reached.insert(z.key()).second) {
          reached_list.push_back(z);
          queue.push_back(z);
        }
      }
    }
  }
  return gens;
}

}  // namespace

// ---------------------------------------------------------------- MatGroup

MatGroup MatGroup::closure(std::span<const Mat2> generators, Modulus m, std::size_t cap) {
  check_generators(generators, m);
  MatGroup G;
  G.m_ = m;
  G.generators_.assign(generators.begin(), generators.end());
  const Mat2 id = Mat2::identity(m);
  std::unordered_set<std::uint64_t> seen{id.key()};
  std::vector<Mat2> elements{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Mat2 x = elements[i];
    for (const auto& g : generators) {
      const Mat2 y = x.mul_unchecked(g);
      if (seen.insert(y.key()).second) {
        elements.push_back(y);
        if (elements.size() > cap) {
          fail(ErrorCode::kSizeCapExceeded,
               "closure exceeded size cap of " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  G.keys_ = keys_of(elements);
  G.elements_ = std::move(elements);
  return G;
}

MatGroup MatGroup::trivial(Modulus m) { return closure({}, m); }

MatGroup MatGroup::from_elements(std::vector<Mat2> elements, Modulus m) {
  MatGroup G;
  G.m_ = m;
  G.elements_ = sorted_unique(std::move(elements));
  G.keys_ = keys_of(G.elements_);
  G.generators_ = greedy_generators(G.elements_, m);
  return G;
}

MatGroup MatGroup::from_elements(std::vector<Mat2> elements, std::vector<Mat2> generators,
                                 Modulus m) {
  MatGroup G;
  G.m_ = m;
  G.elements_ = sorted_unique(std::move(elements));
  G.keys_ = keys_of(G.elements_);
  G.generators_ = std::move(generators);
  return G;
}

bool MatGroup::contains(const Mat2& A) const noexcept {
  return A.modulus() == m_ && std::binary_search(keys_.begin(), keys_.end(), A.key());
}

bool MatGroup::is_subgroup_of(const MatGroup& other) const noexcept {
  if (m_ != other.m_) return false;
  return std::includes(other.keys_.begin(), other.keys_.end(), keys_.begin(), keys_.end());
}

bool MatGroup::is_abelian() const noexcept {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!(generators_[i].mul_unchecked(generators_[j]) ==
            generators_[j].mul_unchecked(generators_[i]))) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- orbits

std::vector<Vec2> orbit(std::span<const Mat2> generators, const Vec2& v) {
  for (const auto& g : generators) {
    if (g.modulus() != v.m) fail(ErrorCode::kModulusMismatch, "orbit: modulus mismatch");
  }
  std::vector<char> seen(std::size_t{v.m} * v.m, 0);
  std::vector<Vec2> members{v};
  seen[v.index()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& g : generators) {
      const Vec2 w = g.apply_unchecked(members[i]);
      if (!seen[w.index()]) {
        seen[w.index()] = 1;
        members.push_back(w);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Vec2> orbit(const MatGroup& G, const Vec2& v) {
  if (G.modulus() != v.m) fail(ErrorCode::kModulusMismatch, "orbit: modulus mismatch");
  return orbit(G.generators(), v);
}

MatGroup stabilizer(const MatGroup& G, const Vec2& v) {
  if (G.modulus() != v.m) fail(ErrorCode::kModulusMismatch, "stabilizer: modulus mismatch");
  std::vector<Mat2> elements;
  for (const auto& g : G.elements()) {
    if (g.apply_unchecked(v) == v) elements.push_back(g);
  }
  return MatGroup::from_elements(std::move(elements), G.modulus());
}

std::vector<std::size_t> OrbitDecomposition::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(orbits.size());
  for (const auto& o : orbits) out.push_back(o.length);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> OrbitDecomposition::lengths_of_order(std::uint64_t n) const {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) {
    if (additive_order(o.representative) == n) out.push_back(o.length);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrbitDecomposition orbit_decomposition(std::span<const Mat2> generators, Modulus m,
                                       bool retain_members) {
  for (const auto& g : generators) {
    if (g.modulus() != m) fail(ErrorCode::kModulusMismatch, "orbit_decomposition: modulus mismatch");
  }
  OrbitDecomposition out;
  out.modulus = m;
  const std::size_t total = std::size_t{m} * m;
  std::vector<char> seen(total, 0);
  std::vector<Vec2> members;
  // Scanning indices in order makes each representative the orbit minimum.
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    if (seen[idx]) continue;
    members.clear();
    const Vec2 start = Vec2::from_index(idx, m);
    members.push_back(start);
    seen[idx] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const auto& g : generators) {
        const Vec2 w = g.apply_unchecked(members[i]);
        if (!seen[w.index()]) {
          seen[w.index()] = 1;
          members.push_back(w);
        }
      }
    }
    Orbit o;
    o.representative = start;
    o.length = members.size();
    if (retain_members) {
      o.members = members;
      std::sort(o.members.begin(), o.members.end());
    }
    out.orbits.push_back(std::move(o));
  }
  return out;
}

OrbitDecomposition orbit_decomposition(const MatGroup& G, bool retain_members) {
  return orbit_decomposition(G.generators(), G.modulus(), retain_members);
}

// ---------------------------------------------------------------- subgroups

MatGroup conjugate(const MatGroup& H, const Mat2& g) {
  if (g.modulus() != H.modulus()) fail(ErrorCode::kModulusMismatch, "conjugate: modulus mismatch");
  const Mat2 gi = mat_inv(g);
  std::vector<Mat2> elements;
  elements.reserve(H.order());
  for (const auto& h : H.elements()) elements.push_back(g.mul_unchecked(h).mul_unchecked(gi));
  std::vector<Mat2> gens;
  for (const auto& h : H.generators()) gens.push_back(g.mul_unchecked(h).mul_unchecked(gi));
  return MatGroup::from_elements(std::move(elements), std::move(gens), H.modulus());
}

bool normalizes(const Mat2& g, const MatGroup& H) {
  const Mat2 gi = mat_inv(g);
  for (const auto& h : H.generators()) {
    if (!H.contains(g.mul_unchecked(h).mul_unchecked(gi))) return false;
  }
  return true;
}

bool is_normal(const MatGroup& G, const MatGroup& N) {
  if (!N.is_subgroup_of(G)) return false;
  for (const auto& g : G.generators()) {
    if (!normalizes(g, N)) return false;
  }
  return true;
}

MatGroup intersection(const MatGroup& A, const MatGroup& B) {
  if (A.modulus() != B.modulus()) fail(ErrorCode::kModulusMismatch, "intersection: modulus mismatch");
  std::vector<Mat2> elements;
  for (const auto& a : A.elements()) {
    if (B.contains(a)) elements.push_back(a);
  }
  return MatGroup::from_elements(std::move(elements), A.modulus());
}

MatGroup normal_core(const MatGroup& G, const MatGroup& H) {
  if (!H.is_subgroup_of(G)) fail(ErrorCode::kNotASubgroup, "normal_core: H is not a subgroup of G");
  // Intersect the orbit of H under conjugation by G's generators.
  std::unordered_set<std::uint64_t> seen_hashes;
  auto hash_of = [](const MatGroup& K) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto k : K.keys()) h = (h ^ k) * 1099511628211ULL;
    return h;
  };
  std::vector<MatGroup> all{H};
  seen_hashes.insert(hash_of(H));
  MatGroup core = H;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& g : G.generators()) {
      MatGroup K = conjugate(all[i], g);
      if (seen_hashes.insert(hash_of(K)).second) {
        core = intersection(core, K);
        all.push_back(std::move(K));
      }
    }
  }
  return core;
}

MatGroup normal_closure(const MatGroup& G, std::span<const Mat2> seeds) {
  std::vector<Mat2> gens(seeds.begin(), seeds.end());
  MatGroup N = MatGroup::closure(gens, G.modulus());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : G.generators()) {
      const Mat2 gi = g.inverse_unchecked();
      for (const auto& n : std::vector<Mat2>(N.generators())) {
        const Mat2 c = g.mul_unchecked(n).mul_unchecked(gi);
        if (!N.contains(c)) {
          gens.push_back(c);
          N = MatGroup::closure(gens, G.modulus());
          changed = true;
        }
      }
    }
  }
  return N;
}

MatGroup derived_subgroup(const MatGroup& G) {
  std::vector<Mat2> commutators;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Mat2 c = gens[i].mul_unchecked(gens[j]).mul_unchecked(gens[i].inverse_unchecked())
                         .mul_unchecked(gens[j].inverse_unchecked());
      if (!c.is_identity()) commutators.push_back(c);
    }
  }
  // [G,G] is the normal closure of the commutators of generators.
  return normal_closure(G, commutators);
}

bool is_solvable(const MatGroup& G) {
  MatGroup H = G;
  while (H.order() > 1) {
    MatGroup D = derived_subgroup(H);
    if (D.order() == H.order()) return false;
    H = std::move(D);
  }
  return true;
}

std::vector<std::uint64_t> abelianization_invariants(const MatGroup& G) {
  const MatGroup D = derived_subgroup(G);
  return abelian_invariants_from_counts(G.order() / D.order(), [&](std::uint64_t e) {
    std::uint64_t count = 0;
    for (const auto& g : G.elements()) {
      if (D.contains(mat_pow(g, e))) ++count;
    }
    return count / D.order();
  });
}

bool has_cyclic_quotient_of_order(const MatGroup& G, std::uint64_t a) {
  if (a == 0) fail(ErrorCode::kInvalidArgument, "cyclic quotient order must be positive");
  if (a == 1) return true;
  const auto inv = abelianization_invariants(G);
  // An abelian group has a cyclic quotient of order a iff a divides its exponent.
  return !inv.empty() && inv.back() % a == 0;
}

StableLines stable_lines(std::span<const Mat2> generators, Modulus p) {
  if (!is_prime(p)) fail(ErrorCode::kNonPrimeModulus, "stable_lines needs a prime modulus");
  StableLines out;
  auto on_line = [p](const Vec2& w, const Vec2& dir) {
    // w is a multiple of dir iff the 2x2 determinant vanishes.
    const std::uint64_t lhs = std::uint64_t{w.x} * dir.y % p;
    const std::uint64_t rhs = std::uint64_t{w.y} * dir.x % p;
    return lhs == rhs;
  };
  std::vector<Vec2> directions;
  for (std::uint32_t x = 0; x < p; ++x) directions.push_back(Vec2{1, x, p});
  directions.push_back(Vec2{0, 1, p});
  for (const auto& dir : directions) {
    bool stable = true;
    for (const auto& g : generators) {
      if (!on_line(g.apply_unchecked(dir), dir)) {
        stable = false;
        break;
      }
    }
    if (stable) out.lines.push_back(dir);
  }
  std::sort(out.lines.begin(), out.lines.end());
  out.count = out.lines.size();
  return out;
}

StableLines stable_lines(const MatGroup& G) {
  return stable_lines(G.generators(), G.modulus());
}

std::size_t swapped_line_pairs(const MatGroup& G) {
  const Modulus p = G.modulus();
  if (!is_prime(p)) fail(ErrorCode::kNonPrimeModulus, "swapped_line_pairs needs a prime modulus");
  // Index lines 0..p: line x is spanned by (1,x), line p by (0,1).
  auto line_of = [p](const Vec2& w) -> std::uint32_t {
    if (w.x == 0) return p;
    const std::uint64_t inv = Residue(w.x, p).inverse().value();
    return static_cast<std::uint32_t>(std::uint64_t{w.y} * inv % p);
  };
  auto dir_of = [p](std::uint32_t line) {
    return line == p ? Vec2{0, 1, p} : Vec2{1, line, p};
  };
  std::size_t count = 0;
  for (std::uint32_t l1 = 0; l1 <= p; ++l1) {
    for (std::uint32_t l2 = l1 + 1; l2 <= p; ++l2) {
      bool stable = true;
      bool swapped = false;
      for (const auto& g : G.generators()) {
        const auto i1 = line_of(g.apply_unchecked(dir_of(l1)));
        const auto i2 = line_of(g.apply_unchecked(dir_of(l2)));
        if (i1 == l1 && i2 == l2) continue;
        if (i1 == l2 && i2 == l1) {
          swapped = true;
          continue;
        }
        stable = false;
        break;
      }
      if (stable && swapped) ++count;
    }
  }
  return count;
}

std::size_t det_image_size(const MatGroup& G) {
  std::unordered_set<std::uint32_t> dets;
  for (const auto& g : G.elements()) dets.insert(g.det_value());
  return dets.size();
}

std::map<std::uint64_t, std::uint64_t> element_order_histogram(const MatGroup& G) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto& g : G.elements()) ++hist[element_order(g)];
  return hist;
}

MatGroup reduce_group(const MatGroup& G, Modulus new_modulus) {
  std::vector<Mat2> gens;
  for (const auto& g : G.generators()) gens.push_back(reduce_mat(g, new_modulus));
  return MatGroup::closure(gens, new_modulus);
}

}  // namespace tatlas
