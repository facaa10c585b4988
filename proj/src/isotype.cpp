#include "tatlas/isotype.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace tatlas {

// ---------------------------------------------------------------- FiniteGroup

void FiniteGroup::finish() {
  inverse_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
  // Greedy generators, largest element order first.
  std::vector<std::uint32_t> by_order(n_);
  for (std::uint32_t a = 0; a < n_; ++a) by_order[a] = a;
  std::vector<std::uint64_t> orders(n_);
  for (std::uint32_t a = 0; a < n_; ++a) orders[a] = element_order(a);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return orders[x] > orders[y]; });
  gens_.clear();
  std::vector<char> reached(n_, 0);
  reached[0] = 1;
  std::size_t reached_count = 1;
  for (auto a : by_order) {
    if (reached_count == n_) break;
    if (reached[a]) continue;
    gens_.push_back(a);
    reached = closure(gens_);
    reached_count = static_cast<std::size_t>(std::count(reached.begin(), reached.end(), 1));
  }
}

std::vector<char> FiniteGroup::closure(const std::vector<std::uint32_t>& elements) const {
  std::vector<char> mask(n_, 0);
  std::vector<std::uint32_t> queue{0};
  mask[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto g : elements) {
      const auto y = mul(queue[i], g);
      if (!mask[y]) {
        mask[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return mask;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::uint32_t> table, std::size_t n) {
  if (n == 0 || table.size() != n * n) {
    fail(ErrorCode::kInvalidArgument, "Cayley table has the wrong size");
  }
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = table[r * n + c];
      if (v >= n || seen[v]) fail(ErrorCode::kInvalidArgument, "Cayley table is not a Latin square");
      seen[v] = 1;
    }
    if (table[r] != r || table[r * n] != r) {
      fail(ErrorCode::kInvalidArgument, "element 0 is not the identity");
    }
  }
  FiniteGroup G;
  G.n_ = n;
  G.table_ = std::move(table);
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::from_mat_group(const MatGroup& M) {
  return quotient(M, MatGroup::trivial(M.modulus()), M.order());
}

FiniteGroup FiniteGroup::quotient(const MatGroup& G, const MatGroup& N, std::size_t cap) {
  if (!is_normal(G, N)) fail(ErrorCode::kNotNormal, "quotient: N is not normal in G");
  const std::size_t k = G.order() / N.order();
  if (k > cap) {
    fail(ErrorCode::kSizeCapExceeded,
         "quotient of order " + std::to_string(k) + " exceeds table cap " + std::to_string(cap));
  }
  std::unordered_map<std::uint64_t, std::uint32_t> coset_of;
  coset_of.reserve(G.order() * 2);
  std::vector<Mat2> reps;
  auto add_coset = [&](const Mat2& g) {
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(g);
    for (const auto& n : N.elements()) coset_of.emplace(g.mul_unchecked(n).key(), id);
  };
  add_coset(Mat2::identity(G.modulus()));
  for (const auto& g : G.elements()) {
    if (!coset_of.count(g.key())) add_coset(g);
  }
  std::vector<std::uint32_t> table(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      table[a * k + b] = coset_of.at(reps[a].mul_unchecked(reps[b]).key());
    }
  }
  FiniteGroup Q;
  Q.n_ = k;
  Q.table_ = std::move(table);
  Q.finish();
  return Q;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& gens) {
  if (gens.empty()) return cyclic(1);
  const std::size_t degree = gens.front().size();
  using Perm = std::vector<std::uint32_t>;
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::map<Perm, std::uint32_t> index{{id, 0}};
  std::vector<Perm> elements{id};
  auto compose = [degree](const Perm& p, const Perm& q) {  // apply q then p
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : gens) {
      Perm r = compose(elements[i], g);
      if (!index.count(r)) {
        index.emplace(r, static_cast<std::uint32_t>(elements.size()));
        elements.push_back(std::move(r));
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  }
  FiniteGroup G;
  G.n_ = n;
  G.table_ = std::move(table);
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  FiniteGroup G;
  G.n_ = n;
  G.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) G.table_[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  }
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::semidirect_cyclic(std::size_t m, std::size_t n, std::size_t r) {
  std::vector<std::size_t> rpow(n, 1 % m);
  for (std::size_t j = 1; j < n; ++j) rpow[j] = rpow[j - 1] * r % m;
  if (rpow[n - 1] * r % m != 1 % m) {
    fail(ErrorCode::kInvalidArgument, "semidirect_cyclic: r^n must be 1 mod m");
  }
  // a^i b^j is encoded as i + m j.
  const std::size_t order = m * n;
  FiniteGroup G;
  G.n_ = order;
  G.table_.resize(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
      const std::size_t ii = (i + rpow[j] * k) % m;
      const std::size_t jj = (j + l) % n;
      G.table_[x * order + y] = static_cast<std::uint32_t>(ii + m * jj);
    }
  }
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::dicyclic(std::size_t n) {
  const std::size_t m = 2 * n;  // a has order 2n; a^i x^j encoded as i + m j
  const std::size_t order = 2 * m;
  FiniteGroup G;
  G.n_ = order;
  G.table_.resize(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
      std::size_t ii, jj;
      if (j == 0) {
        ii = (i + k) % m;
        jj = l;
      } else if (l == 0) {
        ii = (i + m - k) % m;
        jj = 1;
      } else {
        ii = (i + m - k + n) % m;
        jj = 0;
      }
      G.table_[x * order + y] = static_cast<std::uint32_t>(ii + m * jj);
    }
  }
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const std::size_t na = A.order(), nb = B.order(), n = na * nb;
  FiniteGroup G;
  G.n_ = n;
  G.table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = A.mul(static_cast<std::uint32_t>(x / nb), static_cast<std::uint32_t>(y / nb));
      const auto b = B.mul(static_cast<std::uint32_t>(x % nb), static_cast<std::uint32_t>(y % nb));
      G.table_[x * n + y] = static_cast<std::uint32_t>(a * nb + b);
    }
  }
  G.finish();
  return G;
}

std::uint64_t FiniteGroup::element_order(std::uint32_t a) const noexcept {
  std::uint64_t k = 1;
  std::uint32_t x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (mul(gens_[i], gens_[j]) != mul(gens_[j], gens_[i])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- fingerprints

std::vector<std::uint64_t> abelian_invariants_from_counts(
    std::uint64_t order, const std::function<std::uint64_t(std::uint64_t)>& count_killed) {
  if (order <= 1) return {};
  std::map<std::uint64_t, std::vector<std::uint64_t>> parts;  // prime -> exponents, descending
  for (auto q : prime_factors(order)) {
    std::uint64_t qpart = 1;
    for (std::uint64_t t = order; t % q == 0; t /= q) qpart *= q;
    // s[k] = log_q #{x : x^(q^k) = 1}
    std::vector<std::uint64_t> s{0};
    for (std::uint64_t qk = q;; qk *= q) {
      std::uint64_t c = count_killed(qk);
      std::uint64_t e = 0;
      while (c > 1) {
        c /= q;
        ++e;
      }
      s.push_back(e);
      if (qk >= qpart) break;
    }
    // ge[k] = number of cyclic factors of exponent >= k+1
    std::vector<std::uint64_t> ge;
    for (std::size_t k = 1; k < s.size(); ++k) ge.push_back(s[k] - s[k - 1]);
    std::vector<std::uint64_t> exps;
    for (std::size_t k = 0; k < ge.size(); ++k) {
      const std::uint64_t next = k + 1 < ge.size() ? ge[k + 1] : 0;
      for (std::uint64_t c = next; c < ge[k]; ++c) exps.push_back(k + 1);
    }
    std::sort(exps.rbegin(), exps.rend());
    parts[q] = std::move(exps);
  }
  std::size_t width = 0;
  for (const auto& [q, exps] : parts) width = std::max(width, exps.size());
  std::vector<std::uint64_t> invariants(width, 1);
  for (const auto& [q, exps] : parts) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      std::uint64_t qe = 1;
      for (std::uint64_t c = 0; c < exps[i]; ++c) qe *= q;
      invariants[width - 1 - i] *= qe;
    }
  }
  return invariants;
}

std::string abelian_name(const std::vector<std::uint64_t>& invariants) {
  if (invariants.empty()) return "C1";
  if (invariants == std::vector<std::uint64_t>{2, 2}) return "V4";
  std::string out;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) out += "x";
    out += "C" + std::to_string(invariants[i]);
  }
  return out;
}

namespace {

std::uint32_t power(const FiniteGroup& G, std::uint32_t x, std::uint64_t e) {
  std::uint32_t result = 0;
  while (e) {
    if (e & 1) result = G.mul(result, x);
    x = G.mul(x, x);
    e >>= 1;
  }
  return result;
}

std::vector<char> derived_mask(const FiniteGroup& G) {
  const auto& gens = G.generators();
  auto commutator = [&G](std::uint32_t a, std::uint32_t b) {
    return G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b)));
  };
  std::vector<std::uint32_t> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  }
  auto mask = G.closure(seeds);
  // Normal closure: conjugate the current generators until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto g : gens) {
      for (std::size_t s = 0; s < seeds.size(); ++s) {
        const auto c = G.mul(G.mul(g, seeds[s]), G.inv(g));
        if (!mask[c]) {
          seeds.push_back(c);
          mask = G.closure(seeds);
          changed = true;
        }
      }
    }
  }
  return mask;
}

GroupIsoType fingerprint_only(const FiniteGroup& G) {
  GroupIsoType t;
  const std::size_t n = G.order();
  t.order = n;
  t.abelian = G.is_abelian();
  for (std::uint32_t a = 0; a < n; ++a) ++t.element_orders[G.element_order(a)];
  std::uint64_t center = 0;
  for (std::uint32_t a = 0; a < n; ++a) {
    bool central = true;
    for (auto g : G.generators()) {
      if (G.mul(a, g) != G.mul(g, a)) {
        central = false;
        break;
      }
    }
    if (central) ++center;
  }
  t.center_order = center;
  const auto D = derived_mask(G);
  const auto d_order = static_cast<std::uint64_t>(std::count(D.begin(), D.end(), 1));
  t.abelianization = abelian_invariants_from_counts(n / d_order, [&](std::uint64_t e) {
    std::uint64_t count = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (D[power(G, a, e)]) ++count;
    }
    return count / d_order;
  });
  return t;
}

bool extend_to_isomorphism(const FiniteGroup& A, const FiniteGroup& B,
                           const std::vector<std::uint32_t>& images) {
  const auto& gens = A.generators();
  const std::size_t n = A.order();
  std::vector<std::int64_t> phi(n, -1);
  std::vector<char> used(n, 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto y = A.mul(x, gens[i]);
      const auto z = B.mul(static_cast<std::uint32_t>(phi[x]), images[i]);
      if (phi[y] < 0) {
        if (used[z]) return false;
        phi[y] = z;
        used[z] = 1;
        queue.push_back(y);
      } else if (phi[y] != z) {
        return false;
      }
    }
  }
  return queue.size() == n;
}

bool search_images(const FiniteGroup& A, const FiniteGroup& B,
                   const std::vector<std::vector<std::uint32_t>>& candidates,
                   std::vector<std::uint32_t>& images, std::size_t depth) {
  if (depth == candidates.size()) return extend_to_isomorphism(A, B, images);
  for (auto c : candidates[depth]) {
    images[depth] = c;
    if (search_images(A, B, candidates, images, depth + 1)) return true;
  }
  return false;
}

}  // namespace

std::string GroupIsoType::fingerprint_string() const {
  std::ostringstream os;
  os << "order=" << order << ";abelian=" << (abelian ? "yes" : "no") << ";orders={";
  bool first = true;
  for (const auto& [o, c] : element_orders) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "};center=" << center_order << ";ab=[";
  for (std::size_t i = 0; i < abelianization.size(); ++i) os << (i ? "," : "") << abelianization[i];
  os << "]";
  return os.str();
}

std::string GroupIsoType::describe() const { return name ? *name : fingerprint_string(); }

bool GroupIsoType::same_fingerprint(const GroupIsoType& o) const {
  return order == o.order && abelian == o.abelian && element_orders == o.element_orders &&
         center_order == o.center_order && abelianization == o.abelianization;
}

bool are_isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order() != B.order()) return false;
  if (!fingerprint_only(A).same_fingerprint(fingerprint_only(B))) return false;
  std::vector<std::vector<std::uint32_t>> candidates;
  for (auto g : A.generators()) {
    const auto o = A.element_order(g);
    std::vector<std::uint32_t> c;
    for (std::uint32_t b = 0; b < B.order(); ++b) {
      if (B.element_order(b) == o) c.push_back(b);
    }
    candidates.push_back(std::move(c));
  }
  std::vector<std::uint32_t> images(candidates.size());
  return search_images(A, B, candidates, images, 0);
}

// ---------------------------------------------------------------- library

namespace {

std::vector<std::uint32_t> perm(std::initializer_list<std::uint32_t> l) { return l; }

FiniteGroup matrix_group(std::initializer_list<Mat2> gens, Modulus m) {
  std::vector<Mat2> g(gens);
  return FiniteGroup::from_mat_group(MatGroup::closure(g, m));
}

std::vector<NamedGroup> build_library() {
  std::vector<std::pair<std::string, FiniteGroup>> raw;
  raw.emplace_back("S3", FiniteGroup::semidirect_cyclic(3, 2, 2));
  for (std::size_t n = 4; 2 * n <= kIsomorphismSearchCap; ++n) {
    raw.emplace_back("D" + std::to_string(n), FiniteGroup::semidirect_cyclic(n, 2, n - 1));
  }
  raw.emplace_back("Q8", FiniteGroup::dicyclic(2));
  raw.emplace_back("Q16", FiniteGroup::dicyclic(4));
  raw.emplace_back("Q32", FiniteGroup::dicyclic(8));
  for (std::size_t n : {3, 5, 6, 7, 9, 10, 11, 12}) {
    raw.emplace_back("Dic" + std::to_string(n), FiniteGroup::dicyclic(n));
  }
  const auto S4 = FiniteGroup::from_permutations({perm({1, 2, 3, 0}), perm({1, 0, 2, 3})});
  const auto A4 = FiniteGroup::from_permutations({perm({1, 2, 0, 3}), perm({1, 0, 3, 2})});
  raw.emplace_back("A4", A4);
  raw.emplace_back("S4", S4);
  raw.emplace_back("SL(2,3)", matrix_group({Mat2(1, 1, 0, 1, 3), Mat2(0, 2, 1, 0, 3)}, 3));
  raw.emplace_back("GL(2,3)",
                   matrix_group({Mat2(1, 1, 0, 1, 3), Mat2(0, 2, 1, 0, 3), Mat2(2, 0, 0, 1, 3)}, 3));
  raw.emplace_back("F20", FiniteGroup::semidirect_cyclic(5, 4, 2));
  raw.emplace_back("F21", FiniteGroup::semidirect_cyclic(7, 3, 2));
  raw.emplace_back("F42", FiniteGroup::semidirect_cyclic(7, 6, 3));
  raw.emplace_back("C3:C8", FiniteGroup::semidirect_cyclic(3, 8, 2));
  raw.emplace_back("C5:C8", FiniteGroup::semidirect_cyclic(5, 8, 2));
  const auto S3 = FiniteGroup::semidirect_cyclic(3, 2, 2);
  const auto C2 = FiniteGroup::cyclic(2);
  const auto C3 = FiniteGroup::cyclic(3);
  const auto C4 = FiniteGroup::cyclic(4);
  raw.emplace_back("C3xS3", FiniteGroup::direct_product(C3, S3));
  raw.emplace_back("C4xS3", FiniteGroup::direct_product(C4, S3));
  raw.emplace_back("S3xS3", FiniteGroup::direct_product(S3, S3));
  raw.emplace_back("C2xD4", FiniteGroup::direct_product(C2, FiniteGroup::semidirect_cyclic(4, 2, 3)));
  raw.emplace_back("C2xQ8", FiniteGroup::direct_product(C2, FiniteGroup::dicyclic(2)));
  raw.emplace_back("C2xA4", FiniteGroup::direct_product(C2, A4));
  raw.emplace_back("C3xA4", FiniteGroup::direct_product(C3, A4));
  raw.emplace_back("C2xS4", FiniteGroup::direct_product(C2, S4));
  raw.emplace_back("C3xD4", FiniteGroup::direct_product(C3, FiniteGroup::semidirect_cyclic(4, 2, 3)));
  raw.emplace_back("C3xQ8", FiniteGroup::direct_product(C3, FiniteGroup::dicyclic(2)));

  std::vector<NamedGroup> lib;
  for (auto& [name, G] : raw) {
    GroupIsoType t = fingerprint_only(G);
    // Skip a name if an earlier entry is isomorphic (e.g. C2xS3 = D6).
    bool duplicate = false;
    for (const auto& e : lib) {
      if (e.type.same_fingerprint(t) && are_isomorphic(e.group, G)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    t.name = name;
    lib.push_back(NamedGroup{name, std::move(G), std::move(t)});
  }
  return lib;
}

}  // namespace

const std::vector<NamedGroup>& named_group_library() {
  static const std::vector<NamedGroup> lib = build_library();
  return lib;
}

GroupIsoType classify(const FiniteGroup& G) {
  GroupIsoType t = fingerprint_only(G);
  if (t.abelian) {
    t.name = abelian_name(t.abelianization);
    return t;
  }
  if (t.order <= kIsomorphismSearchCap) {
    for (const auto& e : named_group_library()) {
      if (e.type.same_fingerprint(t) && are_isomorphic(e.group, G)) {
        t.name = e.name;
        break;
      }
    }
  }
  return t;
}

FiniteGroup group_by_name(std::string_view name) {
  for (const auto& e : named_group_library()) {
    if (e.name == name) return e.group;
  }
  if (name == "V4") return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  // Abelian products "Cn" or "CaxCbx...".
  FiniteGroup out = FiniteGroup::cyclic(1);
  std::size_t pos = 0;
  bool ok = !name.empty();
  while (ok && pos < name.size()) {
    if (name[pos] != 'C') {
      ok = false;
      break;
    }
    ++pos;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + pos, name.data() + name.size(), value);
    if (ec != std::errc() || value == 0) {
      ok = false;
      break;
    }
    pos = static_cast<std::size_t>(ptr - name.data());
    out = FiniteGroup::direct_product(out, FiniteGroup::cyclic(value));
    if (pos < name.size()) {
      if (name[pos] != 'x') {
        ok = false;
        break;
      }
      ++pos;
    }
  }
  if (!ok) fail(ErrorCode::kInvalidArgument, "unknown group name '" + std::string(name) + "'");
  return out;
}

// ---------------------------------------------------------------- matrix groups

GroupIsoType quotient_iso_type(const MatGroup& G, const MatGroup& N) {
  if (!is_normal(G, N)) fail(ErrorCode::kNotNormal, "quotient_iso_type: N is not normal in G");
  const std::size_t k = G.order() / N.order();
  if (k <= kQuotientTableCap) return classify(FiniteGroup::quotient(G, N));

  // Too large for a table: fingerprint from coset computations.
  GroupIsoType t;
  t.order = k;
  const auto& gens = G.generators();
  auto commutator = [](const Mat2& a, const Mat2& b) {
    return a.mul_unchecked(b).mul_unchecked(a.inverse_unchecked()).mul_unchecked(b.inverse_unchecked());
  };
  t.abelian = true;
  for (std::size_t i = 0; i < gens.size() && t.abelian; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!N.contains(commutator(gens[i], gens[j]))) {
        t.abelian = false;
        break;
      }
    }
  }
  std::unordered_map<std::uint64_t, std::uint32_t> coset_of;
  std::vector<Mat2> reps;
  for (const auto& g : G.elements()) {
    if (coset_of.count(g.key())) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(g);
    for (const auto& n : N.elements()) coset_of.emplace(g.mul_unchecked(n).key(), id);
  }
  t.center_order = 0;
  for (const auto& r : reps) {
    std::uint64_t o = 1;
    for (Mat2 x = r; !N.contains(x); x = x.mul_unchecked(r)) ++o;
    ++t.element_orders[o];
    bool central = true;
    for (const auto& g : gens) {
      if (!N.contains(commutator(r, g))) {
        central = false;
        break;
      }
    }
    if (central) ++t.center_order;
  }
  std::vector<Mat2> seeds(N.generators());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  }
  const MatGroup D = normal_closure(G, seeds);
  t.abelianization = abelian_invariants_from_counts(G.order() / D.order(), [&](std::uint64_t e) {
    std::uint64_t count = 0;
    for (const auto& g : G.elements()) {
      if (D.contains(mat_pow(g, e))) ++count;
    }
    return count / D.order();
  });
  if (t.abelian) t.name = abelian_name(t.abelianization);
  return t;
}

GroupIsoType iso_type(const MatGroup& G) {
  return quotient_iso_type(G, MatGroup::trivial(G.modulus()));
}

GroupIsoType galois_closure_quotient(const MatGroup& G, const Vec2& v) {
  const MatGroup stab = stabilizer(G, v);
  return quotient_iso_type(G, normal_core(G, stab));
}

bool has_cyclic_quotient_of_order(const GroupIsoType& type, std::uint64_t a) {
  if (a == 0) fail(ErrorCode::kInvalidArgument, "quotient order must be positive");
  if (a == 1) return true;
  return !type.abelianization.empty() && type.abelianization.back() % a == 0;
}

}  // namespace tatlas
