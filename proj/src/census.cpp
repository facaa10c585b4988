#include "tatlas/census.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "indexed.hpp"

namespace tatlas {

using detail::IndexedGroup;
using detail::SetHash;
using detail::SetHashHasher;

std::vector<std::size_t> SubgroupFingerprint::nonzero_orbit_lengths() const {
  // The zero vector is always a singleton orbit; drop one length-1 orbit.
  std::vector<std::size_t> out(orbit_lengths.begin(), orbit_lengths.end());
  auto it = std::find(out.begin(), out.end(), std::size_t{1});
  if (it != out.end()) out.erase(it);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SubgroupFingerprint fingerprint_of(const MatGroup& G) {
  SubgroupFingerprint f;
  f.order = G.order();
  f.orbit_lengths = orbit_decomposition(G).lengths();
  f.det_image = det_image_size(G);
  if (is_prime(G.modulus())) f.stable_lines = stable_lines(G).count;
  f.element_orders = element_order_histogram(G);
  return f;
}

namespace {

struct ClassRecord {
  std::vector<std::uint32_t> elements;  // sorted indices, canonical conjugate
  std::vector<std::uint32_t> generators;
  std::size_t class_size = 1;
};

class ClassRegistry {
 public:
  explicit ClassRegistry(const IndexedGroup& A) : A_(A) {}

  /// Adds the class of V unless some conjugate was seen. Returns the new id.
  std::optional<std::size_t> add(std::vector<std::uint32_t> V, std::vector<std::uint32_t> gens) {
    const SetHash h = detail::set_hash(V);
    if (!seen_.insert(h).second) return std::nullopt;
    std::vector<std::vector<std::uint32_t>> conjugates{V};
    std::vector<std::vector<std::uint32_t>> conj_gens{gens};
    std::size_t best = 0;
    for (std::size_t i = 0; i < conjugates.size(); ++i) {
      for (auto t : A_.generators()) {
        std::vector<std::uint32_t> Y;
        Y.reserve(V.size());
        for (auto x : conjugates[i]) Y.push_back(A_.conj(t, x));
        std::sort(Y.begin(), Y.end());
        if (!seen_.insert(detail::set_hash(Y)).second) continue;
        std::vector<std::uint32_t> gy;
        for (auto x : conj_gens[i]) gy.push_back(A_.conj(t, x));
        conjugates.push_back(std::move(Y));
        conj_gens.push_back(std::move(gy));
        if (conjugates.back() < conjugates[best]) best = conjugates.size() - 1;
      }
    }
    records_.push_back(ClassRecord{std::move(conjugates[best]), std::move(conj_gens[best]),
                                   conjugates.size()});
    return records_.size() - 1;
  }

  const std::vector<ClassRecord>& records() const noexcept { return records_; }
  const ClassRecord& record(std::size_t id) const { return records_[id]; }

 private:
  const IndexedGroup& A_;
  std::unordered_set<SetHash, SetHashHasher> seen_;
  std::vector<ClassRecord> records_;
};

// Every subgroup V of a solvable group has a normal subgroup U of prime index,
// so V = <U, g> with g in N(U) and g^q in U for a prime q. Extending one
// representative per class by such g reaches every class.
void cyclic_extension(const IndexedGroup& A, ClassRegistry& reg,
                      const std::function<void(std::size_t)>& on_new) {
  const std::size_t n = A.size();
  const auto first = reg.add({A.identity()}, {});
  on_new(*first);
  std::vector<std::size_t> layer{*first};
  std::vector<char> in_u(n, 0), covered(n, 0);
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (auto cid : layer) {
      const std::vector<std::uint32_t> U = reg.record(cid).elements;
      const std::vector<std::uint32_t> gens_u = reg.record(cid).generators;
      for (auto u : U) in_u[u] = 1;
      covered = in_u;
      for (std::uint32_t g = 0; g < n; ++g) {
        if (covered[g]) continue;
        bool normalizes = true;
        for (auto u : gens_u) {
          if (!in_u[A.conj(g, u)]) {
            normalizes = false;
            break;
          }
        }
        if (!normalizes) continue;
        std::uint32_t k = 1;
        for (std::uint32_t x = g; !in_u[x]; x = A.mul(x, g)) ++k;
        if (!is_prime(k)) continue;
        std::vector<std::uint32_t> V;
        V.reserve(U.size() * k);
        std::uint32_t power = A.identity();
        for (std::uint32_t i = 0; i < k; ++i) {
          for (auto u : U) V.push_back(A.mul(power, u));
          power = A.mul(power, g);
        }
        for (auto v : V) covered[v] = 1;
        std::sort(V.begin(), V.end());
        auto gens_v = gens_u;
        gens_v.push_back(g);
        if (auto id = reg.add(std::move(V), std::move(gens_v))) {
          on_new(*id);
          next.push_back(*id);
        }
      }
      for (auto u : U) in_u[u] = 0;
    }
    layer = std::move(next);
  }
}

// Join closure: every subgroup is <U, g> for a smaller subgroup U. Used for
// small non-solvable ambients.
void join_closure(const IndexedGroup& A, ClassRegistry& reg,
                  const std::function<void(std::size_t)>& on_new) {
  const std::size_t n = A.size();
  const auto first = reg.add({A.identity()}, {});
  on_new(*first);
  std::vector<std::size_t> layer{*first};
  std::vector<char> mask(n, 0);
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (auto cid : layer) {
      const std::vector<std::uint32_t> U = reg.record(cid).elements;
      const std::vector<std::uint32_t> gens_u = reg.record(cid).generators;
      std::vector<char> in_u(n, 0);
      for (auto u : U) in_u[u] = 1;
      for (std::uint32_t g = 0; g < n; ++g) {
        if (in_u[g]) continue;
        auto gens_v = gens_u;
        gens_v.push_back(g);
        std::vector<std::uint32_t> V(U.begin(), U.end());
        std::fill(mask.begin(), mask.end(), 0);
        for (auto u : U) mask[u] = 1;
        for (std::size_t i = 0; i < V.size(); ++i) {
          for (auto s : gens_v) {
            const auto y = A.mul(V[i], s);
            if (!mask[y]) {
              mask[y] = 1;
              V.push_back(y);
            }
          }
        }
        std::sort(V.begin(), V.end());
        if (auto id = reg.add(std::move(V), std::move(gens_v))) {
          on_new(*id);
          next.push_back(*id);
        }
      }
    }
    layer = std::move(next);
  }
}

MatGroup materialize(const IndexedGroup& A, const ClassRecord& r) {
  std::vector<Mat2> elements, gens;
  elements.reserve(r.elements.size());
  for (auto i : r.elements) elements.push_back(A.element(i));
  for (auto i : r.generators) gens.push_back(A.element(i));
  return MatGroup::from_elements(std::move(elements), std::move(gens), A.modulus());
}

SubgroupFingerprint indexed_fingerprint(const IndexedGroup& A, const ClassRecord& r) {
  SubgroupFingerprint f;
  f.order = r.elements.size();
  std::vector<Mat2> gens;
  for (auto i : r.generators) gens.push_back(A.element(i));
  f.orbit_lengths = orbit_decomposition(gens, A.modulus()).lengths();
  std::unordered_set<std::uint32_t> dets;
  for (auto i : r.elements) {
    dets.insert(A.element(i).det_value());
    ++f.element_orders[A.order_of(i)];
  }
  f.det_image = dets.size();
  if (is_prime(A.modulus())) f.stable_lines = stable_lines(gens, A.modulus()).count;
  return f;
}

void run_census(const IndexedGroup& A, ClassRegistry& reg, const CensusOptions& options,
                const std::function<void(std::size_t)>& on_new) {
  const MatGroup& G = A.group();
  if (is_solvable(G)) {
    cyclic_extension(A, reg, on_new);
  } else if (G.order() <= options.small_order_cap) {
    join_closure(A, reg, on_new);
  } else {
    fail(ErrorCode::kNotSolvableAndTooLarge,
         "census needs a solvable ambient or order <= " + std::to_string(options.small_order_cap) +
             " (got non-solvable order " + std::to_string(G.order()) + ")");
  }
}

bool census_less(const SubgroupClass& x, const SubgroupClass& y) {
  if (x.representative.order() != y.representative.order()) {
    return x.representative.order() < y.representative.order();
  }
  return x.representative.keys() < y.representative.keys();
}

}  // namespace

std::vector<SubgroupClass> subgroups_up_to_conjugacy(const MatGroup& ambient,
                                                     const CensusOptions& options) {
  IndexedGroup A(ambient);
  ClassRegistry reg(A);
  run_census(A, reg, options, [](std::size_t) {});
  std::vector<SubgroupClass> out;
  out.reserve(reg.records().size());
  for (const auto& r : reg.records()) {
    SubgroupClass c{materialize(A, r), {}, r.class_size};
    if (options.fingerprints) c.fingerprint = indexed_fingerprint(A, r);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), census_less);
  return out;
}

void for_each_subgroup_class(const MatGroup& ambient,
                             const std::function<void(const MatGroup&, std::size_t)>& visit,
                             const CensusOptions& options) {
  IndexedGroup A(ambient);
  ClassRegistry reg(A);
  run_census(A, reg, options, [&](std::size_t id) {
    const auto& r = reg.record(id);
    visit(materialize(A, r), r.class_size);
  });
}

// ---------------------------------------------------------------- fusion

namespace {

struct KeySet {
  std::vector<std::uint64_t> keys;
  std::vector<Mat2> gens;
};

KeySet conjugate_keys(const KeySet& X, const Mat2& c, const Mat2& ci, Modulus m) {
  KeySet Y;
  Y.keys.reserve(X.keys.size());
  for (auto k : X.keys) Y.keys.push_back(c.mul_unchecked(Mat2::from_key(k, m)).mul_unchecked(ci).key());
  std::sort(Y.keys.begin(), Y.keys.end());
  for (const auto& g : X.gens) Y.gens.push_back(c.mul_unchecked(g).mul_unchecked(ci));
  return Y;
}

// Explores the conjugacy class of H, recording every conjugate in `seen`.
CanonicalConjugate explore_class(const MatGroup& H, std::span<const Mat2> conjugators,
                                 std::unordered_set<SetHash, SetHashHasher>& seen) {
  const Modulus m = H.modulus();
  std::vector<Mat2> inverses;
  for (const auto& c : conjugators) inverses.push_back(mat_inv(c));
  std::vector<KeySet> members{KeySet{H.keys(), H.generators()}};
  seen.insert(detail::set_hash(H.keys()));
  std::size_t best = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < conjugators.size(); ++j) {
      KeySet Y = conjugate_keys(members[i], conjugators[j], inverses[j], m);
      if (!seen.insert(detail::set_hash(Y.keys)).second) continue;
      members.push_back(std::move(Y));
      if (members.back().keys < members[best].keys) best = members.size() - 1;
    }
  }
  std::vector<Mat2> elements;
  elements.reserve(members[best].keys.size());
  for (auto k : members[best].keys) elements.push_back(Mat2::from_key(k, m));
  return CanonicalConjugate{
      MatGroup::from_elements(std::move(elements), std::move(members[best].gens), m),
      members.size()};
}

}  // namespace

CanonicalConjugate canonical_conjugate(const MatGroup& H, std::span<const Mat2> conjugators) {
  for (const auto& c : conjugators) {
    if (c.modulus() != H.modulus()) fail(ErrorCode::kModulusMismatch, "conjugator modulus mismatch");
  }
  std::unordered_set<SetHash, SetHashHasher> seen;
  return explore_class(H, conjugators, seen);
}

std::vector<SubgroupClass> fuse_classes(const std::vector<MatGroup>& groups,
                                        std::span<const Mat2> conjugators, bool fingerprints) {
  std::unordered_set<SetHash, SetHashHasher> seen;
  std::vector<SubgroupClass> out;
  for (const auto& H : groups) {
    if (seen.count(detail::set_hash(H.keys()))) continue;
    CanonicalConjugate c = explore_class(H, conjugators, seen);
    SubgroupClass sc{std::move(c.group), {}, c.class_size};
    if (fingerprints) sc.fingerprint = fingerprint_of(sc.representative);
    out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), census_less);
  return out;
}

// ---------------------------------------------------------------- quotients

std::vector<MatGroup> normal_subgroups(const MatGroup& G) {
  const Modulus m = G.modulus();
  // Conjugacy classes of elements.
  std::unordered_set<std::uint64_t> assigned;
  std::vector<MatGroup> closures;
  for (const auto& x : G.elements()) {
    if (assigned.count(x.key())) continue;
    std::vector<Mat2> cls{x};
    assigned.insert(x.key());
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (const auto& g : G.generators()) {
        const Mat2 y = g.mul_unchecked(cls[i]).mul_unchecked(g.inverse_unchecked());
        if (assigned.insert(y.key()).second) cls.push_back(y);
      }
    }
    closures.push_back(MatGroup::closure(cls, m));
  }
  std::map<std::vector<std::uint64_t>, MatGroup> found;
  std::vector<MatGroup> list;
  auto add = [&](MatGroup N) {
    if (found.count(N.keys())) return;
    found.emplace(N.keys(), N);
    list.push_back(std::move(N));
  };
  add(MatGroup::trivial(m));
  for (auto& c : closures) add(c);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const auto& c : closures) {
      if (c.is_subgroup_of(list[i])) continue;
      std::vector<Mat2> gens(list[i].generators());
      gens.insert(gens.end(), c.generators().begin(), c.generators().end());
      add(MatGroup::closure(gens, m));
    }
  }
  std::vector<MatGroup> out;
  for (auto& [k, N] : found) out.push_back(N);
  std::sort(out.begin(), out.end(), [](const MatGroup& x, const MatGroup& y) {
    return x.order() != y.order() ? x.order() < y.order() : x.keys() < y.keys();
  });
  return out;
}

bool is_quotient_of(const FiniteGroup& target, const MatGroup& G) {
  const std::size_t t = target.order();
  if (G.order() % t != 0) return false;
  if (t == 1) return true;
  const GroupIsoType want = classify(target);
  for (const auto& N : normal_subgroups(G)) {
    if (G.order() / N.order() != t) continue;
    const FiniteGroup Q = FiniteGroup::quotient(G, N);
    if (classify(Q).same_fingerprint(want) && are_isomorphic(Q, target)) return true;
  }
  return false;
}

bool is_quotient_of_subgroup(const FiniteGroup& target, const MatGroup& ambient,
                             const CensusOptions& options) {
  if (target.order() == 1) return true;
  if (ambient.order() % target.order() != 0) return false;
  CensusOptions o = options;
  o.fingerprints = false;
  for (const auto& c : subgroups_up_to_conjugacy(ambient, o)) {
    if (c.representative.order() % target.order() != 0) continue;
    if (is_quotient_of(target, c.representative)) return true;
  }
  return false;
}

bool has_subgroup_isomorphic_to(const FiniteGroup& target, const MatGroup& ambient,
                                const CensusOptions& options) {
  CensusOptions o = options;
  o.fingerprints = false;
  for (const auto& c : subgroups_up_to_conjugacy(ambient, o)) {
    if (c.representative.order() != target.order()) continue;
    if (are_isomorphic(FiniteGroup::from_mat_group(c.representative), target)) return true;
  }
  return false;
}

}  // namespace tatlas
