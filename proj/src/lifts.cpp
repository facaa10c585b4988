#include "tatlas/lifts.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace tatlas {

namespace {

using Vec4 = std::array<std::uint32_t, 4>;
using Row = std::vector<std::uint32_t>;

Mat2 canonical_lift(const Mat2& h, Modulus target) { return Mat2(h.a(), h.b(), h.c(), h.d(), target); }

Mat2 from_vec4(const Vec4& v, Modulus p) { return Mat2(v[0], v[1], v[2], v[3], p); }
Vec4 to_vec4(const Mat2& A) { return A.entries(); }

/// h X h^-1 over F_p.
Vec4 act(const Mat2& h, const Mat2& h_inv, const Vec4& x, Modulus p) {
  return to_vec4(h.mul_unchecked(from_vec4(x, p)).mul_unchecked(h_inv));
}

// Subspace of F_p^4 in reduced row echelon form.
struct Subspace {
  std::vector<Vec4> rows;
  std::vector<int> pivots;

  Vec4 reduce(Vec4 v, Modulus p) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::uint64_t f = v[pivots[i]];
      if (!f) continue;
      for (int c = 0; c < 4; ++c) {
        v[c] = static_cast<std::uint32_t>((v[c] + std::uint64_t{p - f} * rows[i][c]) % p);
      }
    }
    return v;
  }
  bool contains(const Vec4& v, Modulus p) const {
    const Vec4 r = reduce(v, p);
    return r == Vec4{0, 0, 0, 0};
  }
};

std::vector<Subspace> all_subspaces(Modulus p) {
  std::vector<Subspace> out;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> piv;
    for (int c = 0; c < 4; ++c) {
      if (mask & (1 << c)) piv.push_back(c);
    }
    // Free slots: (row i, column c) with c > pivot_i and c not a pivot.
    std::vector<std::pair<int, int>> free_slots;
    for (std::size_t i = 0; i < piv.size(); ++i) {
      for (int c = piv[i] + 1; c < 4; ++c) {
        if (!(mask & (1 << c))) free_slots.emplace_back(static_cast<int>(i), c);
      }
    }
    std::uint64_t combos = 1;
    for (std::size_t k = 0; k < free_slots.size(); ++k) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      Subspace S;
      S.pivots = piv;
      S.rows.assign(piv.size(), Vec4{0, 0, 0, 0});
      for (std::size_t i = 0; i < piv.size(); ++i) S.rows[i][piv[i]] = 1;
      std::uint64_t rest = code;
      for (const auto& [i, c] : free_slots) {
        S.rows[i][c] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      out.push_back(std::move(S));
    }
  }
  return out;
}

bool is_stable(const Subspace& W, const MatGroup& H) {
  const Modulus p = H.modulus();
  for (const auto& h : H.generators()) {
    const Mat2 hi = h.inverse_unchecked();
    for (const auto& w : W.rows) {
      if (!W.contains(act(h, hi, w, p), p)) return false;
    }
  }
  return true;
}

// Row reduction over F_p of an augmented system; returns false if inconsistent.
struct LinearSolution {
  Row particular;
  std::vector<Row> kernel;
};

bool solve(std::vector<Row> rows, std::size_t unknowns, Modulus p, LinearSolution& out) {
  const std::size_t rhs = unknowns;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const std::uint64_t inv = Residue(rows[r][c], p).inverse().value();
    for (auto& x : rows[r]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t k = 0; k <= unknowns; ++k) {
        rows[i][k] = static_cast<std::uint32_t>((rows[i][k] + (p - f) * rows[r][k]) % p);
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i][rhs] != 0) return false;
  }
  out.particular.assign(unknowns, 0);
  std::vector<char> is_pivot(unknowns, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    out.particular[pivot_cols[i]] = rows[i][rhs];
    is_pivot[pivot_cols[i]] = 1;
  }
  out.kernel.clear();
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    Row z(unknowns, 0);
    z[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) z[pivot_cols[i]] = (p - rows[i][f]) % p;
    out.kernel.push_back(std::move(z));
  }
  return true;
}

// Incrementally maintained echelon basis, used to pick a complement of B^1.
class Span {
 public:
  explicit Span(Modulus p) : p_(p) {}
  /// Adds v; returns true if it was independent of the current span.
  bool add(Row v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::uint64_t f = v[pivots_[i]];
      if (!f) continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = static_cast<std::uint32_t>((v[k] + (p_ - f) * rows_[i][k]) % p_);
      }
    }
    std::size_t c = 0;
    while (c < v.size() && v[c] == 0) ++c;
    if (c == v.size()) return false;
    const std::uint64_t inv = Residue(v[c], p_).inverse().value();
    for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p_);
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

 private:
  Modulus p_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

constexpr std::uint64_t kMaxCohomologyClasses = 1'000'000;

// All G with reduce(G) = H and G meeting the kernel in I + pW.
std::vector<MatGroup> lifts_for_subspace(const MatGroup& H, const Subspace& W, Modulus target) {
  const Modulus p = H.modulus();
  const auto& el = H.elements();
  const std::size_t n = el.size();
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(el[i].key(), i);

  std::vector<int> free_coords;  // coordinates of F_p^4 / W
  for (int c = 0; c < 4; ++c) {
    if (std::find(W.pivots.begin(), W.pivots.end(), c) == W.pivots.end()) free_coords.push_back(c);
  }
  const std::size_t r = free_coords.size();
  const std::size_t unknowns = n * r;
  auto project = [&](const Vec4& v) {
    const Vec4 red = W.reduce(v, p);
    std::vector<std::uint32_t> out(r);
    for (std::size_t t = 0; t < r; ++t) out[t] = red[free_coords[t]];
    return out;
  };
  auto unit = [&](std::size_t t) {
    Vec4 e{0, 0, 0, 0};
    e[free_coords[t]] = 1;
    return e;
  };

  std::vector<Mat2> lifts(n), inverses(n);
  for (std::size_t i = 0; i < n; ++i) {
    lifts[i] = canonical_lift(el[i], target);
    inverses[i] = el[i].inverse_unchecked();
  }

  std::vector<Row> rows;
  // c(1) = 0 in M2 / W.
  const std::size_t id = index.at(Mat2::identity(p).key());
  for (std::size_t t = 0; t < r; ++t) {
    Row row(unknowns + 1, 0);
    row[id * r + t] = 1;
    rows.push_back(std::move(row));
  }
  // c(h g) - c(h) - h.c(g) = F(h, g) mod W for each generator g.
  for (std::size_t h = 0; h < n; ++h) {
    std::vector<std::vector<std::uint32_t>> acted(r);
    for (std::size_t k = 0; k < r; ++k) acted[k] = project(act(el[h], inverses[h], unit(k), p));
    for (const auto& gen : H.generators()) {
      const std::size_t g = index.at(gen.key());
      const std::size_t hg = index.at(el[h].mul_unchecked(el[g]).key());
      const Mat2 f = lifts[h].mul_unchecked(lifts[g]).mul_unchecked(lifts[hg].inverse_unchecked());
      // f = I + pF
      Vec4 F{};
      const auto fe = f.entries();
      for (int c = 0; c < 4; ++c) {
        const std::uint32_t delta = (c == 0 || c == 3) ? 1 : 0;
        F[c] = ((fe[c] + target - delta) % target) / p;
      }
      const auto rhs = project(F);
      for (std::size_t t = 0; t < r; ++t) {
        Row row(unknowns + 1, 0);
        row[hg * r + t] = (row[hg * r + t] + 1) % p;
        row[h * r + t] = (row[h * r + t] + p - 1) % p;
        for (std::size_t k = 0; k < r; ++k) {
          row[g * r + k] = (row[g * r + k] + p - acted[k][t]) % p;
        }
        row[unknowns] = rhs[t];
        rows.push_back(std::move(row));
      }
    }
  }

  LinearSolution sol;
  if (!solve(std::move(rows), unknowns, p, sol)) return {};

  // Complement of the coboundaries inside the cocycles.
  Span span(p);
  for (std::size_t k = 0; k < r; ++k) {
    Row b(unknowns, 0);
    for (std::size_t h = 0; h < n; ++h) {
      Vec4 v = act(el[h], inverses[h], unit(k), p);
      v[free_coords[k]] = (v[free_coords[k]] + p - 1) % p;
      const auto pv = project(v);
      for (std::size_t t = 0; t < r; ++t) b[h * r + t] = pv[t];
    }
    span.add(std::move(b));
  }
  std::vector<Row> complement;
  for (const auto& z : sol.kernel) {
    if (span.add(z)) complement.push_back(z);
  }
  std::uint64_t classes = 1;
  for (std::size_t i = 0; i < complement.size(); ++i) {
    classes *= p;
    if (classes > kMaxCohomologyClasses) {
      fail(ErrorCode::kSizeCapExceeded, "first cohomology too large to enumerate");
    }
  }

  std::vector<Mat2> kernel_gens;
  for (const auto& w : W.rows) {
    kernel_gens.push_back(Mat2(1 + p * w[0], p * w[1], p * w[2], 1 + p * w[3], target));
  }
  std::uint64_t expected = n;
  for (std::size_t i = 0; i < W.rows.size(); ++i) expected *= p;

  std::vector<MatGroup> out;
  std::vector<std::uint32_t> coeff(complement.size(), 0);
  for (std::uint64_t code = 0; code < classes; ++code) {
    std::uint64_t rest = code;
    for (auto& a : coeff) {
      a = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    Row c = sol.particular;
    for (std::size_t i = 0; i < complement.size(); ++i) {
      if (!coeff[i]) continue;
      for (std::size_t k = 0; k < unknowns; ++k) {
        c[k] = static_cast<std::uint32_t>((c[k] + std::uint64_t{coeff[i]} * complement[i][k]) % p);
      }
    }
    std::vector<Mat2> gens = kernel_gens;
    for (const auto& gen : H.generators()) {
      const std::size_t g = index.at(gen.key());
      Vec4 x{0, 0, 0, 0};
      for (std::size_t t = 0; t < r; ++t) x[free_coords[t]] = c[g * r + t];
      const Mat2 k(1 + p * x[0], p * x[1], p * x[2], 1 + p * x[3], target);
      gens.push_back(k.mul_unchecked(lifts[g]));
    }
    MatGroup G = MatGroup::closure(gens, target);
    if (G.order() != expected) {
      fail(ErrorCode::kInternal, "cocycle lift has order " + std::to_string(G.order()) +
                                     ", expected " + std::to_string(expected));
    }
    out.push_back(std::move(G));
  }
  return out;
}

void check_lift_arguments(const MatGroup& H, Modulus target) {
  const Modulus p = H.modulus();
  if (!is_prime(p)) fail(ErrorCode::kNonPrimeModulus, "lifts need H over a prime field");
  if (std::uint64_t{p} * p != target) {
    fail(ErrorCode::kInvalidArgument, "target modulus must be p^2 = " + std::to_string(p * p));
  }
}

std::vector<MatGroup> all_subgroups(const MatGroup& H) {
  // Every member of every conjugacy class.
  std::vector<MatGroup> out;
  for (const auto& c : subgroups_up_to_conjugacy(H, CensusOptions{500, false})) {
    std::map<std::vector<std::uint64_t>, MatGroup> members;
    std::vector<MatGroup> queue{c.representative};
    members.emplace(c.representative.keys(), c.representative);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& g : H.generators()) {
        MatGroup K = conjugate(queue[i], g);
        if (members.emplace(K.keys(), K).second) queue.push_back(std::move(K));
      }
    }
    for (auto& [k, K] : members) out.push_back(std::move(K));
  }
  return out;
}

}  // namespace

MatGroup normalizer_in_gl2(const MatGroup& H) {
  const Modulus p = H.modulus();
  std::vector<Mat2> elements;
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      for (std::uint32_t c = 0; c < p; ++c) {
        for (std::uint32_t d = 0; d < p; ++d) {
          const Mat2 g(a, b, c, d, p);
          if (!is_invertible(g)) continue;
          if (normalizes(g, H)) elements.push_back(g);
        }
      }
    }
  }
  return MatGroup::from_elements(std::move(elements), p);
}

MatGroup full_preimage(const MatGroup& H, Modulus target) {
  check_lift_arguments(H, target);
  const Modulus p = H.modulus();
  std::vector<Mat2> gens;
  for (const auto& h : H.generators()) gens.push_back(canonical_lift(h, target));
  gens.push_back(Mat2(1 + p, 0, 0, 1, target));
  gens.push_back(Mat2(1, p, 0, 1, target));
  gens.push_back(Mat2(1, 0, p, 1, target));
  gens.push_back(Mat2(1, 0, 0, 1 + p, target));
  return MatGroup::closure(gens, target);
}

std::vector<Mat2> lift_conjugators(const MatGroup& H, Modulus target) {
  check_lift_arguments(H, target);
  const Modulus p = H.modulus();
  std::vector<Mat2> gens;
  const MatGroup N = normalizer_in_gl2(H);
  for (const auto& g : N.generators()) gens.push_back(canonical_lift(g, target));
  gens.push_back(Mat2(1 + p, 0, 0, 1, target));
  gens.push_back(Mat2(1, p, 0, 1, target));
  gens.push_back(Mat2(1, 0, p, 1, target));
  gens.push_back(Mat2(1, 0, 0, 1 + p, target));
  return gens;
}

std::vector<std::vector<std::array<std::uint32_t, 4>>> stable_kernel_subspaces(const MatGroup& H) {
  std::vector<std::vector<Vec4>> out;
  for (const auto& W : all_subspaces(H.modulus())) {
    if (is_stable(W, H)) out.push_back(W.rows);
  }
  return out;
}

std::vector<SubgroupClass> enumerate_lifts(const MatGroup& H, Modulus target,
                                           const LiftOptions& options) {
  check_lift_arguments(H, target);
  const Modulus p = H.modulus();
  const std::vector<Mat2> conjugators = lift_conjugators(H, target);
  std::vector<MatGroup> candidates;

  if (options.path == LiftPath::kReference) {
    const MatGroup P = full_preimage(H, target);
    if (!is_solvable(P)) fail(ErrorCode::kNotSolvable, "preimage of H is not solvable");
    for_each_subgroup_class(
        P,
        [&](const MatGroup& G, std::size_t) {
          if (options.surjective_only && reduce_group(G, p).order() != H.order()) return;
          candidates.push_back(G);
        },
        CensusOptions{0, false});
  } else {
    const std::vector<MatGroup> bases =
        options.surjective_only ? std::vector<MatGroup>{H} : all_subgroups(H);
    const auto spaces = all_subspaces(p);
    for (const auto& S : bases) {
      for (const auto& W : spaces) {
        if (!is_stable(W, S)) continue;
        for (auto& G : lifts_for_subspace(S, W, target)) candidates.push_back(std::move(G));
      }
    }
  }
  return fuse_classes(candidates, conjugators, options.fingerprints);
}

}  // namespace tatlas
