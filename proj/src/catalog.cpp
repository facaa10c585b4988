#include "tatlas/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "tatlas/error.hpp"

namespace tatlas {

// ------------------------------------------------------------ residues

int legendre_euler(std::int64_t a, std::uint64_t p) {
  const std::uint64_t r = Residue(a, p).value();
  if (r == 0) return 0;
  const std::uint64_t e = pow_mod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int legendre_reciprocity(std::int64_t a, std::uint64_t p) {
  // Jacobi symbol (a/n) for odd n.
  std::uint64_t n = p;
  std::uint64_t x = Residue(a, p).value();
  int sign = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::uint64_t r = n % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) sign = -sign;
    x %= n;
  }
  return n == 1 ? sign : 0;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::kInvalidArgument, "legendre needs an odd prime");
  const int e = legendre_euler(a, p);
  const int r = legendre_reciprocity(a, p);
  if (e != r) fail(ErrorCode::kInternal, "legendre paths disagree");
  return e;
}

Residue epsilon_for(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) fail(ErrorCode::kInvalidArgument, "epsilon needs an odd prime");
  if (p % 4 == 3) return Residue(-1, p);
  for (std::uint64_t e = 2;; ++e) {
    if (legendre_euler(static_cast<std::int64_t>(e), p) == -1) return Residue(static_cast<std::int64_t>(e), p);
  }
}

// ------------------------------------------------------------ names

namespace {

constexpr std::array<std::pair<GroupName, std::string_view>, 15> kNames{{
    {GroupName::Cs, "Cs"},
    {GroupName::CsPlus, "CsPlus"},
    {GroupName::Cns, "Cns"},
    {GroupName::CnsPlus, "CnsPlus"},
    {GroupName::G0, "G0"},
    {GroupName::G3, "G3"},
    {GroupName::G00, "G00"},
    {GroupName::G10, "G10"},
    {GroupName::G01, "G01"},
    {GroupName::BorelFull, "BorelFull"},
    {GroupName::BorelFixLine, "BorelFixLine"},
    {GroupName::BorelQuotientLine, "BorelQuotientLine"},
    {GroupName::SL2, "SL2"},
    {GroupName::GL2, "GL2"},
    {GroupName::PS4Preimage, "PS4Preimage"},
}};

}  // namespace

std::string_view group_name_string(GroupName name) {
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  return "?";
}

GroupName parse_group_name(std::string_view text) {
  for (const auto& [n, s] : kNames) {
    if (s == text) return n;
  }
  fail(ErrorCode::kParseError, "unknown group name '" + std::string(text) + "'");
}

std::string NamedGroupSpec::label() const {
  std::string s = std::string(group_name_string(name)) + "(" + std::to_string(p);
  if (epsilon) s += ",eps=" + std::to_string(*epsilon);
  return s + ")";
}

void validate(const NamedGroupSpec& spec) {
  const std::uint64_t p = spec.p;
  auto violated = [&](const std::string& why) {
    fail(ErrorCode::kSpecViolation, spec.label() + ": " + why);
  };
  if (!is_prime(p)) violated("p must be prime");
  if (p > 65535) violated("p must be below 2^16");
  switch (spec.name) {
    case GroupName::G3:
      if (p % 3 != 1) violated("G3 requires p = 1 mod 3");
      break;
    case GroupName::Cns:
    case GroupName::CnsPlus:
    case GroupName::G0:
    case GroupName::G00:
    case GroupName::G10:
    case GroupName::G01:
    case GroupName::PS4Preimage:
      if (p == 2) violated("requires p odd");
      break;
    default:
      break;
  }
  if (spec.epsilon) {
    if (spec.name != GroupName::Cns && spec.name != GroupName::CnsPlus && spec.name != GroupName::G0) {
      violated("epsilon only applies to non-split Cartan groups");
    }
    if (p == 2 || legendre_euler(static_cast<std::int64_t>(*spec.epsilon), p) != -1) {
      violated("epsilon must be a quadratic non-residue");
    }
  }
}

namespace {

Mat2 m_eps(std::uint64_t a, std::uint64_t b, std::uint64_t eps, Modulus p) {
  return Mat2(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b * eps % p),
              static_cast<std::int64_t>(b), static_cast<std::int64_t>(a), p);
}

bool has_order(const Mat2& A, std::uint64_t n) {
  if (!mat_pow(A, n).is_identity()) return false;
  for (auto q : prime_factors(n)) {
    if (mat_pow(A, n / q).is_identity()) return false;
  }
  return true;
}

// Least M_eps(a,b) generating C_ns(p).
Mat2 cns_generator(Modulus p, std::uint64_t eps) {
  const std::uint64_t n = std::uint64_t{p} * p - 1;
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 1; b < p; ++b) {
      const Mat2 M = m_eps(a, b, eps, p);
      if (has_order(M, n)) return M;
    }
  }
  fail(ErrorCode::kInternal, "no generator of the non-split Cartan found");
}

// Normalized representative of the scalar class of A: first nonzero entry 1.
std::uint64_t projective_key(const Mat2& A) {
  const auto& e = A.entries();
  std::uint32_t lead = 0;
  for (auto x : e) {
    if (x) {
      lead = x;
      break;
    }
  }
  const Modulus p = A.modulus();
  const std::uint64_t inv = Residue(lead, p).inverse().value();
  return Mat2::scalar(static_cast<std::int64_t>(inv), p).mul_unchecked(A).key();
}

std::uint64_t projective_order(const Mat2& A) {
  std::uint64_t k = 1;
  Mat2 x = A;
  while (!(x.b() == 0 && x.c() == 0 && x.a() == x.d())) {
    x = x.mul_unchecked(A);
    ++k;
  }
  return k;
}

MatGroup ps4_preimage(Modulus p) {
  const std::uint64_t g = primitive_root(p);
  const std::size_t target = 24 * (p - 1);
  const std::map<std::uint64_t, std::uint64_t> s4_orders{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  std::vector<Mat2> order4, order3;
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      for (std::uint32_t c = 0; c < p; ++c) {
        for (std::uint32_t d = 0; d < p; ++d) {
          const Mat2 A(a, b, c, d, p);
          if (!is_invertible(A) || projective_key(A) != A.key()) continue;
          const auto k = projective_order(A);
          if (k == 4) order4.push_back(A);
          if (k == 3) order3.push_back(A);
        }
      }
    }
  }
  const Mat2 scalar = Mat2::scalar(static_cast<std::int64_t>(g), p);
  for (const auto& x : order4) {
    for (const auto& y : order3) {
      const std::vector<Mat2> gens{x, y, scalar};
      std::optional<MatGroup> G;
      try {
        G = MatGroup::closure(gens, p, target);
      } catch (const AtlasError& e) {
        if (e.code() != ErrorCode::kSizeCapExceeded) throw;
        continue;
      }
      if (G->order() != target) continue;
      std::map<std::uint64_t, std::uint64_t> hist;
      std::set<std::uint64_t> seen;
      for (const auto& A : G->elements()) {
        if (seen.insert(projective_key(A)).second) ++hist[projective_order(A)];
      }
      if (hist == s4_orders) return MatGroup::closure(gens, p);
    }
  }
  fail(ErrorCode::kSpecViolation, "PGL2(F_" + std::to_string(p) + ") has no S4 generated this way");
}

std::uint64_t eps_of(const NamedGroupSpec& spec) {
  return spec.epsilon ? *spec.epsilon : epsilon_for(spec.p).value();
}

}  // namespace

std::vector<Mat2> named_generators(const NamedGroupSpec& spec) {
  validate(spec);
  const Modulus p = static_cast<Modulus>(spec.p);
  const std::int64_t g = static_cast<std::int64_t>(primitive_root(p));
  const Mat2 U(1, 1, 0, 1, p);
  const Mat2 L(1, 0, 1, 1, p);
  const Mat2 T = swap_matrix(p);
  const Mat2 J = reflection_matrix(p);
  switch (spec.name) {
    case GroupName::Cs:
      return {diag(g, 1, p), diag(1, g, p)};
    case GroupName::CsPlus:
      return {diag(g, 1, p), diag(1, g, p), T};
    case GroupName::Cns:
      return {cns_generator(p, eps_of(spec))};
    case GroupName::CnsPlus:
      return {cns_generator(p, eps_of(spec)), J};
    case GroupName::G0:
      return {mat_pow(cns_generator(p, eps_of(spec)), 3), J};
    case GroupName::G3:
      return {diag(g, g, p), diag(1, g * g * g, p), T};
    case GroupName::G00:
      return {diag(g, g, p), U, J};
    case GroupName::G10:
      return {diag(g * g, g * g, p), U, J};
    case GroupName::G01:
      return {diag(g * g, g * g, p), U, diag(-1, 1, p)};
    case GroupName::BorelFull:
      return {diag(g, 1, p), diag(1, g, p), U};
    case GroupName::BorelFixLine:
      return {diag(1, g, p), U};
    case GroupName::BorelQuotientLine:
      return {diag(g, 1, p), U};
    case GroupName::SL2:
      return {U, L};
    case GroupName::GL2:
      return {U, L, diag(g, 1, p)};
    case GroupName::PS4Preimage:
      return ps4_preimage(p).generators();
  }
  fail(ErrorCode::kInternal, "unhandled group name");
}

std::uint64_t named_order(const NamedGroupSpec& spec) {
  validate(spec);
  const std::uint64_t p = spec.p;
  switch (spec.name) {
    case GroupName::Cs: return (p - 1) * (p - 1);
    case GroupName::CsPlus: return 2 * (p - 1) * (p - 1);
    case GroupName::Cns: return p * p - 1;
    case GroupName::CnsPlus: return 2 * (p * p - 1);
    case GroupName::G0: return 2 * (p * p - 1) / std::gcd<std::uint64_t>(3, p * p - 1);
    case GroupName::G3: return 2 * (p - 1) * (p - 1) / 3;
    case GroupName::G00: return 2 * p * (p - 1);
    case GroupName::G10:
    case GroupName::G01: return p * (p - 1);
    case GroupName::BorelFull: return p * (p - 1) * (p - 1);
    case GroupName::BorelFixLine:
    case GroupName::BorelQuotientLine: return p * (p - 1);
    case GroupName::SL2: return p * (p * p - 1);
    case GroupName::GL2: return (p * p - 1) * (p * p - p);
    case GroupName::PS4Preimage: return 24 * (p - 1);
  }
  fail(ErrorCode::kInternal, "unhandled group name");
}

MatGroup build_named(const NamedGroupSpec& spec) {
  const auto gens = named_generators(spec);
  MatGroup G = MatGroup::closure(gens, static_cast<Modulus>(spec.p));
  if (G.order() != named_order(spec)) {
    fail(ErrorCode::kInternal, spec.label() + " has order " + std::to_string(G.order()) +
                                   ", expected " + std::to_string(named_order(spec)));
  }
  return G;
}

// ------------------------------------------------------------ CM data

const std::array<CMDatum, 13>& rational_cm_pairs() {
  static const std::array<CMDatum, 13> pairs{{{3, 1},
                                              {3, 2},
                                              {3, 3},
                                              {4, 1},
                                              {4, 2},
                                              {7, 1},
                                              {7, 2},
                                              {8, 1},
                                              {11, 1},
                                              {19, 1},
                                              {43, 1},
                                              {67, 1},
                                              {163, 1}}};
  return pairs;
}

const std::array<std::uint64_t, 8>& cm_constant() {
  static const std::array<std::uint64_t, 8> c{1, 2, 7, 11, 19, 43, 67, 163};
  return c;
}

const std::vector<ExceptionalJ>& exceptional_j_invariants() {
  static const std::vector<ExceptionalJ> js{
      {17, "-17*373^3/2^17"},
      {17, "-17^2*101^3/2"},
      {37, "-7*11^3"},
      {37, "-7*137^3*2083^3"},
  };
  return js;
}

// ------------------------------------------------------------ table rows

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows{
      {"2Cs", 2, 1, {1}},
      {"2B", 2, 2, {1, 2}},
      {"2Cn", 2, 3, {3}},
      {"3Cs.1.1", 3, 2, {1, 2}},
      {"3Cs", 3, 4, {2, 4}},
      {"3B.1.1", 3, 6, {1, 6}},
      {"3B.1.2", 3, 6, {2, 3}},
      {"3Ns", 3, 8, {4}},
      {"3B", 3, 12, {2, 6}},
      {"3Nn", 3, 16, {8}},
      {"5Cs.1.1", 5, 4, {1, 4}},
      {"5Cs.1.3", 5, 4, {2, 4}},
      {"5Cs.4.1", 5, 8, {2, 4, 8}},
      {"5Ns.2.1", 5, 16, {8, 16}},
      // Printed as "4, 4"; the diagonal group of order 16 has orbits 4 and 16.
      {"5Cs", 5, 16, {4, 16}},
      {"5B.1.1", 5, 20, {1, 20}},
      {"5B.1.2", 5, 20, {4, 5}},
      {"5B.1.4", 5, 20, {2, 20}},
      {"5B.1.3", 5, 20, {4, 10}},
      {"5Ns", 5, 32, {8, 16}},
      {"5B.4.1", 5, 40, {2, 20}},
      {"5B.4.2", 5, 40, {4, 10}},
      {"5Nn", 5, 48, {24}},
      {"5B", 5, 80, {4, 20}},
      {"5S4", 5, 96, {24}},
      {"7Ns.2.1", 7, 18, {6, 9, 18}},
      {"7Ns.3.1", 7, 36, {12, 18}},
      {"7B.1.1", 7, 42, {1, 42}},
      {"7B.1.3", 7, 42, {6, 7}},
      {"7B.1.2", 7, 42, {3, 42}},
      {"7B.1.5", 7, 42, {6, 21}},
      {"7B.1.6", 7, 42, {2, 21}},
      {"7B.1.4", 7, 42, {3, 14}},
      {"7Ns", 7, 72, {12, 36}},
      {"7B.6.1", 7, 84, {2, 42}},
      {"7B.6.3", 7, 84, {6, 14}},
      {"7B.6.2", 7, 84, {6, 42}},
      {"7Nn", 7, 96, {48}},
      {"7B.2.1", 7, 126, {3, 42}},
      {"7B.2.3", 7, 126, {6, 21}},
      {"7B", 7, 252, {6, 42}},
      {"11B.1.4", 11, 110, {5, 110}},
      {"11B.1.5", 11, 110, {5, 110}},
      {"11B.1.6", 11, 110, {10, 55}},
      {"11B.1.7", 11, 110, {10, 55}},
      {"11B.10.4", 11, 220, {10, 110}},
      {"11B.10.5", 11, 220, {10, 110}},
      {"11Nn", 11, 240, {120}},
      {"13S4", 13, 288, {72, 96}},
      {"13B.3.1", 13, 468, {3, 156}},
      {"13B.3.2", 13, 468, {12, 39}},
      {"13B.3.4", 13, 468, {6, 156}},
      {"13B.3.7", 13, 468, {12, 78}},
      {"13B.5.1", 13, 624, {4, 156}},
      {"13B.5.2", 13, 624, {12, 52}},
      {"13B.5.4", 13, 624, {12, 156}},
      {"13B.4.1", 13, 936, {6, 156}},
      {"13B.4.2", 13, 936, {12, 78}},
      {"13B", 13, 1872, {12, 156}},
      {"17B.4.2", 17, 1088, {8, 272}},
      {"17B.4.6", 17, 1088, {16, 136}},
      {"37B.8.1", 37, 15984, {12, 1332}},
      {"37B.8.2", 37, 15984, {36, 444}},
  };
  return rows;
}

std::vector<TableRow> table_rows_for(std::uint64_t p) {
  std::vector<TableRow> out;
  for (const auto& r : table_rows()) {
    if (r.p == p) out.push_back(r);
  }
  return out;
}

std::vector<NamedGroupSpec> table_ambients(std::uint64_t p) {
  if (p <= 3) return {{GroupName::GL2, p, {}}};
  std::vector<NamedGroupSpec> out{{GroupName::BorelFull, p, {}},
                                  {GroupName::CsPlus, p, {}},
                                  {GroupName::CnsPlus, p, {}}};
  if (p == 5 || p == 13) out.push_back({GroupName::PS4Preimage, p, {}});
  return out;
}

namespace {

std::vector<std::size_t> nonzero_lengths(const MatGroup& G) {
  const auto decomposition = orbit_decomposition(G);
  std::set<std::size_t> s;
  for (const auto& o : decomposition.orbits) {
    if (!o.representative.is_zero()) s.insert(o.length);
  }
  return {s.begin(), s.end()};
}

std::string short_fingerprint(std::uint64_t d, const std::vector<std::size_t>& dv) {
  std::ostringstream os;
  os << "d=" << d << " dv={";
  for (std::size_t i = 0; i < dv.size(); ++i) os << (i ? "," : "") << dv[i];
  os << "}";
  return os.str();
}

std::vector<RowMatch> identify(std::uint64_t p) {
  const Modulus m = static_cast<Modulus>(p);
  std::vector<MatGroup> candidates;
  if (p <= 13) {
    for (const auto& spec : table_ambients(p)) {
      for_each_subgroup_class(
          build_named(spec), [&](const MatGroup& H, std::size_t) { candidates.push_back(H); },
          CensusOptions{500, false});
    }
  } else {
    candidates = borel_targeted_search(p);
  }
  std::vector<std::vector<std::size_t>> lengths;
  lengths.reserve(candidates.size());
  for (const auto& H : candidates) lengths.push_back(nonzero_lengths(H));

  const auto gl2 = named_generators({GroupName::GL2, p, {}});
  std::vector<RowMatch> out;
  for (const auto& row : table_rows_for(p)) {
    RowMatch rm{row, {}, {}};
    std::vector<MatGroup> hits;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].order() == row.d && lengths[i] == row.dv) hits.push_back(candidates[i]);
    }
    for (auto& c : fuse_classes(hits, gl2, false)) rm.matches.push_back(std::move(c.representative));
    if (rm.matches.empty()) {
      // Closest orders first.
      std::vector<std::size_t> idx(candidates.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      auto dist = [&](std::size_t i) {
        const auto o = candidates[i].order();
        return o > row.d ? o - row.d : row.d - o;
      };
      std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return dist(a) < dist(b); });
      std::set<std::string> seen;
      for (auto i : idx) {
        auto s = short_fingerprint(candidates[i].order(), lengths[i]);
        if (seen.insert(s).second) rm.nearest.push_back(s);
        if (rm.nearest.size() == 5) break;
      }
    }
    out.push_back(std::move(rm));
  }
  (void)m;
  return out;
}

}  // namespace

std::vector<MatGroup> borel_targeted_search(std::uint64_t p) {
  const Modulus m = static_cast<Modulus>(p);
  const std::uint64_t n = p - 1;
  const std::int64_t g = static_cast<std::int64_t>(primitive_root(p));
  // Diagonal subgroups <D(g^i, g^j), g^k I> in exponent coordinates.
  std::set<std::vector<std::uint64_t>> tori;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> torus_gens;
  std::vector<std::uint64_t> scalar_steps;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (n % k == 0) scalar_steps.push_back(k);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> gens_of_kept;
  std::vector<std::array<std::uint64_t, 3>> kept;
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      for (auto k : scalar_steps) {
        std::vector<char> in(n * n, 0);
        std::vector<std::uint64_t> members{0};
        in[0] = 1;
        for (std::size_t t = 0; t < members.size(); ++t) {
          const std::uint64_t x = members[t] / n, y = members[t] % n;
          for (auto [dx, dy] : {std::pair{i, j}, std::pair{k % n, k % n}}) {
            const std::uint64_t c = ((x + dx) % n) * n + (y + dy) % n;
            if (!in[c]) {
              in[c] = 1;
              members.push_back(c);
            }
          }
        }
        std::sort(members.begin(), members.end());
        if (tori.insert(members).second) kept.push_back({i, j, k});
      }
    }
  }
  std::vector<MatGroup> out;
  out.reserve(kept.size());
  const Mat2 U(1, 1, 0, 1, m);
  for (const auto& [i, j, k] : kept) {
    const std::vector<Mat2> gens{diag(static_cast<std::int64_t>(pow_mod(g, i, p)),
                                      static_cast<std::int64_t>(pow_mod(g, j, p)), m),
                                 Mat2::scalar(static_cast<std::int64_t>(pow_mod(g, k, p)), m), U};
    out.push_back(MatGroup::closure(gens, m));
  }
  std::sort(out.begin(), out.end(), [](const MatGroup& a, const MatGroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.keys() < b.keys();
  });
  return out;
}

const std::vector<RowMatch>& identify_table_rows(std::uint64_t p) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<RowMatch>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, identify(p)).first;
  return it->second;
}

bool is_applicable(const MatGroup& G) {
  const Modulus p = G.modulus();
  if (!G.contains(Mat2::scalar(-1, p))) return false;
  if (det_image_size(G) != p - 1) return false;
  for (const auto& A : G.elements()) {
    if (mat_trace(A).value() == 0 && A.det_value() == p - 1) return true;
  }
  return false;
}

const Prop13Census& prop13_census() {
  static std::once_flag once;
  static Prop13Census result;
  std::call_once(once, [] {
    const std::uint64_t p = 13;
    std::vector<MatGroup> applicable;
    for (auto name : {GroupName::CsPlus, GroupName::CnsPlus, GroupName::PS4Preimage}) {
      const MatGroup ambient = build_named({name, p, {}});
      for_each_subgroup_class(
          ambient,
          [&](const MatGroup& H, std::size_t) {
            if (H.order() == ambient.order()) return;
            std::vector<Mat2> gens = H.generators();
            gens.push_back(Mat2::scalar(-1, static_cast<Modulus>(p)));
            if (is_applicable(MatGroup::closure(gens, static_cast<Modulus>(p)))) applicable.push_back(H);
          },
          CensusOptions{500, false});
    }
    const auto gl2 = named_generators({GroupName::GL2, p, {}});
    for (auto& c : fuse_classes(applicable, gl2, true)) {
      const auto dv = nonzero_lengths(c.representative);
      bool labelled = false;
      for (const auto& row : table_rows_for(p)) {
        labelled = labelled || (row.d == c.representative.order() && row.dv == dv);
      }
      if (labelled) continue;
      result.applicable.push_back(c);
      if (stable_lines(c.representative).count >= 2) {
        result.excluded.push_back(c);
      } else {
        result.survivors.push_back(c);
      }
    }
  });
  return result;
}

// ------------------------------------------------------------ images

namespace {

ImagePossibility named_possibility(GroupName name, std::uint64_t p, Conditionality c, bool cm_only) {
  NamedGroupSpec spec{name, p, {}};
  return ImagePossibility{spec.label(), spec, named_generators(spec), named_order(spec), c, cm_only};
}

ImagePossibility row_possibility(const RowMatch& rm, bool cm_only) {
  if (rm.matches.empty()) {
    fail(ErrorCode::kInternal, "labelled group " + rm.row.label + " was not found in its census");
  }
  const MatGroup& G = rm.matches.front();
  return ImagePossibility{rm.row.label, std::nullopt, G.generators(), G.order(),
                          Conditionality::Unconditional, cm_only};
}

const RowMatch& row_by_label(std::uint64_t p, std::string_view label) {
  for (const auto& rm : identify_table_rows(p)) {
    if (rm.row.label == label) return rm;
  }
  fail(ErrorCode::kInternal, "no labelled row " + std::string(label));
}

}  // namespace

std::vector<ImagePossibility> noncm_possible_images(std::uint64_t p, bool assume_conjecture) {
  if (!is_prime(p)) fail(ErrorCode::kNonPrimeModulus, "p must be prime");
  constexpr auto kU = Conditionality::Unconditional;
  constexpr auto kC = Conditionality::OnlyIfConjectureFails;
  std::vector<ImagePossibility> out{named_possibility(GroupName::GL2, p, kU, false)};
  const bool tabulated = p <= 13 || p == 17 || p == 37;
  if (tabulated) {
    for (const auto& rm : identify_table_rows(p)) out.push_back(row_possibility(rm, false));
  }
  if (p == 13) {
    out.push_back(named_possibility(GroupName::CsPlus, p, kC, false));
    out.push_back(named_possibility(GroupName::CnsPlus, p, kC, false));
    std::size_t k = 0;
    for (const auto& c : prop13_census().survivors) {
      const MatGroup& G = c.representative;
      out.push_back(ImagePossibility{"applicable-13-" + std::to_string(++k), std::nullopt,
                                     G.generators(), G.order(), kC, false});
    }
  } else if (p >= 17) {
    out.push_back(named_possibility(GroupName::CnsPlus, p, kC, false));
    if (p % 3 == 2) out.push_back(named_possibility(GroupName::G0, p, kC, false));
  }
  if (assume_conjecture) {
    std::erase_if(out, [](const ImagePossibility& x) { return x.conditionality == kC; });
  }
  return out;
}

std::vector<ImagePossibility> cm_possible_images(const CMDatum& cm, std::uint64_t p) {
  const auto& pairs = rational_cm_pairs();
  if (std::find(pairs.begin(), pairs.end(), cm) == pairs.end()) {
    fail(ErrorCode::kUnknownCMPair, "(" + std::to_string(cm.D) + "," + std::to_string(cm.f) +
                                        ") is not a rational CM pair");
  }
  if (!is_prime(p)) fail(ErrorCode::kNonPrimeModulus, "p must be prime");
  constexpr auto kU = Conditionality::Unconditional;
  std::vector<ImagePossibility> out;
  auto named = [&](GroupName n) { out.push_back(named_possibility(n, p, kU, true)); };
  auto row = [&](std::string_view label) { out.push_back(row_possibility(row_by_label(p, label), true)); };
  if (p == 2) {
    named(GroupName::GL2);
    row("2B");
    row("2Cs");
    return out;
  }
  if (cm.D == 3 && cm.f == 1) {
    if (p == 3) {
      for (auto label : {"3Cs.1.1", "3Cs", "3B.1.1", "3B.1.2", "3B"}) row(label);
      return out;
    }
    switch (p % 9) {
      case 1: named(GroupName::CsPlus); break;
      case 8: named(GroupName::CnsPlus); break;
      case 4:
      case 7: named(GroupName::CsPlus); named(GroupName::G3); break;
      default: named(GroupName::CnsPlus); named(GroupName::G0); break;  // 2, 5
    }
    return out;
  }
  if (cm.D % p == 0) {
    named(GroupName::G00);
    named(GroupName::G10);
    named(GroupName::G01);
  } else if (legendre(-static_cast<std::int64_t>(cm.D), p) == 1) {
    named(GroupName::CsPlus);
  } else {
    named(GroupName::CnsPlus);
  }
  return out;
}

}  // namespace tatlas
