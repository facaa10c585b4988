#include "tatlas/residue.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace tatlas {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) noexcept {
  if (v >= 0) return static_cast<std::uint64_t>(v) % m;
  const std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % m;
  return m - 1 - r;
}

void check_matrix_modulus(Modulus m) {
  if (m == 0 || m > kMaxMatrixModulus) {
    fail(ErrorCode::kInvalidArgument,
         "matrix modulus " + std::to_string(m) + " outside [1, 65535]");
  }
}

void check_same(std::uint64_t m1, std::uint64_t m2) {
  if (m1 != m2) {
    fail(ErrorCode::kModulusMismatch, "modulus mismatch: " + std::to_string(m1) +
                                          " vs " + std::to_string(m2));
  }
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kNonInvertible: return "NonInvertible";
    case ErrorCode::kNonDivisor: return "NonDivisor";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kNotASubgroup: return "NotASubgroup";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::kNotSolvableAndTooLarge: return "NotSolvableAndTooLarge";
    case ErrorCode::kNotSolvable: return "NotSolvable";
    case ErrorCode::kSpecViolation: return "SpecViolation";
    case ErrorCode::kUnknownCMPair: return "UnknownCMPair";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Residue

Residue::Residue(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) fail(ErrorCode::kInvalidArgument, "modulus must be positive");
  value_ = reduce_signed(value, modulus);
}

bool Residue::is_unit() const noexcept { return std::gcd(value_, modulus_) == 1; }

Residue Residue::inverse() const {
  // Extended Euclid on signed 128-bit to stay exact for any 64-bit modulus.
  __int128 r0 = static_cast<__int128>(modulus_), r1 = static_cast<__int128>(value_);
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) {
    fail(ErrorCode::kNonInvertible, std::to_string(value_) + " is not a unit mod " +
                                        std::to_string(modulus_));
  }
  __int128 m = static_cast<__int128>(modulus_);
  __int128 v = t0 % m;
  if (v < 0) v += m;
  Residue out(0, modulus_);
  out.value_ = static_cast<std::uint64_t>(v);
  return out;
}

Residue Residue::pow(std::uint64_t exponent) const {
  Residue out(0, modulus_);
  out.value_ = pow_mod(value_, exponent, modulus_);
  return out;
}

Residue operator+(const Residue& x, const Residue& y) {
  check_same(x.modulus_, y.modulus_);
  Residue out(0, x.modulus_);
  const std::uint64_t m = x.modulus_;
  out.value_ = x.value_ >= m - y.value_ ? x.value_ - (m - y.value_) : x.value_ + y.value_;
  return out;
}

Residue operator-(const Residue& x, const Residue& y) {
  check_same(x.modulus_, y.modulus_);
  Residue out(0, x.modulus_);
  out.value_ = x.value_ >= y.value_ ? x.value_ - y.value_ : x.modulus_ - (y.value_ - x.value_);
  return out;
}

Residue operator*(const Residue& x, const Residue& y) {
  check_same(x.modulus_, y.modulus_);
  Residue out(0, x.modulus_);
  out.value_ = mul_mod(x.value_, y.value_, x.modulus_);
  return out;
}

Residue Residue::operator-() const {
  Residue out(0, modulus_);
  out.value_ = value_ == 0 ? 0 : modulus_ - value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus() << ")";
}

// ---------------------------------------------------------------- Vec2

Vec2 Vec2::make(std::int64_t x, std::int64_t y, Modulus m) {
  check_matrix_modulus(m);
  return Vec2{static_cast<std::uint32_t>(reduce_signed(x, m)),
              static_cast<std::uint32_t>(reduce_signed(y, m)), m};
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
  return os << "(" << v.x << "," << v.y << ")";
}

// ---------------------------------------------------------------- Mat2

Mat2::Mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, Modulus m)
    : m_(m) {
  check_matrix_modulus(m);
  e_[0] = static_cast<std::uint32_t>(reduce_signed(a, m));
  e_[1] = static_cast<std::uint32_t>(reduce_signed(b, m));
  e_[2] = static_cast<std::uint32_t>(reduce_signed(c, m));
  e_[3] = static_cast<std::uint32_t>(reduce_signed(d, m));
}

Mat2 Mat2::identity(Modulus m) { return Mat2(1, 0, 0, 1, m); }

Mat2 Mat2::scalar(std::int64_t s, Modulus m) { return Mat2(s, 0, 0, s, m); }

Mat2 Mat2::from_key(std::uint64_t key, Modulus m) noexcept {
  Mat2 r;
  r.m_ = m;
  r.e_[0] = static_cast<std::uint32_t>((key >> 48) & 0xFFFF);
  r.e_[1] = static_cast<std::uint32_t>((key >> 32) & 0xFFFF);
  r.e_[2] = static_cast<std::uint32_t>((key >> 16) & 0xFFFF);
  r.e_[3] = static_cast<std::uint32_t>(key & 0xFFFF);
  return r;
}

Mat2 Mat2::inverse_unchecked() const {
  const std::uint64_t m = m_;
  const std::uint64_t inv = Residue(det_value(), m).inverse().value();
  Mat2 r;
  r.m_ = m_;
  r.e_[0] = static_cast<std::uint32_t>(e_[3] * inv % m);
  r.e_[1] = static_cast<std::uint32_t>((m - e_[1]) % m * inv % m);
  r.e_[2] = static_cast<std::uint32_t>((m - e_[2]) % m * inv % m);
  r.e_[3] = static_cast<std::uint32_t>(e_[0] * inv % m);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Mat2& A) {
  return os << "[[" << A.a() << "," << A.b() << "],[" << A.c() << "," << A.d()
            << "]] mod " << A.modulus();
}

std::string to_string(const Mat2& A) {
  std::ostringstream os;
  os << A;
  return os.str();
}

Mat2 mat_mul(const Mat2& A, const Mat2& B) {
  check_same(A.modulus(), B.modulus());
  return A.mul_unchecked(B);
}

Residue mat_det(const Mat2& A) { return Residue(A.det_value(), A.modulus()); }

Residue mat_trace(const Mat2& A) {
  return Residue(std::int64_t{A.a()} + A.d(), A.modulus());
}

bool is_invertible(const Mat2& A) noexcept {
  return std::gcd(A.det_value(), A.modulus()) == 1;
}

Mat2 mat_inv(const Mat2& A) {
  if (!is_invertible(A)) {
    fail(ErrorCode::kNonInvertible, "matrix " + to_string(A) + " is not invertible");
  }
  return A.inverse_unchecked();
}

Mat2 mat_pow(const Mat2& A, std::uint64_t exponent) {
  Mat2 result = Mat2::identity(A.modulus());
  Mat2 base = A;
  while (exponent > 0) {
    if (exponent & 1) result = result.mul_unchecked(base);
    base = base.mul_unchecked(base);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t element_order(const Mat2& A) {
  if (!is_invertible(A)) {
    fail(ErrorCode::kNonInvertible, "element_order of singular " + to_string(A));
  }
  std::uint64_t k = 1;
  Mat2 power = A;
  while (!power.is_identity()) {
    power = power.mul_unchecked(A);
    ++k;
  }
  return k;
}

Vec2 apply(const Mat2& A, const Vec2& v) {
  check_same(A.modulus(), v.m);
  return A.apply_unchecked(v);
}

Mat2 reduce_mat(const Mat2& A, Modulus new_modulus) {
  if (new_modulus == 0 || A.modulus() % new_modulus != 0) {
    fail(ErrorCode::kNonDivisor, std::to_string(new_modulus) + " does not divide " +
                                     std::to_string(A.modulus()));
  }
  return Mat2(A.a(), A.b(), A.c(), A.d(), new_modulus);
}

Vec2 reduce_vec(const Vec2& v, Modulus new_modulus) {
  if (new_modulus == 0 || v.m % new_modulus != 0) {
    fail(ErrorCode::kNonDivisor, std::to_string(new_modulus) + " does not divide " +
                                     std::to_string(v.m));
  }
  return Vec2{v.x % new_modulus, v.y % new_modulus, new_modulus};
}

std::uint64_t additive_order(const Vec2& v) noexcept {
  // order of x in Z/m is m / gcd(x, m); the pair has the lcm of both.
  const std::uint64_t g = std::gcd(std::gcd<std::uint64_t>(v.x, v.y), v.m);
  return v.m / g;
}

std::vector<Vec2> vectors_of_order(Modulus m, std::uint64_t n) {
  check_matrix_modulus(m);
  std::vector<Vec2> out;
  if (n == 0 || m % n != 0) return out;
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      const Vec2 v{x, y, m};
      if (additive_order(v) == n) out.push_back(v);
    }
  }
  return out;
}

Mat2 diag(std::int64_t a, std::int64_t b, Modulus m) { return Mat2(a, 0, 0, b, m); }

Mat2 cartan_ns(std::int64_t a, std::int64_t b, std::int64_t eps, Modulus m) {
  return Mat2(a, b * eps, b, a, m);
}

Mat2 swap_matrix(Modulus m) { return Mat2(0, 1, 1, 0, m); }

Mat2 reflection_matrix(Modulus m) { return Mat2(1, 0, 0, -1, m); }

// ---------------------------------------------------------------- number theory

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(std::uint64_t n) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "no primitive root mod " + std::to_string(n));
  if (n == 2) return 1;
  // phi(n) for the prime-power cases we support.
  const auto ps = prime_factors(n);
  std::uint64_t phi = n;
  for (auto p : ps) phi = phi / p * (p - 1);
  const auto qs = prime_factors(phi);
  for (std::uint64_t g = 2; g < n; ++g) {
    if (std::gcd(g, n) != 1) continue;
    bool ok = true;
    for (auto q : qs) {
      if (pow_mod(g, phi / q, n) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(ErrorCode::kInvalidArgument, "no primitive root mod " + std::to_string(n));
}

}  // namespace tatlas
