#pragma once

// Exact arithmetic for residues, 2x2 matrices and column vectors over Z/mZ.
//
// Every value carries its modulus. Operations between values of different
// moduli throw AtlasError(kModulusMismatch) instead of silently reducing.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "tatlas/error.hpp"

namespace tatlas {

using Modulus = std::uint32_t;

/// Largest modulus accepted for matrices and vectors. Entries are packed into
/// 16-bit lanes for hashing and canonical ordering.
inline constexpr Modulus kMaxMatrixModulus = 0xFFFF;

class Residue {
 public:
  Residue(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  bool is_unit() const noexcept;
  Residue inverse() const;
  Residue pow(std::uint64_t exponent) const;

  friend Residue operator+(const Residue& x, const Residue& y);
  friend Residue operator-(const Residue& x, const Residue& y);
  friend Residue operator*(const Residue& x, const Residue& y);
  Residue operator-() const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

struct Vec2 {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  Modulus m = 1;

  static Vec2 make(std::int64_t x, std::int64_t y, Modulus m);

  Residue rx() const { return Residue(x, m); }
  Residue ry() const { return Residue(y, m); }

  /// Dense index in [0, m^2), row-major on (x, y). Matches canonical order.
  std::uint32_t index() const noexcept { return x * m + y; }
  static Vec2 from_index(std::uint32_t idx, Modulus m) noexcept {
    return Vec2{idx / m, idx % m, m};
  }

  bool is_zero() const noexcept { return x == 0 && y == 0; }

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2& u, const Vec2& v) {
    return std::tie(u.m, u.x, u.y) <=> std::tie(v.m, v.x, v.y);
  }
};

std::ostream& operator<<(std::ostream& os, const Vec2& v);

/// 2x2 matrix [[a, b], [c, d]] over Z/mZ, entries stored reduced.
class Mat2 {
 public:
  Mat2() = default;
  /// Reduces each entry into [0, m).
  Mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
       Modulus m);

  static Mat2 identity(Modulus m);
  static Mat2 scalar(std::int64_t s, Modulus m);
  /// Inverse of key(): unpacks four 16-bit lanes.
  static Mat2 from_key(std::uint64_t key, Modulus m) noexcept;

  std::uint32_t a() const noexcept { return e_[0]; }
  std::uint32_t b() const noexcept { return e_[1]; }
  std::uint32_t c() const noexcept { return e_[2]; }
  std::uint32_t d() const noexcept { return e_[3]; }
  Modulus modulus() const noexcept { return m_; }
  const std::array<std::uint32_t, 4>& entries() const noexcept { return e_; }

  Residue entry(int i) const { return Residue(e_.at(i), m_); }

  /// Big-endian packing of the entries; numeric order equals the
  /// lexicographic order on (a, b, c, d).
  std::uint64_t key() const noexcept {
    return (std::uint64_t{e_[0]} << 48) | (std::uint64_t{e_[1]} << 32) |
           (std::uint64_t{e_[2]} << 16) | std::uint64_t{e_[3]};
  }

  bool is_identity() const noexcept {
    return e_[0] == 1 % m_ && e_[1] == 0 && e_[2] == 0 && e_[3] == 1 % m_;
  }

  /// Product without modulus checks; callers guarantee equal moduli.
  Mat2 mul_unchecked(const Mat2& o) const noexcept {
    const std::uint64_t m = m_;
    Mat2 r;
    r.m_ = m_;
    r.e_[0] = static_cast<std::uint32_t>((std::uint64_t{e_[0]} * o.e_[0] + std::uint64_t{e_[1]} * o.e_[2]) % m);
    r.e_[1] = static_cast<std::uint32_t>((std::uint64_t{e_[0]} * o.e_[1] + std::uint64_t{e_[1]} * o.e_[3]) % m);
    r.e_[2] = static_cast<std::uint32_t>((std::uint64_t{e_[2]} * o.e_[0] + std::uint64_t{e_[3]} * o.e_[2]) % m);
    r.e_[3] = static_cast<std::uint32_t>((std::uint64_t{e_[2]} * o.e_[1] + std::uint64_t{e_[3]} * o.e_[3]) % m);
    return r;
  }

  /// A * v for a column vector v, no modulus checks.
  Vec2 apply_unchecked(const Vec2& v) const noexcept {
    const std::uint64_t m = m_;
    return Vec2{static_cast<std::uint32_t>((std::uint64_t{e_[0]} * v.x + std::uint64_t{e_[1]} * v.y) % m),
                static_cast<std::uint32_t>((std::uint64_t{e_[2]} * v.x + std::uint64_t{e_[3]} * v.y) % m),
                m_};
  }

  std::uint32_t det_value() const noexcept {
    const std::uint64_t m = m_;
    const std::uint64_t ad = std::uint64_t{e_[0]} * e_[3] % m;
    const std::uint64_t bc = std::uint64_t{e_[1]} * e_[2] % m;
    return static_cast<std::uint32_t>((ad + m - bc) % m);
  }

  /// Inverse assuming det is a unit; no checks.
  Mat2 inverse_unchecked() const;

  friend bool operator==(const Mat2& x, const Mat2& y) noexcept {
    return x.m_ == y.m_ && x.e_ == y.e_;
  }
  friend bool operator<(const Mat2& x, const Mat2& y) noexcept {
    return x.m_ != y.m_ ? x.m_ < y.m_ : x.key() < y.key();
  }

 private:
  std::array<std::uint32_t, 4> e_{0, 0, 0, 0};
  Modulus m_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Mat2& A);
std::string to_string(const Mat2& A);

Mat2 mat_mul(const Mat2& A, const Mat2& B);
inline Mat2 operator*(const Mat2& A, const Mat2& B) { return mat_mul(A, B); }
Residue mat_det(const Mat2& A);
Residue mat_trace(const Mat2& A);
bool is_invertible(const Mat2& A) noexcept;
Mat2 mat_inv(const Mat2& A);
Mat2 mat_pow(const Mat2& A, std::uint64_t exponent);
/// Least k >= 1 with A^k = I.
std::uint64_t element_order(const Mat2& A);

Vec2 apply(const Mat2& A, const Vec2& v);

Mat2 reduce_mat(const Mat2& A, Modulus new_modulus);
Vec2 reduce_vec(const Vec2& v, Modulus new_modulus);

/// Additive order of v in (Z/mZ)^2.
std::uint64_t additive_order(const Vec2& v) noexcept;

/// All vectors of exact additive order n in (Z/mZ)^2, in canonical order.
std::vector<Vec2> vectors_of_order(Modulus m, std::uint64_t n);

// Matrices named in the Cartan-subgroup definitions.
Mat2 diag(std::int64_t a, std::int64_t b, Modulus m);             // D(a,b)
Mat2 cartan_ns(std::int64_t a, std::int64_t b, std::int64_t eps,
               Modulus m);                                        // M_eps(a,b)
Mat2 swap_matrix(Modulus m);                                      // T
Mat2 reflection_matrix(Modulus m);                                // J

// Small number-theory helpers shared across modules.
bool is_prime(std::uint64_t n) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;
/// Least primitive root modulo an odd prime power or 2, 4.
std::uint64_t primitive_root(std::uint64_t p);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace tatlas
