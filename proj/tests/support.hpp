#pragma once

// Bridges between library types and the oracle's plain tuples.

#include <set>
#include <vector>

#include "oracle.hpp"
#include "tatlas/group.hpp"

namespace support {

inline oracle::M plain(const tatlas::Mat2& A) { return {A.a(), A.b(), A.c(), A.d()}; }

inline std::vector<oracle::M> plain(const std::vector<tatlas::Mat2>& v) {
  std::vector<oracle::M> out;
  for (const auto& A : v) out.push_back(plain(A));
  return out;
}

inline std::set<oracle::M> elements(const tatlas::MatGroup& G) {
  std::set<oracle::M> out;
  for (const auto& A : G.elements()) out.insert(plain(A));
  return out;
}

inline tatlas::Mat2 mat(const oracle::M& x, tatlas::Modulus m) { return tatlas::Mat2(x[0], x[1], x[2], x[3], m); }

inline oracle::M random_invertible(oracle::Rng& rng, std::int64_t m) {
  for (;;) {
    oracle::M x{rng.range(0, m - 1), rng.range(0, m - 1), rng.range(0, m - 1), rng.range(0, m - 1)};
    if (oracle::invertible(x, m)) return x;
  }
}

}  // namespace support
