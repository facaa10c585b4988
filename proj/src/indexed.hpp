#pragma once

// Ambient group with elements addressed by their rank in key order. Products,
// inverses and membership become array lookups.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tatlas/group.hpp"

namespace tatlas::detail {

class IndexedGroup {
 public:
  static constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;

  explicit IndexedGroup(const MatGroup& G) : G_(G), m_(G.modulus()) {
    const auto& el = G.elements();
    n_ = el.size();
    const std::uint64_t m = m_;
    dense_ = m * m * m * m <= (std::uint64_t{1} << 23);
    if (dense_) {
      dense_index_.assign(m * m * m * m, kAbsent);
    } else {
      sparse_index_.reserve(n_ * 2);
    }
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (dense_) {
        dense_index_[flat(el[i])] = i;
      } else {
        sparse_index_.emplace(el[i].key(), i);
      }
    }
    identity_ = find(Mat2::identity(m_));
    inverse_.resize(n_);
    order_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) inverse_[i] = find(el[i].inverse_unchecked());
    for (std::uint32_t i = 0; i < n_; ++i) {
      std::uint32_t k = 1;
      Mat2 x = el[i];
      while (!x.is_identity()) {
        x = x.mul_unchecked(el[i]);
        ++k;
      }
      order_[i] = k;
    }
    if (n_ <= 2048) {
      table_.resize(n_ * n_);
      for (std::uint32_t i = 0; i < n_; ++i) {
        for (std::uint32_t j = 0; j < n_; ++j) table_[std::size_t{i} * n_ + j] = find(el[i].mul_unchecked(el[j]));
      }
    }
    for (const auto& g : G.generators()) gens_.push_back(find(g));
  }

  std::size_t size() const noexcept { return n_; }
  Modulus modulus() const noexcept { return m_; }
  const MatGroup& group() const noexcept { return G_; }
  const Mat2& element(std::uint32_t i) const noexcept { return G_.elements()[i]; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t inv(std::uint32_t i) const noexcept { return inverse_[i]; }
  std::uint32_t order_of(std::uint32_t i) const noexcept { return order_[i]; }
  const std::vector<std::uint32_t>& generators() const noexcept { return gens_; }

  std::uint32_t find(const Mat2& A) const {
    if (dense_) return dense_index_[flat(A)];
    auto it = sparse_index_.find(A.key());
    return it == sparse_index_.end() ? kAbsent : it->second;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[std::size_t{a} * n_ + b];
    return find(element(a).mul_unchecked(element(b)));
  }
  /// g x g^-1
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const { return mul(mul(g, x), inverse_[g]); }

 private:
  std::size_t flat(const Mat2& A) const noexcept {
    const std::size_t m = m_;
    return ((std::size_t{A.a()} * m + A.b()) * m + A.c()) * m + A.d();
  }

  const MatGroup& G_;
  Modulus m_;
  std::size_t n_ = 0;
  bool dense_ = false;
  std::vector<std::uint32_t> dense_index_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_index_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> gens_;
};

/// Order-independent 128-bit hash of an element set.
struct SetHash {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const SetHash&, const SetHash&) = default;
};

inline std::uint64_t splitmix(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

template <class Range>
SetHash set_hash(const Range& values) {
  SetHash h;
  std::uint64_t count = 0;
  for (std::uint64_t v : values) {
    h.lo += splitmix(v);
    h.hi += splitmix(v ^ 0xD6E8FEB86659FD93ULL);
    ++count;
  }
  h.hi ^= count * 0xA24BAED4963EE407ULL;
  return h;
}

struct SetHashHasher {
  std::size_t operator()(const SetHash& h) const noexcept {
    return static_cast<std::size_t>(h.lo ^ (h.hi * 0x9E3779B97F4A7C15ULL));
  }
};

}  // namespace tatlas::detail
