#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pgl2 {

/// Multiplicities of the distinct points of a d-tuple, with the power sums
/// the enumerative formulas are written in.
class MultiplicityProfile {
 public:
  MultiplicityProfile() = default;
  explicit MultiplicityProfile(std::vector<int> m) : m_(std::move(m)) {
    std::sort(m_.begin(), m_.end(), std::greater<>());
    for (int x : m_) {
      if (x < 1) throw DomainError("multiplicities must be positive");
      d_ += x;
      p2_ += std::int64_t{x} * x;
      p3_ += std::int64_t{x} * x * x;
    }
  }

  /// Sorted in decreasing order.
  const std::vector<int>& multiplicities() const { return m_; }
  int d() const { return d_; }
  int s() const { return static_cast<int>(m_.size()); }
  std::int64_t p2() const { return p2_; }
  std::int64_t p3() const { return p3_; }

  bool contains(int r) const { return std::find(m_.begin(), m_.end(), r) != m_.end(); }

  int gcd() const {
    int g = 0;
    for (int x : m_) g = std::gcd(g, x);
    return g;
  }

  std::string format() const {
    std::string out = "{";
    for (std::size_t i = 0; i < m_.size(); ++i) out += (i ? "," : "") + std::to_string(m_[i]);
    return out + "}";
  }

  friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;

 private:
  std::vector<int> m_;
  int d_ = 0;
  std::int64_t p2_ = 0;
  std::int64_t p3_ = 0;
};

/// All partitions of n, each in non-increasing order.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace pgl2
