#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace testing_oracle {

// Calls f on every partition of n, parts in decreasing order.
inline void for_each_partition(std::uint64_t n,
                               const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  std::vector<std::uint64_t> parts;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t left,
                                                              std::uint64_t cap) {
    if (left == 0) {
      f(parts);
      return;
    }
    for (std::uint64_t k = std::min(left, cap); k >= 1; --k) {
      parts.push_back(k);
      rec(left - k, k);
      parts.pop_back();
    }
  };
  rec(n, n);
}

// Carries when adding the parts one at a time in base ell, digit by digit.
inline std::uint64_t literal_carries(std::uint64_t ell, const std::vector<std::uint64_t>& parts) {
  std::uint64_t carries = 0;
  std::uint64_t acc = 0;
  for (auto x : parts) {
    std::uint64_t a = acc;
    std::uint64_t b = x;
    std::uint64_t carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
      const auto s = a % ell + b % ell + carry;
      carry = s >= ell ? 1 : 0;
      carries += carry;
      a /= ell;
      b /= ell;
    }
    acc += x;
  }
  return carries;
}

}  // namespace testing_oracle
