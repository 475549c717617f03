#pragma once

#include <cstdint>
#include <vector>

#include "sylow/bigint.hpp"

/// Exact ell-adic arithmetic: valuations, base-ell digits, Kummer carries and
/// the smallest carry-free factorial partition.
namespace sylow::valuation {

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;

  /// Sorts `parts` into decreasing order; throws InvalidArgument on a zero part.
  static Partition from_parts(std::vector<std::uint64_t> parts);

  const std::vector<std::uint64_t>& parts() const { return parts_; }
  std::uint64_t n() const { return n_; }
  std::size_t length() const { return parts_.size(); }

  /// Product of parts[i]!.
  BigInt factorial_product() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint64_t> parts_;
  std::uint64_t n_ = 0;
};

struct DigitExpansion {
  std::uint64_t base = 2;
  /// Least significant first; empty for the value 0.
  std::vector<std::uint64_t> digits;

  BigInt value() const;
  /// Digit at position i, zero beyond the top.
  std::uint64_t digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
};

bool is_prime(std::uint64_t x);

/// Throws InvalidArgument unless ell is prime.
void require_prime(std::uint64_t ell);

/// Largest v with ell^v | x.
unsigned nu(std::uint64_t ell, std::uint64_t x);
unsigned nu(std::uint64_t ell, const BigInt& x);

/// nu(ell, n!) by Legendre's sum; nu_factorial(ell, 0) == 0.
std::uint64_t nu_factorial(std::uint64_t ell, std::uint64_t n);

DigitExpansion base_digits(std::uint64_t ell, std::uint64_t n);

/// nu(n!) - sum nu(lambda_i!), which by Kummer equals the number of carries
/// when adding the parts in base ell.
std::uint64_t kummer_carries(std::uint64_t ell, const Partition& lambda);

/// Join over the base-ell digits b_j of n of b_j copies of ell^j. Parts equal
/// to 1 (the b_0 tail) are kept so that the parts always sum to n.
Partition minimal_factorial_partition(std::uint64_t ell, std::uint64_t n);

/// nu(ell, m^n n!/p) = n nu(m) - nu(p) + nu(n!).
std::uint64_t imprimitive_order_valuation(std::uint64_t m, std::uint64_t p,
                                          std::uint64_t n, std::uint64_t ell);

}  // namespace sylow::valuation
