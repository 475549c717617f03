#include "sylow/valuation.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "sylow/errors.hpp"

namespace sylow::valuation {

Partition Partition::from_parts(std::vector<std::uint64_t> parts) {
  Partition out;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  for (auto part : parts) {
    if (part == 0) throw InvalidArgument("partition parts must be positive");
    out.n_ += part;
  }
  out.parts_ = std::move(parts);
  return out;
}

BigInt Partition::factorial_product() const {
  BigInt r = 1;
  for (auto part : parts_) r *= factorial(part);
  return r;
}

BigInt DigitExpansion::value() const {
  BigInt r = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) r = r * base + *it;
  return r;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t ell) {
  if (!is_prime(ell)) throw InvalidArgument(std::to_string(ell) + " is not prime");
}

unsigned nu(std::uint64_t ell, std::uint64_t x) {
  require_prime(ell);
  if (x == 0) throw InvalidArgument("valuation of zero is undefined");
  unsigned v = 0;
  while (x % ell == 0) {
    x /= ell;
    ++v;
  }
  return v;
}

unsigned nu(std::uint64_t ell, const BigInt& x) {
  require_prime(ell);
  if (x <= 0) throw InvalidArgument("valuation of a non-positive integer is undefined");
  BigInt rest = x;
  unsigned v = 0;
  while (rest % ell == 0) {
    rest /= ell;
    ++v;
  }
  return v;
}

std::uint64_t nu_factorial(std::uint64_t ell, std::uint64_t n) {
  require_prime(ell);
  std::uint64_t total = 0;
  while (n > 0) {
    n /= ell;
    total += n;
  }
  return total;
}

DigitExpansion base_digits(std::uint64_t ell, std::uint64_t n) {
  require_prime(ell);
  DigitExpansion out{ell, {}};
  while (n > 0) {
    out.digits.push_back(n % ell);
    n /= ell;
  }
  return out;
}

std::uint64_t kummer_carries(std::uint64_t ell, const Partition& lambda) {
  std::uint64_t parts_sum = 0;
  for (auto part : lambda.parts()) parts_sum += nu_factorial(ell, part);
  return nu_factorial(ell, lambda.n()) - parts_sum;
}

Partition minimal_factorial_partition(std::uint64_t ell, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("minimal_factorial_partition needs n >= 1");
  auto expansion = base_digits(ell, n);
  std::vector<std::uint64_t> parts;
  std::uint64_t power = 1;
  std::vector<std::uint64_t> powers;
  for (std::size_t j = 0; j < expansion.digits.size(); ++j) {
    powers.push_back(power);
    power *= ell;
  }
  for (std::size_t j = expansion.digits.size(); j-- > 0;) {
    parts.insert(parts.end(), expansion.digits[j], powers[j]);
  }
  return Partition::from_parts(std::move(parts));
}

std::uint64_t imprimitive_order_valuation(std::uint64_t m, std::uint64_t p,
                                          std::uint64_t n, std::uint64_t ell) {
  if (m == 0 || p == 0 || n == 0) throw InvalidArgument("m, p, n must be positive");
  if (m % p != 0) throw InvalidArgument("p must divide m");
  return n * nu(ell, m) - nu(ell, p) + nu_factorial(ell, n);
}

}  // namespace sylow::valuation
