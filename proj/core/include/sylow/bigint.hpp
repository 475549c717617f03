#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sylow {

using BigInt = boost::multiprecision::cpp_int;

/// (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Trial division. Orders in scope are at most |E8| ~ 7e8, times products
/// of small factorials, so this is never the bottleneck.
Factorization factorize(const BigInt& x);

std::vector<std::uint64_t> prime_divisors(const BigInt& x);

BigInt factorial(std::uint64_t n);
BigInt ipow(const BigInt& base, std::uint64_t exponent);

enum class FactorStyle {
  Ascii,    // 2^6*3
  Unicode,  // 2⁶·3
};

/// Renders x as a product of prime powers; "1" for x == 1.
std::string format_factored(const BigInt& x, FactorStyle style = FactorStyle::Ascii);

struct ParsedFactorization {
  BigInt value;
  /// Separators other than '*' or '·' seen while parsing (e.g. "×").
  std::vector<std::string> irregular_separators;
};

/// Parses "2^7*3^2"-style products. Accepts '*', '·' and (flagged) '×' as
/// separators. Throws ParseError on anything else.
ParsedFactorization parse_factored(std::string_view text);

}  // namespace sylow
