#include "sylow/bigint.hpp"

#include <cctype>

#include "sylow/errors.hpp"

namespace sylow {

Factorization factorize(const BigInt& x) {
  if (x <= 0) throw InvalidArgument("factorize: argument must be positive");
  Factorization out;
  BigInt rest = x;
  for (std::uint64_t d = 2; BigInt(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (rest > 1) out.emplace_back(rest.convert_to<std::uint64_t>(), 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(const BigInt& x) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(x)) out.push_back(p);
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt r = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) r *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return r;
}

namespace {

std::string superscript(unsigned e) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴",
                                       "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(e);
  std::string out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string format_factored(const BigInt& x, FactorStyle style) {
  if (x == 1) return "1";
  std::string out;
  for (auto [p, e] : factorize(x)) {
    if (!out.empty()) out += style == FactorStyle::Ascii ? "*" : "·";
    out += std::to_string(p);
    if (e > 1) {
      out += style == FactorStyle::Ascii ? "^" + std::to_string(e) : superscript(e);
    }
  }
  return out;
}

ParsedFactorization parse_factored(std::string_view text) {
  ParsedFactorization out{1, {}};
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto read_int = [&]() -> std::uint64_t {
    skip_space();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("factorization: expected integer in '" + std::string(text) + "'");
    }
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
      ++i;
    }
    return v;
  };
  bool first = true;
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    if (!first) {
      if (text[i] == '*') {
        ++i;
      } else if (text.substr(i, 2) == "·") {
        i += 2;
      } else if (text.substr(i, 2) == "×") {
        out.irregular_separators.emplace_back("×");
        i += 2;
      } else {
        throw ParseError("factorization: unexpected separator in '" + std::string(text) + "'");
      }
    }
    std::uint64_t base = read_int();
    std::uint64_t exponent = 1;
    skip_space();
    if (i < text.size() && text[i] == '^') {
      ++i;
      exponent = read_int();
    }
    out.value *= ipow(BigInt(base), exponent);
    first = false;
  }
  if (first) throw ParseError("factorization: empty string");
  return out;
}

}  // namespace sylow
