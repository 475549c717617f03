#include "sylow/sylow_structure.hpp"

#include <optional>

#include "sylow/classifier.hpp"
#include "sylow/errors.hpp"
#include "sylow/valuation.hpp"

namespace sylow {
namespace {

std::uint64_t upow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

bool needs_parens(const StructureTerm& t) {
  return t.kind() == StructureTerm::Kind::DirectProduct ||
         t.kind() == StructureTerm::Kind::SemidirectProduct ||
         (t.kind() == StructureTerm::Kind::Named &&
          t.tag() == StructureTerm::NamedTag::Q8xQ8_swap);
}

std::string wrapped(const StructureTerm& t) {
  return needs_parens(t) ? "(" + t.to_string() + ")" : t.to_string();
}

constexpr const char* kCoordinateAction = "permuting coordinates";

}  // namespace

StructureTerm StructureTerm::trivial() { return StructureTerm{}; }

StructureTerm StructureTerm::cyclic(std::uint64_t order) {
  if (order == 0) throw InvalidArgument("cyclic group of order 0");
  StructureTerm t;
  if (order == 1) return t;
  t.kind_ = Kind::Cyclic;
  t.a_ = order;
  return t;
}

StructureTerm StructureTerm::elementary_abelian(std::uint64_t ell, std::uint64_t rank) {
  valuation::require_prime(ell);
  if (rank == 0) return trivial();
  if (rank == 1) return cyclic(ell);
  StructureTerm t;
  t.kind_ = Kind::ElementaryAbelian;
  t.a_ = ell;
  t.b_ = rank;
  return t;
}

StructureTerm StructureTerm::iterated_wreath(std::uint64_t ell, std::uint64_t depth) {
  valuation::require_prime(ell);
  if (depth == 0) return trivial();
  if (depth == 1) return cyclic(ell);
  StructureTerm t;
  t.kind_ = Kind::IteratedWreath;
  t.a_ = ell;
  t.b_ = depth;
  return t;
}

StructureTerm StructureTerm::diagonal_part(std::uint64_t m, std::uint64_t p, std::uint64_t n) {
  if (m == 0 || p == 0 || n == 0 || m % p != 0) {
    throw InvalidArgument("A(m,p,n) needs p | m and n >= 1");
  }
  if (n == 1) return cyclic(m / p);
  if (m == 1) return trivial();
  StructureTerm t;
  t.kind_ = Kind::DiagonalPart;
  t.a_ = m;
  t.b_ = p;
  t.c_ = n;
  return t;
}

StructureTerm StructureTerm::direct_product(std::vector<StructureTerm> factors) {
  std::vector<StructureTerm> flat;
  for (auto& f : factors) {
    if (f.kind_ == Kind::Trivial) continue;
    if (f.kind_ == Kind::DirectProduct) {
      for (auto& inner : f.children_) flat.push_back(std::move(inner));
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return trivial();
  if (flat.size() == 1) return std::move(flat.front());
  StructureTerm t;
  t.kind_ = Kind::DirectProduct;
  t.children_ = std::move(flat);
  return t;
}

StructureTerm StructureTerm::semidirect(StructureTerm normal, StructureTerm acting,
                                        std::string note) {
  if (acting.kind_ == Kind::Trivial) return normal;
  if (normal.kind_ == Kind::Trivial) return acting;
  StructureTerm t;
  t.kind_ = Kind::SemidirectProduct;
  t.children_.push_back(std::move(normal));
  t.children_.push_back(std::move(acting));
  t.note_ = std::move(note);
  return t;
}

StructureTerm StructureTerm::named(NamedTag tag) {
  StructureTerm t;
  t.kind_ = Kind::Named;
  t.tag_ = tag;
  return t;
}

StructureTerm StructureTerm::expand() const {
  if (kind_ != Kind::Named) return *this;
  switch (tag_) {
    case NamedTag::Sp4_3_Sylow3:
      return semidirect(elementary_abelian(3, 3), cyclic(3), "Sylow 3-subgroup of Sp4(3)");
    case NamedTag::Q8xQ8_swap:
      return semidirect(direct_product({named(NamedTag::Q8), named(NamedTag::Q8)}), cyclic(2),
                        "swapping the factors");
    default:
      return *this;
  }
}

std::string StructureTerm::to_string() const {
  switch (kind_) {
    case Kind::Trivial:
      return "1";
    case Kind::Cyclic:
      return "C" + std::to_string(a_);
    case Kind::ElementaryAbelian:
      return "E(" + std::to_string(a_) + "^" + std::to_string(b_) + ")";
    case Kind::IteratedWreath:
      return "W(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
    case Kind::DiagonalPart:
      return "A(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + ")";
    case Kind::DirectProduct: {
      std::string out;
      for (std::size_t i = 0; i < children_.size();) {
        std::size_t j = i;
        while (j < children_.size() && children_[j] == children_[i]) ++j;
        if (!out.empty()) out += " × ";
        out += j - i > 1 ? wrapped(children_[i]) + "^" + std::to_string(j - i)
                         : wrapped(children_[i]);
        i = j;
      }
      return out;
    }
    case Kind::SemidirectProduct:
      return wrapped(children_[0]) + ":sd:" + wrapped(children_[1]);
    case Kind::Named:
      switch (tag_) {
        case NamedTag::Q8: return "Q8";
        case NamedTag::SD16: return "SD16";
        case NamedTag::Sp4_3_Sylow3: return "Syl3(Sp4(3))";
        case NamedTag::Q8xQ8_swap: return "(Q8 × Q8):sd:C2";
      }
  }
  return "?";
}

BigInt structure_order(const StructureTerm& t) {
  using Kind = StructureTerm::Kind;
  switch (t.kind()) {
    case Kind::Trivial:
      return 1;
    case Kind::Cyclic:
      return t.first();
    case Kind::ElementaryAbelian:
      return ipow(t.first(), t.second());
    case Kind::IteratedWreath: {
      const auto ell = t.first();
      return ipow(ell, (upow(ell, t.second()) - 1) / (ell - 1));
    }
    case Kind::DiagonalPart:
      return ipow(t.first(), t.third()) / t.second();
    case Kind::DirectProduct:
    case Kind::SemidirectProduct: {
      BigInt r = 1;
      for (const auto& c : t.children()) r *= structure_order(c);
      return r;
    }
    case Kind::Named:
      switch (t.tag()) {
        case StructureTerm::NamedTag::Q8: return 8;
        case StructureTerm::NamedTag::SD16: return 16;
        case StructureTerm::NamedTag::Sp4_3_Sylow3: return 81;
        case StructureTerm::NamedTag::Q8xQ8_swap: return 128;
      }
  }
  return 1;
}

StructureTerm sylow_symmetric(std::uint64_t n, std::uint64_t ell) {
  auto digits = valuation::base_digits(ell, n);
  std::vector<StructureTerm> factors;
  for (std::size_t i = 1; i < digits.digits.size(); ++i) {
    for (std::uint64_t c = 0; c < digits.digits[i]; ++c) {
      factors.push_back(StructureTerm::iterated_wreath(ell, i));
    }
  }
  return StructureTerm::direct_product(std::move(factors));
}

namespace {

std::optional<StructureTerm> exceptional_supercuspidal(unsigned st, std::uint64_t ell) {
  using T = StructureTerm;
  using Tag = StructureTerm::NamedTag;
  switch (st) {
    case 4:
      if (ell == 2) return T::named(Tag::Q8);
      break;
    case 8:
      if (ell == 3) return T::cyclic(3);
      break;
    case 12:
      if (ell == 2) return T::named(Tag::SD16);
      break;
    case 16:
      if (ell == 2) return T::named(Tag::Q8);
      if (ell == 3) return T::cyclic(3);
      break;
    case 20:
      if (ell == 5) return T::cyclic(5);
      break;
    case 24:
      if (ell == 7) return T::cyclic(7);
      break;
    case 25:
    case 35:
      if (ell == 3) return T::named(Tag::Sp4_3_Sylow3);
      break;
    case 32:
      if (ell == 2) {
        return T::semidirect(T::direct_product({T::named(Tag::Q8), T::named(Tag::Q8)}),
                             T::cyclic(2), "swapping the factors");
      }
      if (ell == 5) return T::cyclic(5);
      break;
    default:
      break;
  }
  return std::nullopt;
}

StructureTerm irreducible_sylow(const GroupType& g, std::uint64_t ell) {
  if (g.is_imprimitive()) {
    const auto& a = g.imprimitive_params();
    if (a.n == 1) return StructureTerm::cyclic(upow(ell, valuation::nu(ell, a.m)));
    if (a.m == 1 || a.m % ell != 0) return sylow_symmetric(a.n, ell);
    if (is_supercuspidal(g, ell)) {
      return StructureTerm::semidirect(StructureTerm::diagonal_part(a.m, a.p, a.n),
                                       sylow_symmetric(a.n, ell), kCoordinateAction);
    }
  } else if (auto named = exceptional_supercuspidal(g.shephard_todd(), ell)) {
    return *named;
  }
  auto r = classify_reflection(g, ell);
  const auto& member = r.members.front().type;
  if (member == g) {
    throw Unsupported("no Sylow description for " + g.to_string() + " at ell=" +
                      std::to_string(ell));
  }
  return sylow_structure(member, ell);
}

}  // namespace

StructureTerm sylow_structure(const GroupType& g, std::uint64_t ell) {
  valuation::require_prime(ell);
  if (g.order() % ell != 0) {
    throw NotADivisor(std::to_string(ell) + " does not divide |" + g.to_string() + "|");
  }
  std::vector<StructureTerm> parts;
  for (const auto& c : g.components()) {
    if (c.order() % ell == 0) parts.push_back(irreducible_sylow(c, ell));
  }
  return StructureTerm::direct_product(std::move(parts));
}

}  // namespace sylow
