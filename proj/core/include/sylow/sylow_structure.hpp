#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/group_model.hpp"

/// Isomorphism types of ell-Sylow subgroups.
namespace sylow {

/// A normalised isomorphism-type expression. Construct through the static
/// factories, which drop trivial factors, unwrap singleton products,
/// flatten nested direct products, and rewrite W(l,1) as C_l.
class StructureTerm {
 public:
  enum class Kind {
    Trivial,
    Cyclic,
    ElementaryAbelian,
    IteratedWreath,
    DiagonalPart,
    DirectProduct,
    SemidirectProduct,
    Named,
  };
  enum class NamedTag { Q8, SD16, Sp4_3_Sylow3, Q8xQ8_swap };

  static StructureTerm trivial();
  static StructureTerm cyclic(std::uint64_t order);
  static StructureTerm elementary_abelian(std::uint64_t ell, std::uint64_t rank);
  /// depth-fold wreath tower of C_ell: the ell-Sylow subgroup of Sym(ell^depth).
  static StructureTerm iterated_wreath(std::uint64_t ell, std::uint64_t depth);
  /// A(m,p,n): diagonal matrices of G(m,p,n), order m^n / p.
  static StructureTerm diagonal_part(std::uint64_t m, std::uint64_t p, std::uint64_t n);
  static StructureTerm direct_product(std::vector<StructureTerm> factors);
  static StructureTerm semidirect(StructureTerm normal, StructureTerm acting, std::string note);
  static StructureTerm named(NamedTag tag);

  StructureTerm() = default;

  Kind kind() const { return kind_; }
  /// Cyclic: order. ElementaryAbelian / IteratedWreath: ell. DiagonalPart: m.
  std::uint64_t first() const { return a_; }
  /// ElementaryAbelian: rank. IteratedWreath: depth. DiagonalPart: p.
  std::uint64_t second() const { return b_; }
  /// DiagonalPart: n.
  std::uint64_t third() const { return c_; }
  NamedTag tag() const { return tag_; }
  const std::vector<StructureTerm>& children() const { return children_; }
  const std::string& note() const { return note_; }

  /// Named terms with a known decomposition are rewritten as products;
  /// everything else is returned unchanged.
  StructureTerm expand() const;

  /// "C2 × W(2,2)", "A(9,3,2):sd:C3", "SD16", "(Q8 × Q8):sd:C2".
  std::string to_string() const;

  friend bool operator==(const StructureTerm&, const StructureTerm&) = default;

 private:
  Kind kind_ = Kind::Trivial;
  std::uint64_t a_ = 0;
  std::uint64_t b_ = 0;
  std::uint64_t c_ = 0;
  NamedTag tag_ = NamedTag::Q8;
  std::vector<StructureTerm> children_;
  std::string note_;
};

BigInt structure_order(const StructureTerm& t);

/// prod_i W(ell, i)^{a_i} over the base-ell digits a_i of n.
StructureTerm sylow_symmetric(std::uint64_t n, std::uint64_t ell);

/// Sylow type of a supercuspidal case directly, or of R_ell recursively.
/// Throws NotADivisor if ell does not divide |g|, Unsupported if the
/// reduction does not terminate in a known case.
StructureTerm sylow_structure(const GroupType& g, std::uint64_t ell);

}  // namespace sylow
