#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sylow/bigint.hpp"

/// Symbolic unitary reflection groups and the labels of their reflection
/// subgroup classes.
namespace sylow {

struct ImprimitiveParams {
  std::uint64_t m = 1;
  std::uint64_t p = 1;
  std::uint64_t n = 1;

  BigInt order() const;
  friend auto operator<=>(const ImprimitiveParams&, const ImprimitiveParams&) = default;
};

/// One of: G(m,p,n) (which also covers the cyclic groups G(m,1,1) and the
/// symmetric groups G(1,1,n)), an exceptional group G_4..G_37, or a direct
/// product of irreducible factors.
class GroupType {
 public:
  enum class Kind { Imprimitive, Exceptional, Product };

  /// Validates p | m and canonicalises G(m,p,1) to G(m/p,1,1).
  static GroupType imprimitive(std::uint64_t m, std::uint64_t p, std::uint64_t n);
  static GroupType cyclic(std::uint64_t m) { return imprimitive(m, 1, 1); }
  static GroupType symmetric(std::uint64_t n) { return imprimitive(1, 1, n); }
  static GroupType exceptional(unsigned shephard_todd);
  /// Flattens nested products; a single factor is returned unwrapped.
  static GroupType product(std::vector<GroupType> factors);
  /// As product(), but drops trivial factors first. The empty product is G(1,1,1).
  static GroupType product_nontrivial(std::vector<GroupType> factors);

  GroupType() : GroupType(imprimitive(1, 1, 1)) {}

  Kind kind() const;
  bool is_imprimitive() const { return kind() == Kind::Imprimitive; }
  bool is_exceptional() const { return kind() == Kind::Exceptional; }
  bool is_product() const { return kind() == Kind::Product; }
  bool is_trivial() const;

  const ImprimitiveParams& imprimitive_params() const;
  unsigned shephard_todd() const;
  const std::vector<GroupType>& factors() const;

  /// Irreducible factors; a non-product yields itself.
  std::vector<GroupType> components() const;

  BigInt order() const;

  /// "G(4,2,3)", "G26", "G(1,1,3)^2 × G(2,1,2)".
  std::string to_string() const;

  friend bool operator==(const GroupType&, const GroupType&) = default;
  friend std::strong_ordering operator<=>(const GroupType& a, const GroupType& b);

 private:
  struct Exceptional {
    unsigned st;
    friend auto operator<=>(const Exceptional&, const Exceptional&) = default;
  };
  using Rep = std::variant<ImprimitiveParams, Exceptional, std::vector<GroupType>>;

  explicit GroupType(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

/// |G_k| for k in 4..37.
BigInt exceptional_order(unsigned shephard_todd);

/// Classical name of an exceptional group ("H3", "M3", ...), empty if none.
std::string_view exceptional_name(unsigned shephard_todd);

/// Parses a group spec: "G(m,p,n)", "G<k>" (4 <= k <= 37), classical aliases
/// (A5, B3, B3(3), D4(3), H3, H4, F4, E6-E8, L1-L4, M3, J3(4), J3(5), K5, K6,
/// N4, O4), "^k" powers and "×"/"x" separated products.
GroupType parse_group_spec(std::string_view spec);

struct FeasibleTriple {
  std::uint64_t m = 1;
  std::uint64_t p = 1;
  std::uint64_t n = 1;

  friend bool operator==(const FeasibleTriple&, const FeasibleTriple&) = default;
  std::string to_string() const;
};

/// Order used for augmented partitions: larger n first, then larger m, then
/// larger p. `greater` means a ranks before b.
std::strong_ordering triple_compare(const FeasibleTriple& a, const FeasibleTriple& b);

/// n' <= n, p' | m', m' | m and (m'/p') | (m/p).
bool is_feasible(const FeasibleTriple& t, const ImprimitiveParams& ambient);

/// A decreasing sequence of feasible triples whose ranks partition n.
class AugmentedPartition {
 public:
  /// Sorts the triples and validates feasibility and the partition sum.
  static AugmentedPartition make(std::vector<FeasibleTriple> triples,
                                 const ImprimitiveParams& ambient);

  const std::vector<FeasibleTriple>& triples() const { return triples_; }
  const ImprimitiveParams& ambient() const { return ambient_; }

  /// Triples with (m',p',1) rewritten to (m'/p',1,1), re-sorted. Two labels
  /// describe the same subgroup type iff their normalized triples agree.
  std::vector<FeasibleTriple> normalized_triples() const;

  std::string to_string() const;

  friend bool operator==(const AugmentedPartition&, const AugmentedPartition&) = default;

 private:
  std::vector<FeasibleTriple> triples_;
  ImprimitiveParams ambient_;
};

/// k = m / gcd(p, n_1..n_d, m/m_1..m/m_d); twists alpha, beta give conjugate
/// subgroups iff alpha/beta lies in mu_k.
std::uint64_t conjugacy_modulus(const AugmentedPartition& delta);

/// m / k: number of classes among the twisted copies of G_Delta.
std::uint64_t alpha_class_count(const AugmentedPartition& delta);

struct SubgroupClassLabel {
  AugmentedPartition delta;
  std::uint64_t alpha_index = 0;

  /// Throws InvalidArgument if alpha_index >= alpha_class_count(delta).
  static SubgroupClassLabel make(AugmentedPartition delta, std::uint64_t alpha_index);
};

/// Degrees of the basic invariants of G(m,p,n): m, 2m, ..., (n-1)m, nm/p.
/// For m == 1 the trivial degree 1 is omitted (Sym(n) on its reflection
/// representation).
std::vector<std::uint64_t> degrees_imprimitive(std::uint64_t m, std::uint64_t p,
                                               std::uint64_t n);

}  // namespace sylow
