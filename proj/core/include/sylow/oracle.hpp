#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylow/group_model.hpp"

/// Brute-force enumeration of small G(m,p,n): elements, reflections, fixed
/// spaces, parabolic and reflection subgroup classes, Sylow subgroups. All
/// phase arithmetic is exact integer arithmetic mod m.
namespace sylow::oracle {

inline constexpr std::uint64_t kDefaultOrderCap = 20000;
inline constexpr std::size_t kDefaultSubgroupCap = 400000;

/// (theta, pi) acting by g e_i = zeta^theta(pi(i)) e_pi(i), zeta = exp(2 pi i/m).
/// Coordinates are 0-based.
struct MonomialElement {
  std::vector<unsigned> perm;
  std::vector<unsigned> phase;

  static MonomialElement identity(std::size_t n);
  std::size_t rank() const { return perm.size(); }
  bool is_identity() const;

  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
};

MonomialElement multiply(const MonomialElement& g, const MonomialElement& h, std::uint64_t m);
MonomialElement inverse(const MonomialElement& g, std::uint64_t m);
/// p | sum(theta).
bool is_member(const MonomialElement& g, std::uint64_t m, std::uint64_t p);

/// Basis vector supported on one cycle of pi: coordinate support[k] carries
/// zeta^exponents[k]. Normalised so the first (smallest) coordinate has
/// exponent 0.
struct FixedVector {
  std::vector<unsigned> support;
  std::vector<unsigned> exponents;

  friend auto operator<=>(const FixedVector&, const FixedVector&) = default;
};

struct FixedSpaceDescriptor {
  std::vector<FixedVector> basis;

  std::size_t dimension() const { return basis.size(); }
  friend auto operator<=>(const FixedSpaceDescriptor&, const FixedSpaceDescriptor&) = default;
};

/// One basis vector per cycle of pi whose phase sum vanishes mod m.
FixedSpaceDescriptor fixed_space(const MonomialElement& g, std::uint64_t m);
bool fixes(const MonomialElement& h, const FixedVector& v, std::uint64_t m);
bool fixes(const MonomialElement& h, const FixedSpaceDescriptor& u, std::uint64_t m);

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;
  bool is_subset_of(const Bitset& other) const;
  std::vector<std::uint32_t> indices() const;
  std::size_t hash() const;
  /// Lexicographic on the increasing index lists.
  bool lex_less(const Bitset& other) const;

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

struct SubgroupHandle {
  Bitset elements;
  std::size_t order = 0;
};

/// Elements are listed by (permutation rank, phase code), so the identity is
/// element 0.
class ConcreteGroup {
 public:
  /// Throws InvalidArgument if p does not divide m, ResourceLimit if
  /// m^n n!/p exceeds order_cap.
  static ConcreteGroup enumerate(std::uint64_t m, std::uint64_t p, std::uint64_t n,
                                 std::uint64_t order_cap = kDefaultOrderCap);

  const ImprimitiveParams& params() const { return params_; }
  std::size_t order() const { return count_; }
  std::size_t rank() const { return params_.n; }

  MonomialElement element(std::size_t i) const;
  std::optional<std::size_t> index_of(const MonomialElement& g) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  /// Element indices of the reflections, increasing.
  const std::vector<std::size_t>& reflection_indices() const { return reflections_; }
  /// Position of an element in reflection_indices(), or -1.
  std::int32_t reflection_position(std::size_t element) const { return refl_pos_[element]; }
  /// element * reflection number j.
  std::size_t times_reflection(std::size_t element, std::size_t j) const {
    return times_refl_[element * reflections_.size() + j];
  }
  /// Reflection number of t_i * t_j * t_i^-1.
  std::uint32_t conjugate_reflection(std::size_t i, std::size_t j) const {
    return conj_refl_[i * reflections_.size() + j];
  }

  SubgroupHandle generate(const std::vector<std::size_t>& generators) const;
  /// Subgroup generated by the reflections with the given positions.
  SubgroupHandle generate_by_reflections(const std::vector<std::uint32_t>& positions) const;
  /// Positions of the reflections lying in h.
  Bitset reflections_in(const SubgroupHandle& h) const;
  SubgroupHandle whole() const;

 private:
  std::uint64_t code_of(const unsigned* perm, const unsigned* phase) const;

  ImprimitiveParams params_;
  std::size_t count_ = 0;
  std::vector<unsigned> perms_;
  std::vector<unsigned> phases_;
  std::vector<std::int32_t> index_by_code_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> reflections_;
  std::vector<std::int32_t> refl_pos_;
  std::vector<std::uint32_t> times_refl_;
  std::vector<std::uint32_t> conj_refl_;
};

inline ConcreteGroup enumerate_group(std::uint64_t m, std::uint64_t p, std::uint64_t n,
                                     std::uint64_t order_cap = kDefaultOrderCap) {
  return ConcreteGroup::enumerate(m, p, n, order_cap);
}

std::vector<MonomialElement> reflections(const ConcreteGroup& g);

/// {h : h v = v for all v in U}, by exhaustive scan.
SubgroupHandle pointwise_stabilizer(const ConcreteGroup& g, const FixedSpaceDescriptor& u);

/// A conjugacy class of reflection-generated subgroups, each member stored
/// as the set of reflection positions it contains.
struct SubgroupClass {
  /// Lexicographically smallest member first.
  std::vector<Bitset> members;
  std::size_t member_order = 0;

  const Bitset& representative() const { return members.front(); }
  std::size_t size() const { return members.size(); }
};

/// Stabilisers of the flats {Fix(x)}, grouped into conjugacy classes. Each
/// class representative is checked to be generated by its reflections.
std::vector<SubgroupClass> parabolic_classes(const ConcreteGroup& g);

/// All subgroups generated by reflections, grouped into conjugacy classes.
/// Throws ResourceLimit if more than subgroup_cap subgroups are found.
std::vector<SubgroupClass> reflection_subgroup_classes(const ConcreteGroup& g,
                                                       std::size_t subgroup_cap = kDefaultSubgroupCap);

/// Classes attaining the full ell-valuation of |G| and minimal under
/// inclusion among those.
std::vector<SubgroupClass> minimal_full_valuation(const std::vector<SubgroupClass>& classes,
                                                  std::uint64_t ell, std::uint64_t group_order);

SubgroupHandle representative_handle(const ConcreteGroup& g, const SubgroupClass& c);

/// Exhaustive search for x with x a x^-1 = b.
bool are_conjugate(const ConcreteGroup& g, const SubgroupHandle& a, const SubgroupHandle& b);

/// Diagonal ell-power phases plus iterated-wreath permutations on base-ell
/// blocks. The result has order ell^nu(|G|) when the construction is right.
SubgroupHandle sylow_construct(const ConcreteGroup& g, std::uint64_t ell);

/// Recovers the augmented partition of a reflection-generated subgroup from
/// the supports and phases of its elements. Throws InvalidArgument if h is
/// not generated by its reflections.
AugmentedPartition identify_class(const ConcreteGroup& g, const SubgroupHandle& h);

}  // namespace sylow::oracle
