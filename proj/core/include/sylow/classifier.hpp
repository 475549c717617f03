#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/group_model.hpp"
#include "sylow/tables.hpp"

/// Minimal parabolic (P_ell) and reflection (R_ell) subgroup classes
/// containing an ell-Sylow subgroup.
namespace sylow {

enum class SubgroupKind { Parabolic, Reflection };

std::string_view kind_name(SubgroupKind kind);
/// "parabolic" or "reflection"; throws ParseError otherwise.
SubgroupKind parse_kind(std::string_view text);

/// One conjugacy class of the answer.
struct ClassMember {
  GroupType type;
  /// Separates non-conjugate classes of the same type: the tilde index for
  /// table answers, the twist index for G(m,p,n) answers.
  unsigned distinguisher = 0;
  std::string label;
  BigInt order;
  /// Index of the mu_m / mu_k coset of the twist, for G(m,p,n) answers.
  std::optional<std::uint64_t> twist_index;
};

struct SubgroupClassResult {
  GroupType group;
  std::uint64_t ell = 2;
  SubgroupKind kind = SubgroupKind::Parabolic;
  std::vector<ClassMember> members;
  std::size_t class_count = 0;
  bool equals_whole_group = false;
  /// Augmented partition of the answer when the group is G(m,p,n). Ranks of
  /// size one with trivial factor appear as (1,1,1).
  std::optional<AugmentedPartition> delta;

  const BigInt& member_order() const { return members.front().order; }
};

/// Throws NotADivisor if ell does not divide |g|, InvalidArgument if ell is
/// not prime.
SubgroupClassResult classify_parabolic(const GroupType& g, std::uint64_t ell,
                                       const tables::TableSet& data = tables::TableSet::embedded());
SubgroupClassResult classify_reflection(const GroupType& g, std::uint64_t ell,
                                        const tables::TableSet& data = tables::TableSet::embedded());
SubgroupClassResult classify(const GroupType& g, std::uint64_t ell, SubgroupKind kind,
                             const tables::TableSet& data = tables::TableSet::embedded());

bool is_cuspidal(const GroupType& g, std::uint64_t ell);
bool is_supercuspidal(const GroupType& g, std::uint64_t ell);

/// True iff ell divides every degree of G(m,p,n). A sufficient condition for
/// cuspidality only. Throws Unsupported for exceptional groups and products.
bool degrees_criterion(const GroupType& g, std::uint64_t ell);

struct ObservationViolation {
  GroupType group;
  std::uint64_t ell = 2;
  GroupType parabolic;
};

struct ObservationReport {
  std::size_t checked = 0;
  std::size_t non_cuspidal = 0;
  std::vector<ObservationViolation> violations;
};

/// Every G_4..G_37 plus G(m,p,n) with m <= max_m, 1 <= n <= max_n
/// (canonical forms, trivial group excluded, duplicates removed).
std::vector<GroupType> irreducible_catalog(std::uint64_t max_m = 12, std::uint64_t max_n = 6);

/// For each (G, ell) with ell not cuspidal, checks that ell is supercuspidal
/// for P_ell.
ObservationReport verify_observation(const std::vector<GroupType>& catalog);

}  // namespace sylow
