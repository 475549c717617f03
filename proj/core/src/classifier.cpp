#include "sylow/classifier.hpp"

#include <algorithm>
#include <numeric>

#include "sylow/errors.hpp"
#include "sylow/valuation.hpp"

namespace sylow {
namespace {

using tables::TableId;
using tables::TableSet;

std::uint64_t upow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

void require_divisor(const GroupType& g, std::uint64_t ell) {
  valuation::require_prime(ell);
  if (g.order() % ell != 0) {
    throw NotADivisor(std::to_string(ell) + " does not divide |" + g.to_string() +
                      "| = " + format_factored(g.order()));
  }
}

SubgroupClassResult single(const GroupType& g, std::uint64_t ell, SubgroupKind kind,
                           GroupType member, std::optional<AugmentedPartition> delta) {
  SubgroupClassResult r;
  r.group = g;
  r.ell = ell;
  r.kind = kind;
  ClassMember m;
  m.order = member.order();
  m.label = member.to_string();
  m.type = std::move(member);
  r.members.push_back(std::move(m));
  r.class_count = 1;
  r.equals_whole_group = r.member_order() == g.order();
  r.delta = std::move(delta);
  return r;
}

// prod_{i>=1} G(1,1,ell^i)^{b_i} together with its augmented partition,
// whose b_0 ranks of size one are (1,1,1).
SubgroupClassResult symmetric_answer(const GroupType& g, std::uint64_t ell, SubgroupKind kind) {
  const auto& a = g.imprimitive_params();
  auto digits = valuation::base_digits(ell, a.n);
  std::vector<GroupType> factors;
  std::vector<FeasibleTriple> triples;
  for (std::size_t i = digits.digits.size(); i-- > 0;) {
    for (std::uint64_t c = 0; c < digits.digits[i]; ++c) {
      factors.push_back(GroupType::symmetric(upow(ell, i)));
      triples.push_back({1, 1, upow(ell, i)});
    }
  }
  return single(g, ell, kind, GroupType::product_nontrivial(std::move(factors)),
                AugmentedPartition::make(std::move(triples), a));
}

SubgroupClassResult imprimitive_parabolic(const GroupType& g, std::uint64_t ell) {
  const auto& a = g.imprimitive_params();
  if (a.n == 1 || a.m % ell == 0) {
    return single(g, ell, SubgroupKind::Parabolic, g,
                  AugmentedPartition::make({{a.m, a.p, a.n}}, a));
  }
  return symmetric_answer(g, ell, SubgroupKind::Parabolic);
}

SubgroupClassResult imprimitive_reflection(const GroupType& g, std::uint64_t ell) {
  const auto& a = g.imprimitive_params();
  const auto li = upow(ell, valuation::nu(ell, a.m));
  if (a.n == 1) {
    return single(g, ell, SubgroupKind::Reflection, GroupType::cyclic(li),
                  AugmentedPartition::make({{li, 1, 1}}, a));
  }
  if (a.m % ell != 0) return symmetric_answer(g, ell, SubgroupKind::Reflection);
  if (a.p % ell != 0) {
    auto digits = valuation::base_digits(ell, a.n);
    std::vector<GroupType> factors;
    std::vector<FeasibleTriple> triples;
    for (std::size_t i = digits.digits.size(); i-- > 0;) {
      for (std::uint64_t c = 0; c < digits.digits[i]; ++c) {
        factors.push_back(GroupType::imprimitive(li, 1, upow(ell, i)));
        triples.push_back({li, 1, upow(ell, i)});
      }
    }
    return single(g, ell, SubgroupKind::Reflection, GroupType::product(std::move(factors)),
                  AugmentedPartition::make(std::move(triples), a));
  }
  const auto lj = upow(ell, valuation::nu(ell, a.p));
  auto delta = AugmentedPartition::make({{li, lj, a.n}}, a);
  const auto count = std::gcd(a.p / lj, a.n);
  if (alpha_class_count(delta) != count) {
    throw std::logic_error("class count formula disagrees with the conjugacy modulus for " +
                           g.to_string());
  }
  auto r = single(g, ell, SubgroupKind::Reflection, GroupType::imprimitive(li, lj, a.n), delta);
  auto proto = r.members.front();
  r.members.clear();
  for (std::uint64_t k = 0; k < count; ++k) {
    auto m = proto;
    m.distinguisher = static_cast<unsigned>(k);
    m.twist_index = k;
    r.members.push_back(std::move(m));
  }
  r.class_count = count;
  r.equals_whole_group = count == 1 && r.member_order() == g.order();
  return r;
}

SubgroupClassResult from_table_row(const GroupType& g, std::uint64_t ell, SubgroupKind kind,
                                   const tables::TableRow& row) {
  SubgroupClassResult r;
  r.group = g;
  r.ell = ell;
  r.kind = kind;
  if (row.is_range()) {
    ClassMember m;
    m.type = g;
    m.label = g.to_string();
    m.order = g.order();
    r.members.push_back(std::move(m));
  } else {
    for (const auto& tm : row.members) {
      ClassMember m;
      m.type = *tm.type;
      m.distinguisher = tm.distinguisher;
      m.label = tm.label;
      m.order = *tm.order;
      r.members.push_back(std::move(m));
    }
  }
  r.class_count = r.members.size();
  r.equals_whole_group = r.class_count == 1 && r.members.front().type == g;
  return r;
}

SubgroupClassResult exceptional(const GroupType& g, std::uint64_t ell, SubgroupKind kind,
                                const TableSet& data) {
  if (kind == SubgroupKind::Parabolic) {
    return from_table_row(g, ell, kind, data.lookup(TableId::Parabolic, g, ell));
  }
  const auto* row = data.find(TableId::Reflection, g, ell);
  if (!row) row = data.find(TableId::ReflectionRank2, g, ell);
  if (!row) {
    throw NotFound("no reflection table row for " + g.to_string() + " at ell=" +
                   std::to_string(ell));
  }
  return from_table_row(g, ell, kind, *row);
}

SubgroupClassResult irreducible(const GroupType& g, std::uint64_t ell, SubgroupKind kind,
                                const TableSet& data) {
  if (g.is_exceptional()) return exceptional(g, ell, kind, data);
  return kind == SubgroupKind::Parabolic ? imprimitive_parabolic(g, ell)
                                         : imprimitive_reflection(g, ell);
}

// Cartesian product of the factor answers; factors of ell-free order
// contribute the trivial group.
SubgroupClassResult product(const GroupType& g, std::uint64_t ell, SubgroupKind kind,
                            const TableSet& data) {
  std::vector<SubgroupClassResult> parts;
  for (const auto& c : g.factors()) {
    if (c.order() % ell == 0) parts.push_back(irreducible(c, ell, kind, data));
  }
  std::vector<ClassMember> combined(1);
  combined.front().type = GroupType::symmetric(1);
  combined.front().order = 1;
  for (const auto& part : parts) {
    std::vector<ClassMember> next;
    for (const auto& left : combined) {
      for (const auto& right : part.members) {
        ClassMember m;
        m.type = GroupType::product_nontrivial({left.type, right.type});
        m.order = left.order * right.order;
        m.label = left.label.empty() ? right.label : left.label + " × " + right.label;
        next.push_back(std::move(m));
      }
    }
    combined = std::move(next);
  }
  SubgroupClassResult r;
  r.group = g;
  r.ell = ell;
  r.kind = kind;
  r.members = std::move(combined);
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    r.members[i].distinguisher = static_cast<unsigned>(i);
  }
  r.class_count = r.members.size();
  r.equals_whole_group = r.class_count == 1 && r.member_order() == g.order();
  return r;
}

}  // namespace

std::string_view kind_name(SubgroupKind kind) {
  return kind == SubgroupKind::Parabolic ? "parabolic" : "reflection";
}

SubgroupKind parse_kind(std::string_view text) {
  if (text == "parabolic") return SubgroupKind::Parabolic;
  if (text == "reflection") return SubgroupKind::Reflection;
  throw ParseError("unknown subgroup kind '" + std::string(text) + "'");
}

SubgroupClassResult classify(const GroupType& g, std::uint64_t ell, SubgroupKind kind,
                             const TableSet& data) {
  require_divisor(g, ell);
  if (g.is_product()) return product(g, ell, kind, data);
  return irreducible(g, ell, kind, data);
}

SubgroupClassResult classify_parabolic(const GroupType& g, std::uint64_t ell,
                                       const TableSet& data) {
  return classify(g, ell, SubgroupKind::Parabolic, data);
}

SubgroupClassResult classify_reflection(const GroupType& g, std::uint64_t ell,
                                        const TableSet& data) {
  return classify(g, ell, SubgroupKind::Reflection, data);
}

bool is_cuspidal(const GroupType& g, std::uint64_t ell) {
  return classify_parabolic(g, ell).equals_whole_group;
}

bool is_supercuspidal(const GroupType& g, std::uint64_t ell) {
  return classify_reflection(g, ell).equals_whole_group;
}

bool degrees_criterion(const GroupType& g, std::uint64_t ell) {
  if (!g.is_imprimitive()) {
    throw Unsupported("degrees are only available for G(m,p,n), not " + g.to_string());
  }
  require_divisor(g, ell);
  const auto& a = g.imprimitive_params();
  auto degrees = degrees_imprimitive(a.m, a.p, a.n);
  return std::all_of(degrees.begin(), degrees.end(), [&](auto d) { return d % ell == 0; });
}

std::vector<GroupType> irreducible_catalog(std::uint64_t max_m, std::uint64_t max_n) {
  std::vector<GroupType> out;
  for (unsigned st = 4; st <= 37; ++st) out.push_back(GroupType::exceptional(st));
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    for (std::uint64_t p = 1; p <= m; ++p) {
      if (m % p != 0) continue;
      for (std::uint64_t n = 1; n <= max_n; ++n) {
        auto g = GroupType::imprimitive(m, p, n);
        if (g.is_trivial()) continue;
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
      }
    }
  }
  return out;
}

ObservationReport verify_observation(const std::vector<GroupType>& catalog) {
  ObservationReport report;
  for (const auto& g : catalog) {
    for (auto ell : prime_divisors(g.order())) {
      ++report.checked;
      auto p = classify_parabolic(g, ell);
      if (p.equals_whole_group) continue;
      ++report.non_cuspidal;
      const auto& member = p.members.front().type;
      if (!is_supercuspidal(member, ell)) report.violations.push_back({g, ell, member});
    }
  }
  return report;
}

}  // namespace sylow
