#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sylow/group_model.hpp"
#include "sylow/oracle.hpp"

/// Oracle-versus-classifier verification over a grid of G(m,p,n).
namespace sylow::campaign {

struct GridBounds {
  std::uint64_t max_m = 24;
  std::uint64_t max_n = 8;
  std::uint64_t max_order = oracle::kDefaultOrderCap;
};

/// Canonical, pairwise distinct, non-trivial G(m,p,n) with p | m inside the
/// bounds, ordered by (order, m, p, n).
std::vector<ImprimitiveParams> imprimitive_grid(const GridBounds& bounds);

struct OracleClass {
  AugmentedPartition delta;
  std::size_t order = 0;
  std::size_t class_size = 0;
};

struct PrimeCheck {
  std::uint64_t ell = 0;
  bool parabolic_ok = false;
  bool reflection_ok = false;
  bool class_sizes_ok = false;
  bool sylow_ok = false;
  std::vector<OracleClass> oracle_parabolic;
  std::vector<OracleClass> oracle_reflection;
  std::size_t sylow_order = 0;
  std::string detail;

  bool ok() const { return parabolic_ok && reflection_ok && class_sizes_ok && sylow_ok; }
};

struct GroupCheck {
  ImprimitiveParams params;
  std::size_t order = 0;
  bool skipped = false;
  std::string notice;
  std::vector<PrimeCheck> primes;

  bool ok() const;
};

struct Options {
  std::uint64_t order_cap = oracle::kDefaultOrderCap;
  std::size_t subgroup_cap = oracle::kDefaultSubgroupCap;
  /// Empty means every prime divisor of |G|.
  std::vector<std::uint64_t> primes;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Compares the oracle's minimal parabolic and reflection classes and its
/// Sylow construction with the classifier. ResourceLimit marks the group
/// skipped.
GroupCheck verify_group(const ImprimitiveParams& params, const Options& options);

struct Report {
  std::vector<GroupCheck> groups;

  std::size_t checked() const;
  std::size_t skipped() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

Report run(const std::vector<ImprimitiveParams>& groups, const Options& options,
           const std::function<void(const GroupCheck&)>& progress = {});

}  // namespace sylow::campaign
