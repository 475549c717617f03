#include "sylow/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "sylow/classifier.hpp"
#include "sylow/errors.hpp"
#include "sylow/sylow_structure.hpp"
#include "sylow/valuation.hpp"

namespace sylow::campaign {
namespace {

std::string triples_text(const std::vector<FeasibleTriple>& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ",";
    out += t[i].to_string();
  }
  return out + "]";
}

std::vector<OracleClass> label_classes(const oracle::ConcreteGroup& g,
                                       const std::vector<oracle::SubgroupClass>& classes) {
  std::vector<OracleClass> out;
  for (const auto& c : classes) {
    auto h = oracle::representative_handle(g, c);
    out.push_back({oracle::identify_class(g, h), c.member_order, c.size()});
  }
  return out;
}

PrimeCheck check_prime(const oracle::ConcreteGroup& g, const GroupType& type,
                       const std::vector<oracle::SubgroupClass>& parabolics,
                       const std::vector<oracle::SubgroupClass>& reflections, std::uint64_t ell) {
  PrimeCheck pc;
  pc.ell = ell;
  std::string detail;
  auto note = [&](const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  };

  pc.oracle_parabolic = label_classes(g, oracle::minimal_full_valuation(parabolics, ell, g.order()));
  auto expected_p = classify_parabolic(type, ell);
  const auto want_p = expected_p.delta->normalized_triples();
  pc.parabolic_ok = pc.oracle_parabolic.size() == 1 &&
                    pc.oracle_parabolic.front().order == expected_p.member_order() &&
                    pc.oracle_parabolic.front().delta.normalized_triples() == want_p;
  if (!pc.parabolic_ok) {
    std::string got;
    for (const auto& c : pc.oracle_parabolic) {
      got += triples_text(c.delta.normalized_triples()) + "#" + std::to_string(c.order) + " ";
    }
    note("parabolic: oracle " + got + "vs " + triples_text(want_p) + "#" +
         expected_p.member_order().str());
  }

  pc.oracle_reflection =
      label_classes(g, oracle::minimal_full_valuation(reflections, ell, g.order()));
  auto expected_r = classify_reflection(type, ell);
  const auto want_r = expected_r.delta->normalized_triples();
  pc.reflection_ok = pc.oracle_reflection.size() == expected_r.class_count;
  for (const auto& c : pc.oracle_reflection) {
    pc.reflection_ok = pc.reflection_ok && c.order == expected_r.member_order() &&
                       c.delta.normalized_triples() == want_r;
  }
  if (!pc.reflection_ok) {
    std::string got;
    for (const auto& c : pc.oracle_reflection) {
      got += triples_text(c.delta.normalized_triples()) + "#" + std::to_string(c.order) + " ";
    }
    note("reflection: oracle " + got + "vs " + std::to_string(expected_r.class_count) + "x" +
         triples_text(want_r) + "#" + expected_r.member_order().str());
  }

  pc.class_sizes_ok = std::all_of(
      pc.oracle_reflection.begin(), pc.oracle_reflection.end(), [&](const OracleClass& c) {
        return c.class_size == pc.oracle_reflection.front().class_size;
      });
  if (!pc.class_sizes_ok) note("reflection classes differ in size");

  const auto sylow = oracle::sylow_construct(g, ell);
  pc.sylow_order = sylow.order;
  const auto target = ipow(BigInt(ell), valuation::nu(ell, static_cast<std::uint64_t>(g.order())));
  const auto structural = structure_order(sylow_structure(type, ell));
  pc.sylow_ok = BigInt(sylow.order) == target && structural == target;
  if (!pc.sylow_ok) {
    note("sylow: constructed " + std::to_string(sylow.order) + ", structure " +
         structural.str() + ", expected " + target.str());
  }
  pc.detail = std::move(detail);
  return pc;
}

}  // namespace

std::vector<ImprimitiveParams> imprimitive_grid(const GridBounds& bounds) {
  std::vector<GroupType> seen;
  std::vector<ImprimitiveParams> out;
  for (std::uint64_t m = 1; m <= bounds.max_m; ++m) {
    for (std::uint64_t p = 1; p <= m; ++p) {
      if (m % p != 0) continue;
      for (std::uint64_t n = 1; n <= bounds.max_n; ++n) {
        if (ImprimitiveParams{m, p, n}.order() > bounds.max_order) break;
        auto g = GroupType::imprimitive(m, p, n);
        if (g.is_trivial() || std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
        seen.push_back(g);
        out.push_back(g.imprimitive_params());
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ImprimitiveParams& a, const ImprimitiveParams& b) {
    auto oa = a.order();
    auto ob = b.order();
    if (oa != ob) return oa < ob;
    return a < b;
  });
  return out;
}

bool GroupCheck::ok() const {
  return skipped || std::all_of(primes.begin(), primes.end(),
                                [](const PrimeCheck& p) { return p.ok(); });
}

GroupCheck verify_group(const ImprimitiveParams& params, const Options& options) {
  GroupCheck gc;
  gc.params = params;
  const auto type = GroupType::imprimitive(params.m, params.p, params.n);
  try {
    auto g = oracle::enumerate_group(params.m, params.p, params.n, options.order_cap);
    gc.order = g.order();
    auto parabolics = oracle::parabolic_classes(g);
    auto reflections = oracle::reflection_subgroup_classes(g, options.subgroup_cap);
    auto primes = options.primes.empty() ? prime_divisors(type.order()) : options.primes;
    for (auto ell : primes) {
      if (gc.order % ell != 0) continue;
      gc.primes.push_back(check_prime(g, type, parabolics, reflections, ell));
    }
  } catch (const ResourceLimit& e) {
    gc.skipped = true;
    gc.notice = e.what();
  }
  return gc;
}

std::size_t Report::checked() const {
  return static_cast<std::size_t>(std::count_if(
      groups.begin(), groups.end(), [](const GroupCheck& g) { return !g.skipped; }));
}

std::size_t Report::skipped() const { return groups.size() - checked(); }

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(groups.begin(), groups.end(), [](const GroupCheck& g) { return !g.ok(); }));
}

Report run(const std::vector<ImprimitiveParams>& groups, const Options& options,
           const std::function<void(const GroupCheck&)>& progress) {
  Report report;
  report.groups.resize(groups.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= groups.size()) return;
      try {
        report.groups[i] = verify_group(groups[i], options);
      } catch (...) {
        std::lock_guard lock(progress_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(report.groups[i]);
      }
    }
  };
  auto threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, groups.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

}  // namespace sylow::campaign
