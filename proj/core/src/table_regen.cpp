#include "sylow/table_regen.hpp"

#include <algorithm>
#include <numeric>

#include "sylow/classifier.hpp"
#include "sylow/errors.hpp"
#include "sylow/valuation.hpp"

namespace sylow::tables {
namespace {

constexpr std::uint64_t kSampleMaxM = 12;
constexpr std::uint64_t kSampleMaxN = 6;
constexpr unsigned kFirstExceptional = 4;
constexpr unsigned kLastExceptional = 37;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_primes(const std::vector<std::uint64_t>& primes) {
  std::vector<std::string> parts;
  for (auto p : primes) parts.push_back(std::to_string(p));
  return join(parts, ",");
}

std::string strip_tilde(const std::string& label) {
  return !label.empty() && label.front() == '~' ? label.substr(1) : label;
}

std::vector<std::uint64_t> cuspidal_primes(const GroupType& g) {
  std::vector<std::uint64_t> out;
  for (auto ell : prime_divisors(g.order())) {
    if (is_cuspidal(g, ell)) out.push_back(ell);
  }
  return out;
}

bool is_reflection_table(TableId id) {
  return id == TableId::Reflection || id == TableId::ReflectionRank2;
}

// Base-ell digits b_0, b_1, ... of n.
std::vector<std::uint64_t> digits_of(std::uint64_t n, std::uint64_t ell) {
  return valuation::base_digits(ell, n).digits;
}

// Values of the parametric order and class-count columns at a grid point.
BigInt evaluate_family(const std::string& text, const ImprimitiveParams& g, std::uint64_t ell) {
  const auto [m, p, n] = g;
  const auto i = valuation::nu(ell, m);
  const auto j = valuation::nu(ell, p);
  const BigInt L = ell;
  if (text == "1") return 1;
  if (text == "m") return m;
  if (text == "m^n n!/p") return ipow(BigInt(m), n) * factorial(n) / p;
  if (text == "ℓ^{ν(m)}" || text == "ℓ^i") return ipow(L, i);
  if (text == "(ℓ^i)!") return factorial(n);
  if (text == "ℓ^{nν(m)-ν(p)} n!" || text == "ℓ^{in-j} n!") {
    return ipow(L, n * i - j) * factorial(n);
  }
  if (text == "ℓ^{iℓ^j} (ℓ^j)!") return ipow(L, i * n) * factorial(n);
  if (text == "gcd(p/ℓ^{ν(p)},n)") {
    std::uint64_t lj = 1;
    for (std::uint64_t k = 0; k < j; ++k) lj *= ell;
    return std::gcd(p / lj, n);
  }
  if (text == "∏_{i≥1} (ℓ^i!)^{b_i}" || text == "∏_{i≥0} [ℓ^{ℓ^i ν(m)} (ℓ^i!)]^{b_i}") {
    const bool with_phases = text.find("ν(m)") != std::string::npos;
    BigInt r = 1;
    std::uint64_t block = 1;
    for (auto b : digits_of(n, ell)) {
      BigInt factor = factorial(block);
      if (with_phases) factor *= ipow(L, block * i);
      r *= ipow(factor, b);
      block *= ell;
    }
    return r;
  }
  throw std::logic_error("no evaluator for the family expression '" + text + "'");
}

std::vector<ImprimitiveParams> sample_grid() {
  std::vector<ImprimitiveParams> out;
  std::vector<GroupType> seen;
  for (std::uint64_t m = 1; m <= kSampleMaxM; ++m) {
    for (std::uint64_t p = 1; p <= m; ++p) {
      if (m % p != 0) continue;
      for (std::uint64_t n = 1; n <= kSampleMaxN; ++n) {
        auto g = GroupType::imprimitive(m, p, n);
        if (g.is_trivial() || std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
        seen.push_back(g);
        out.push_back(g.imprimitive_params());
      }
    }
  }
  return out;
}

class Regenerator {
 public:
  Regenerator(TableId id, const TableSet& data, const ConsistencyReport& report)
      : id_(id), data_(data), report_(report) {
    out_.id = id;
  }

  RegeneratedTable run() {
    if (id_ == TableId::NonUnique) {
      nonunique();
    } else {
      for (const auto* row : data_.rows_of(id_)) out_.rows.push_back(regenerate(*row));
      if (id_ == TableId::Cuspidal || id_ == TableId::Supercuspidal) add_missing_markings();
      if (id_ == TableId::Parabolic || is_reflection_table(id_)) report_uncovered();
    }
    return std::move(out_);
  }

 private:
  RegeneratedRow skeleton(const TableRow& row) const {
    RegeneratedRow r;
    r.group = row.group_text;
    r.ell = row.ell_text;
    r.line = row.line;
    r.class_count = row.class_count_text;
    for (const auto& m : row.members) {
      r.labels.push_back(m.label);
      r.orders.push_back(m.order ? format_factored(*m.order) : m.order_text);
    }
    return r;
  }

  void finish(RegeneratedRow& r, const std::string& mismatch) const {
    for (const auto& a : report_.anomalies) {
      if (a.table == id_ && a.line == r.line &&
          std::find(r.anomaly_ids.begin(), r.anomaly_ids.end(), a.id) == r.anomaly_ids.end()) {
        r.anomaly_ids.push_back(a.id);
      }
    }
    r.detail = mismatch;
    if (!r.anomaly_ids.empty()) {
      r.status = RowStatus::Anomaly;
    } else if (!mismatch.empty()) {
      r.status = RowStatus::Mismatch;
    }
  }

  SubgroupKind kind() const {
    return id_ == TableId::Parabolic ? SubgroupKind::Parabolic : SubgroupKind::Reflection;
  }

  RegeneratedRow regenerate(const TableRow& row) {
    if (row.is_family()) return family(row);
    if (row.is_range()) return range(row);
    return concrete(row);
  }

  RegeneratedRow concrete(const TableRow& row) {
    auto r = skeleton(row);
    const auto g = GroupType::exceptional(*row.shephard_todd);
    std::string mismatch;
    auto note = [&](const std::string& s) {
      if (!mismatch.empty()) mismatch += "; ";
      mismatch += s;
    };
    if (id_ == TableId::Cuspidal) {
      auto computed = cuspidal_primes(g);
      r.marking = join_primes(computed);
      if (computed != row.primes) {
        note("tabulated primes " + join_primes(row.primes) + ", parabolic answers give " +
             r.marking);
      }
      if (row.members.front().order != g.order()) {
        note("tabulated order " + row.members.front().order_text + ", |G| = " +
             format_factored(g.order()));
      }
      r.orders = {format_factored(g.order())};
      finish(r, mismatch);
      return r;
    }
    if (id_ == TableId::Supercuspidal) {
      for (auto ell : row.primes) {
        if (!is_supercuspidal(g, ell)) note("not supercuspidal at " + std::to_string(ell));
      }
      if (row.members.front().order != g.order()) {
        note("tabulated order " + row.members.front().order_text + ", |G| = " +
             format_factored(g.order()));
      }
      r.marking = "supercuspidal";
      r.orders = {format_factored(g.order())};
      finish(r, mismatch);
      return r;
    }
    bool first = true;
    for (auto ell : row.primes) {
      auto answer = classify(g, ell, kind(), data_);
      std::vector<std::string> labels;
      std::vector<std::string> orders;
      for (const auto& m : answer.members) {
        labels.push_back(m.label);
        orders.push_back(format_factored(m.order));
      }
      if (first) {
        r.labels = labels;
        r.orders = orders;
        r.class_count = std::to_string(answer.class_count);
        if (id_ == TableId::Parabolic) {
          r.marking = join_primes(cuspidal_primes(g));
        } else if (answer.equals_whole_group) {
          r.marking = "supercuspidal";
        }
        first = false;
      } else if (labels != r.labels || orders != r.orders) {
        note("answer differs between the primes of one row");
      }
    }
    std::vector<std::string> tab_labels;
    std::vector<std::string> tab_orders;
    for (const auto& m : row.members) {
      tab_labels.push_back(m.label);
      tab_orders.push_back(format_factored(*m.order));
    }
    if (tab_orders.size() == 1 && r.orders.size() > 1) tab_orders.resize(r.orders.size(), tab_orders[0]);
    if (tab_labels != r.labels) note("labels " + join(r.labels, ";"));
    if (tab_orders != r.orders) note("orders " + join(r.orders, ";"));
    if (row.class_count && std::to_string(*row.class_count) != r.class_count) {
      note("class count " + r.class_count);
    }
    if (id_ == TableId::Parabolic) {
      auto tab = row.annotation("cuspidal");
      if (tab != r.marking) note("cuspidal primes " + r.marking + ", tabulated " + tab);
    }
    finish(r, mismatch);
    return r;
  }

  RegeneratedRow range(const TableRow& row) {
    auto r = skeleton(row);
    std::string mismatch;
    for (auto st : row.shephard_todd_range) {
      const auto g = GroupType::exceptional(st);
      for (auto ell : prime_divisors(g.order())) {
        bool whole = false;
        switch (id_) {
          case TableId::Cuspidal:
            whole = is_cuspidal(g, ell);
            break;
          case TableId::Supercuspidal:
            whole = is_supercuspidal(g, ell);
            break;
          default:
            whole = classify(g, ell, kind(), data_).equals_whole_group;
            break;
        }
        if (!whole) mismatch += g.to_string() + " at " + std::to_string(ell) + " is proper; ";
      }
    }
    r.marking = id_ == TableId::Parabolic || id_ == TableId::Cuspidal ? "all" : "";
    finish(r, mismatch);
    return r;
  }

  RegeneratedRow family(const TableRow& row) {
    auto r = skeleton(row);
    r.orders = {row.members.front().order_text};
    std::string mismatch;
    std::size_t samples = 0;
    for (const auto& params : grid_) {
      const auto g = GroupType::imprimitive(params.m, params.p, params.n);
      for (auto ell : prime_divisors(g.order())) {
        if (!family_matches(row, params, ell)) continue;
        ++samples;
        const auto want = evaluate_family(row.members.front().order_text, params, ell);
        bool ok = true;
        switch (id_) {
          case TableId::Cuspidal:
            ok = is_cuspidal(g, ell) && want == g.order();
            break;
          case TableId::Supercuspidal:
            ok = is_supercuspidal(g, ell) && want == g.order();
            break;
          default: {
            auto answer = classify(g, ell, kind(), data_);
            const auto count = evaluate_family(row.class_count_text, params, ell);
            ok = answer.member_order() == want && BigInt(answer.class_count) == count;
            break;
          }
        }
        if (!ok && mismatch.size() < 200) {
          mismatch += g.to_string() + " at " + std::to_string(ell) + "; ";
        }
      }
    }
    if (samples == 0) mismatch = "no grid group matches";
    out_.family_samples += samples;
    switch (id_) {
      case TableId::Parabolic:
        r.marking = row.annotation("cuspidal");
        break;
      case TableId::Cuspidal:
        r.marking = row.ell_text;
        break;
      case TableId::Supercuspidal:
        r.marking = "supercuspidal";
        break;
      default:
        break;
    }
    finish(r, mismatch);
    return r;
  }

  bool covered(const TableRow& row, unsigned st) const {
    return row.shephard_todd == st ||
           std::find(row.shephard_todd_range.begin(), row.shephard_todd_range.end(), st) !=
               row.shephard_todd_range.end();
  }

  // Exceptional (group, prime) pairs with the marking but no row.
  void add_missing_markings() {
    const auto rows = data_.rows_of(id_);
    for (unsigned st = kFirstExceptional; st <= kLastExceptional; ++st) {
      const auto g = GroupType::exceptional(st);
      std::vector<std::uint64_t> missing;
      for (auto ell : prime_divisors(g.order())) {
        const bool marked = id_ == TableId::Cuspidal ? is_cuspidal(g, ell) : is_supercuspidal(g, ell);
        if (!marked) continue;
        const bool listed = std::any_of(rows.begin(), rows.end(), [&](const TableRow* row) {
          return covered(*row, st) && (row->is_range() || row->covers_prime(ell));
        });
        const bool row_exists = std::any_of(rows.begin(), rows.end(), [&](const TableRow* row) {
          return covered(*row, st);
        });
        // A listed group whose prime list is short is reported on its own row.
        if (!listed && !row_exists) missing.push_back(ell);
      }
      if (missing.empty()) continue;
      RegeneratedRow r;
      r.group = g.to_string();
      r.ell = join_primes(missing);
      r.labels = {g.to_string()};
      r.orders = {format_factored(g.order())};
      r.class_count = "1";
      r.marking = id_ == TableId::Cuspidal ? r.ell : "supercuspidal";
      r.status = RowStatus::Added;
      out_.rows.push_back(std::move(r));
    }
  }

  // Exceptional (group, prime) pairs the classifier cannot answer from the data.
  void report_uncovered() {
    for (unsigned st = kFirstExceptional; st <= kLastExceptional; ++st) {
      const bool rank2 = st <= 22;
      if (id_ == TableId::Reflection && rank2) continue;
      if (id_ == TableId::ReflectionRank2 && !rank2) continue;
      const auto g = GroupType::exceptional(st);
      for (auto ell : prime_divisors(g.order())) {
        try {
          (void)classify(g, ell, kind(), data_);
        } catch (const NotFound& e) {
          RegeneratedRow r;
          r.group = g.to_string();
          r.ell = std::to_string(ell);
          r.status = RowStatus::Mismatch;
          r.detail = e.what();
          out_.rows.push_back(std::move(r));
        }
      }
    }
  }

  struct NonuniqueEntry {
    unsigned st;
    std::uint64_t ell;
    std::string label;
    BigInt order;
    std::uint64_t count;
    bool used = false;
  };

  void nonunique() {
    std::vector<NonuniqueEntry> entries;
    for (unsigned st = kFirstExceptional; st <= kLastExceptional; ++st) {
      const auto g = GroupType::exceptional(st);
      for (auto ell : prime_divisors(g.order())) {
        auto answer = classify_reflection(g, ell, data_);
        if (answer.class_count < 2) continue;
        for (const auto& m : answer.members) {
          auto label = strip_tilde(m.label);
          auto it = std::find_if(entries.begin(), entries.end(), [&](const NonuniqueEntry& e) {
            return e.st == st && e.ell == ell && e.label == label;
          });
          if (it == entries.end()) {
            entries.push_back({st, ell, label, m.order, 1});
          } else {
            ++it->count;
          }
        }
      }
    }
    for (const auto* row : data_.rows_of(id_)) {
      if (row->is_family()) {
        out_.rows.push_back(family(*row));
        continue;
      }
      auto r = skeleton(*row);
      std::string mismatch;
      const auto& tm = row->members.front();
      auto it = std::find_if(entries.begin(), entries.end(), [&](const NonuniqueEntry& e) {
        return e.st == *row->shephard_todd && row->covers_prime(e.ell) && e.label == tm.base_label;
      });
      if (it == entries.end()) {
        mismatch = "the classifier has no such non-unique class";
      } else {
        it->used = true;
        r.orders = {format_factored(it->order)};
        r.class_count = std::to_string(it->count);
        if (tm.order != it->order) mismatch = "order " + r.orders.front();
        if (row->class_count != it->count) mismatch += " class count " + r.class_count;
      }
      finish(r, mismatch);
      out_.rows.push_back(std::move(r));
    }
    // Classes the data omits go right after the rows of their group.
    for (const auto& e : entries) {
      if (e.used) continue;
      RegeneratedRow r;
      r.group = GroupType::exceptional(e.st).to_string();
      std::size_t insert_at = out_.rows.size();
      for (std::size_t k = 0; k < out_.rows.size(); ++k) {
        const auto* row = line_row(out_.rows[k].line);
        if (row && row->shephard_todd == e.st) {
          r.group = row->group_text;
          insert_at = k + 1;
        }
      }
      r.ell = std::to_string(e.ell);
      r.labels = {e.label};
      r.orders = {format_factored(e.order)};
      r.class_count = std::to_string(e.count);
      r.status = RowStatus::Added;
      r.detail = "listed among the reflection answers but not as a non-unique class";
      out_.rows.insert(out_.rows.begin() + static_cast<std::ptrdiff_t>(insert_at), std::move(r));
    }
  }

  const TableRow* line_row(std::size_t line) const {
    if (line == 0) return nullptr;
    for (const auto& row : data_.rows()) {
      if (row.line == line) return &row;
    }
    return nullptr;
  }

  TableId id_;
  const TableSet& data_;
  const ConsistencyReport& report_;
  RegeneratedTable out_;
  std::vector<ImprimitiveParams> grid_ = sample_grid();
};

std::string cell(const std::string& s) { return s.empty() ? " " : s; }

}  // namespace

std::string_view status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Verified: return "ok";
    case RowStatus::Anomaly: return "anomaly";
    case RowStatus::Added: return "added";
    case RowStatus::Mismatch: return "mismatch";
  }
  return "?";
}

std::size_t RegeneratedTable::count(RowStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const RegeneratedRow& r) { return r.status == s; }));
}

RegeneratedTable regenerate_table(TableId id, const TableSet& data) {
  return regenerate_table(id, data, check_consistency(data));
}

RegeneratedTable regenerate_table(TableId id, const TableSet& data,
                                  const ConsistencyReport& report) {
  return Regenerator(id, data, report).run();
}

std::string render_markdown(const RegeneratedTable& table) {
  std::string out = "## " + std::string(table_code(table.id)) + ": " +
                    std::string(table_caption(table.id)) + "\n\n";
  out += "| Group | ℓ | Members | Order | Classes | Marking | Status |\n";
  out += "|---|---|---|---|---|---|---|\n";
  for (const auto& r : table.rows) {
    std::string status(status_name(r.status));
    if (!r.anomaly_ids.empty()) status += ": " + join(r.anomaly_ids, ", ");
    if (r.status == RowStatus::Mismatch && !r.detail.empty()) status += ": " + r.detail;
    out += "| " + cell(r.group) + " | " + cell(r.ell) + " | " + cell(join(r.labels, "; ")) +
           " | " + cell(join(r.orders, "; ")) + " | " + cell(r.class_count) + " | " +
           cell(r.marking) + " | " + status + " |\n";
  }
  return out;
}

}  // namespace sylow::tables
