#include "sylow/tables.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "sylow/errors.hpp"
#include "sylow/valuation.hpp"

namespace sylow::tables {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool starts_with_ell(std::string_view s) { return s.starts_with("ℓ"); }

std::vector<unsigned> parse_range(std::string_view body, std::size_t line) {
  std::vector<unsigned> out;
  for (auto piece : split(body, ',')) {
    auto dash = piece.find('-');
    auto lo = parse_uint(piece.substr(0, dash));
    auto hi = dash == std::string_view::npos ? lo : parse_uint(piece.substr(dash + 1));
    if (!lo || !hi || *lo > *hi) {
      throw ParseError("line " + std::to_string(line) + ": bad index range '" +
                       std::string(body) + "'");
    }
    for (auto k = *lo; k <= *hi; ++k) out.push_back(static_cast<unsigned>(k));
  }
  return out;
}

void parse_group_field(TableRow& row) {
  std::string_view text = row.group_text;
  if (text.substr(0, 2) == "G{") {
    auto close = text.find('}');
    if (close == std::string_view::npos) {
      throw ParseError("line " + std::to_string(row.line) + ": unterminated range");
    }
    row.shephard_todd_range = parse_range(text.substr(2, close - 2), row.line);
    return;
  }
  auto eq = text.find('=');
  auto head = text.substr(0, eq);
  auto tail = eq == std::string_view::npos ? std::string_view{} : text.substr(eq + 1);
  if (head.size() >= 2 && head[0] == 'G') {
    if (auto k = parse_uint(head.substr(1))) {
      if (*k >= 1 && *k <= 3) {
        if (tail.empty()) {
          throw ParseError("line " + std::to_string(row.line) + ": G" + std::to_string(*k) +
                           " needs a family pattern");
        }
        row.family = std::string(tail);
        row.group_name = std::string(tail);
        return;
      }
      if (*k < 4 || *k > 37) {
        throw ParseError("line " + std::to_string(row.line) + ": bad index " +
                         std::string(head));
      }
      row.shephard_todd = static_cast<unsigned>(*k);
      row.group_name = std::string(tail);
      return;
    }
  }
  row.family = std::string(text);
}

void parse_ell_field(TableRow& row) {
  std::string_view text = row.ell_text;
  if (text == "all") {
    row.all_primes = true;
    return;
  }
  if (starts_with_ell(text)) {
    row.condition = std::string(text);
    return;
  }
  for (auto piece : split(text, ',')) {
    auto v = parse_uint(piece);
    if (!v || !valuation::is_prime(*v)) {
      throw ParseError("line " + std::to_string(row.line) + ": bad prime '" +
                       std::string(piece) + "'");
    }
    row.primes.push_back(*v);
  }
}

void parse_members(TableRow& row, std::string_view members, std::string_view orders) {
  if (row.is_family()) {
    Member m;
    m.label = m.base_label = std::string(members);
    m.order_text = std::string(orders);
    row.members.push_back(std::move(m));
    return;
  }
  auto labels = split(members, ';');
  auto order_texts = split(orders, ';');
  if (order_texts.size() != 1 && order_texts.size() != labels.size()) {
    throw ParseError("line " + std::to_string(row.line) +
                     ": order column does not align with members");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Member m;
    std::string_view label = labels[i];
    if (!label.empty() && label.front() == '~') {
      m.distinguisher = 1;
      label.remove_prefix(1);
    }
    auto eq = label.find('=');
    std::string_view spec = label;
    if (eq != std::string_view::npos) {
      spec = label.substr(eq + 1);
      label = label.substr(0, eq);
    }
    m.base_label = std::string(label);
    m.label = (m.distinguisher ? "~" : "") + m.base_label;
    m.order_text = std::string(order_texts.size() == 1 ? order_texts[0] : order_texts[i]);
    if (!row.is_range()) {
      try {
        m.type = parse_group_spec(spec);
        auto parsed = parse_factored(m.order_text);
        m.order = parsed.value;
        m.irregular_separators = parsed.irregular_separators;
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(row.line) + ": " + e.what());
      }
    }
    row.members.push_back(std::move(m));
  }
}

void parse_annotations(TableRow& row, std::string_view text) {
  if (text.empty()) return;
  for (auto piece : split(text, ';')) {
    auto eq = piece.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(row.line) + ": annotation without '='");
    }
    row.annotations.emplace(std::string(piece.substr(0, eq)), std::string(piece.substr(eq + 1)));
  }
}

bool is_power_of(std::uint64_t x, std::uint64_t ell, unsigned min_exponent) {
  unsigned e = 0;
  while (x > 1 && x % ell == 0) {
    x /= ell;
    ++e;
  }
  return x == 1 && e >= min_exponent;
}

std::uint64_t upow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

bool ell_divides_order(const ImprimitiveParams& g, std::uint64_t ell) {
  return valuation::imprimitive_order_valuation(g.m, g.p, g.n, ell) > 0;
}

bool condition_holds(std::string_view cond, const ImprimitiveParams& g, std::uint64_t ell) {
  if (cond.empty() || cond == "ℓ") return true;
  if (cond == "ℓ∣n!") return ell <= g.n;
  if (cond == "ℓ∣m") return g.m % ell == 0;
  if (cond == "ℓ∤m") return g.m % ell != 0;
  if (cond == "ℓ∣p") return g.p % ell == 0;
  if (cond == "ℓ∣m,ℓ∤p") return g.m % ell == 0 && g.p % ell != 0;
  throw ParseError("unknown prime condition '" + std::string(cond) + "'");
}

}  // namespace

std::string_view table_code(TableId id) {
  switch (id) {
    case TableId::Parabolic: return "T1";
    case TableId::Cuspidal: return "T2";
    case TableId::Reflection: return "T3";
    case TableId::ReflectionRank2: return "T3b";
    case TableId::Supercuspidal: return "T4";
    case TableId::NonUnique: return "T5";
  }
  return "?";
}

std::string_view table_slug(TableId id) {
  switch (id) {
    case TableId::Parabolic: return "parabolic";
    case TableId::Cuspidal: return "cuspidal";
    case TableId::Reflection: return "reflection";
    case TableId::ReflectionRank2: return "reflection-rank2";
    case TableId::Supercuspidal: return "supercuspidal";
    case TableId::NonUnique: return "nonunique";
  }
  return "?";
}

std::string_view table_caption(TableId id) {
  switch (id) {
    case TableId::Parabolic: return "Type of P_ℓ in G";
    case TableId::Cuspidal: return "Cuspidal cases of G";
    case TableId::Reflection: return "Type of R_ℓ in G excluding primitive G of rank 2";
    case TableId::ReflectionRank2: return "Type of R_ℓ in primitive G of rank 2";
    case TableId::Supercuspidal: return "Supercuspidal cases of G";
    case TableId::NonUnique: return "Cases where R_ℓ is not unique up to conjugacy";
  }
  return "?";
}

TableId parse_table_id(std::string_view text) {
  for (auto id : {TableId::Parabolic, TableId::Cuspidal, TableId::Reflection,
                  TableId::ReflectionRank2, TableId::Supercuspidal, TableId::NonUnique}) {
    if (text == table_code(id) || text == table_slug(id)) return id;
  }
  if (text == "1") return TableId::Parabolic;
  if (text == "2") return TableId::Cuspidal;
  if (text == "3") return TableId::Reflection;
  if (text == "4") return TableId::Supercuspidal;
  if (text == "5") return TableId::NonUnique;
  throw ParseError("unknown table id '" + std::string(text) + "'");
}

bool TableRow::covers_prime(std::uint64_t ell) const {
  if (all_primes) return true;
  return std::find(primes.begin(), primes.end(), ell) != primes.end();
}

std::string TableRow::annotation(std::string_view key) const {
  auto it = annotations.find(key);
  return it == annotations.end() ? std::string{} : it->second;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

TableSet TableSet::parse(std::string_view text) {
  TableSet set;
  set.checksum_ = fnv1a64(text);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto fields = split(line, '|');
    if (fields.size() < 6 || fields.size() > 7) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 6 or 7 fields, got " +
                       std::to_string(fields.size()));
    }
    TableRow row;
    row.line = line_no;
    row.table = parse_table_id(fields[0]);
    row.group_text = std::string(fields[1]);
    row.ell_text = std::string(fields[2]);
    parse_group_field(row);
    parse_ell_field(row);
    parse_members(row, fields[3], fields[4]);
    row.class_count_text = std::string(fields[5]);
    row.class_count = parse_uint(fields[5]);
    if (fields.size() == 7) parse_annotations(row, fields[6]);
    set.rows_.push_back(std::move(row));
  }
  return set;
}

TableSet TableSet::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("cannot open table file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const TableSet& TableSet::embedded() {
  static const TableSet set = [] {
    auto text = embedded_table_text();
    if (fnv1a64(text) != kEditionChecksum) {
      throw InvalidArgument("embedded table data does not match the pinned edition checksum");
    }
    return parse(text);
  }();
  return set;
}

std::vector<const TableRow*> TableSet::rows_of(TableId id) const {
  std::vector<const TableRow*> out;
  for (const auto& r : rows_) {
    if (r.table == id) out.push_back(&r);
  }
  return out;
}

bool family_matches(const TableRow& row, const ImprimitiveParams& g, std::uint64_t ell) {
  if (!row.is_family() || !valuation::is_prime(ell) || !ell_divides_order(g, ell)) return false;
  const std::string& f = row.family;
  bool shape = false;
  if (f == "G(1,1,n)") {
    shape = g.m == 1 && g.n >= 2;
  } else if (f == "G(m,p,n)") {
    shape = g.m > 1 && g.n > 1;
  } else if (f == "G(m,1,1)") {
    shape = g.m > 1 && g.p == 1 && g.n == 1;
  } else if (f == "G(1,1,ℓ^i)") {
    shape = g.m == 1 && is_power_of(g.n, ell, 1);
  } else if (f == "G(ℓ^i,ℓ^j,n)") {
    shape = is_power_of(g.m, ell, 1) && is_power_of(g.p, ell, 1) && g.n > 1;
  } else if (f == "G(ℓ^i,1,ℓ^j)") {
    shape = is_power_of(g.m, ell, 1) && g.p == 1 && is_power_of(g.n, ell, 1);
  } else if (f == "G(ℓ^i,1,1)") {
    shape = is_power_of(g.m, ell, 1) && g.p == 1 && g.n == 1;
  } else {
    throw ParseError("unknown family pattern '" + f + "'");
  }
  return shape && condition_holds(row.condition, g, ell);
}

const TableRow* TableSet::find(TableId id, const GroupType& group, std::uint64_t ell) const {
  for (const auto& r : rows_) {
    if (r.table != id) continue;
    if (group.is_imprimitive()) {
      if (family_matches(r, group.imprimitive_params(), ell)) return &r;
      continue;
    }
    if (!group.is_exceptional()) continue;
    auto st = group.shephard_todd();
    bool hit = r.shephard_todd == st ||
               std::find(r.shephard_todd_range.begin(), r.shephard_todd_range.end(), st) !=
                   r.shephard_todd_range.end();
    if (!hit) continue;
    if (r.all_primes ? exceptional_order(st) % ell == 0 : r.covers_prime(ell)) return &r;
  }
  return nullptr;
}

const TableRow& TableSet::lookup(TableId id, const GroupType& group, std::uint64_t ell) const {
  if (const auto* r = find(id, group, ell)) return *r;
  throw NotFound(std::string(table_code(id)) + " has no row for " + group.to_string() +
                 " at ell=" + std::to_string(ell));
}

std::vector<const TableRow*> TableSet::nonunique_rows(unsigned shephard_todd,
                                                      std::uint64_t ell) const {
  std::vector<const TableRow*> out;
  for (const auto& r : rows_) {
    if (r.table == TableId::NonUnique && r.shephard_todd == shephard_todd && r.covers_prime(ell)) {
      out.push_back(&r);
    }
  }
  return out;
}

std::vector<std::string> ConsistencyReport::anomaly_ids() const {
  std::vector<std::string> ids;
  for (const auto& a : anomalies) {
    if (std::find(ids.begin(), ids.end(), a.id) == ids.end()) ids.push_back(a.id);
  }
  return ids;
}

std::vector<std::string> ConsistencyReport::unexpected_ids() const {
  std::vector<std::string> ids;
  for (const auto& a : anomalies) {
    if (!a.expected && std::find(ids.begin(), ids.end(), a.id) == ids.end()) ids.push_back(a.id);
  }
  return ids;
}

std::vector<std::string> ConsistencyReport::missing_expected_ids() const {
  std::vector<std::string> missing;
  auto ids = anomaly_ids();
  for (auto known : {kAnomalyG1Condition, kAnomalyT2Block, kAnomalyG26Typo}) {
    if (std::find(ids.begin(), ids.end(), known) == ids.end()) missing.emplace_back(known);
  }
  return missing;
}

bool ConsistencyReport::matches_known() const {
  return unexpected_ids().empty() && missing_expected_ids().empty();
}

namespace {

class Checker {
 public:
  explicit Checker(const TableSet& t) : t_(t) {}

  ConsistencyReport run() {
    check_order_columns();
    check_cuspidal_column();
    check_cuspidal_table();
    check_g1_condition();
    check_family_cuspidality();
    check_supercuspidal();
    check_observation();
    check_nonunique();
    return std::move(report_);
  }

 private:
  void flag(std::string id, const TableRow& row, std::string detail, bool expected) {
    report_.anomalies.push_back(
        Anomaly{std::move(id), row.table, row.group_text, row.line, std::move(detail), expected});
  }

  void check(bool ok, std::string_view id, const TableRow& row, const std::string& detail,
             bool expected = false) {
    ++report_.checks;
    if (!ok) flag(std::string(id), row, detail, expected);
  }

  static bool is_concrete(const TableRow& r) { return r.shephard_todd.has_value(); }

  static bool is_reflection(const TableRow& r) {
    return r.table == TableId::Reflection || r.table == TableId::ReflectionRank2;
  }

  // T1 and T3 orders divide |G| and attain its full valuation; the |G|
  // annotation agrees with the classical order.
  void check_order_columns() {
    for (const auto& row : t_.rows()) {
      if (!is_concrete(row)) continue;
      const auto st = *row.shephard_todd;
      const BigInt order_g = exceptional_order(st);
      auto g_text = row.annotation("G");
      if (!g_text.empty()) {
        check(parse_factored(g_text).value == order_g, "group-order", row,
              "|G| annotation " + g_text + " disagrees with " + format_factored(order_g));
      }
      const bool full_valuation = row.table == TableId::Parabolic || is_reflection(row);
      for (const auto& m : row.members) {
        if (!m.irregular_separators.empty()) {
          bool known = row.table == TableId::Reflection && st == 26;
          check(false, known ? kAnomalyG26Typo : "order-format", row,
                "order '" + m.order_text + "' uses separator '" + m.irregular_separators.front() +
                    "'",
                known);
        }
        const BigInt& ord = *m.order;
        if (row.table == TableId::Cuspidal || row.table == TableId::Supercuspidal) continue;
        check(ord > 0 && order_g % ord == 0, "order-divisibility", row,
              m.label + " order " + m.order_text + " does not divide |G|");
        if (!full_valuation) continue;
        for (auto ell : row.primes) {
          check(valuation::nu(ell, ord) == valuation::nu(ell, order_g), "order-valuation", row,
                m.label + " order " + m.order_text + " misses part of the " +
                    std::to_string(ell) + "-valuation of |G|");
        }
      }
    }
  }

  // Exceptional indices that T1 marks cuspidal at each prime, read from the
  // answers (P = G) rather than the annotation column.
  std::map<unsigned, std::set<std::uint64_t>> t1_cuspidal() const {
    std::map<unsigned, std::set<std::uint64_t>> out;
    for (const auto* row : t_.rows_of(TableId::Parabolic)) {
      if (row->is_range()) {
        for (auto st : row->shephard_todd_range) {
          for (auto ell : prime_divisors(exceptional_order(st))) out[st].insert(ell);
        }
        continue;
      }
      if (!is_concrete(*row)) continue;
      auto st = *row->shephard_todd;
      out[st];
      for (const auto& m : row->members) {
        if (*m.type == GroupType::exceptional(st)) {
          out[st].insert(row->primes.begin(), row->primes.end());
        }
      }
    }
    return out;
  }

  static std::string prime_list(const std::set<std::uint64_t>& s) {
    std::string out;
    for (auto p : s) out += (out.empty() ? "" : ",") + std::to_string(p);
    return out.empty() ? "-" : out;
  }

  static std::set<std::uint64_t> parse_prime_list(const std::string& text) {
    std::set<std::uint64_t> out;
    for (auto piece : split(text, ',')) {
      if (auto v = parse_uint(piece)) out.insert(*v);
    }
    return out;
  }

  // T1's own "ℓ cuspidal" column agrees with its P = G answers.
  void check_cuspidal_column() {
    auto derived = t1_cuspidal();
    for (const auto* row : t_.rows_of(TableId::Parabolic)) {
      if (!is_concrete(*row)) continue;
      auto claimed = parse_prime_list(row->annotation("cuspidal"));
      auto& actual = derived[*row->shephard_todd];
      check(claimed == actual, "T1-cuspidal-column", *row,
            "cuspidal column " + prime_list(claimed) + " but P = G at " + prime_list(actual));
    }
  }

  // T2 lists exactly the T1 cuspidal primes, with T1's |G|.
  void check_cuspidal_table() {
    auto derived = t1_cuspidal();
    std::map<unsigned, std::set<std::uint64_t>> listed;
    std::map<unsigned, const TableRow*> row_of;
    for (const auto* row : t_.rows_of(TableId::Cuspidal)) {
      if (row->is_range()) {
        for (auto st : row->shephard_todd_range) {
          for (auto ell : prime_divisors(exceptional_order(st))) listed[st].insert(ell);
          row_of[st] = row;
        }
        continue;
      }
      if (!is_concrete(*row)) continue;
      auto st = *row->shephard_todd;
      listed[st].insert(row->primes.begin(), row->primes.end());
      row_of[st] = row;
      const auto& m = row->members.front();
      bool in_block = st >= 30 && st <= 32;
      check(*m.order == exceptional_order(st), in_block ? kAnomalyT2Block : "T2-order", *row,
            "|G| listed as " + m.order_text + ", Table 1 has " +
                format_factored(exceptional_order(st)),
            in_block);
    }
    for (const auto& [st, primes] : derived) {
      auto it = row_of.find(st);
      const TableRow* anchor = it != row_of.end() ? it->second : nullptr;
      if (!anchor) {
        if (!primes.empty()) {
          const auto& t1 = t_.lookup(TableId::Parabolic, GroupType::exceptional(st), *primes.begin());
          check(false, "T2-missing-group", t1,
                "G" + std::to_string(st) + " cuspidal at " + prime_list(primes) +
                    " but absent from Table 2");
        }
        continue;
      }
      bool in_block = st >= 30 && st <= 32;
      check(listed[st] == primes, in_block ? kAnomalyT2Block : "T2-cuspidal-primes", *anchor,
            "G" + std::to_string(st) + ": Table 2 lists " + prime_list(listed[st]) +
                ", Table 1 has P = G at " + prime_list(primes),
            in_block);
    }
  }

  // T1 gives a closed-form condition for G1; evaluate it against the
  // partition formula that T1 itself states, and do the same for T2's row.
  void check_g1_condition() {
    const TableRow* t1 = nullptr;
    for (const auto* row : t_.rows_of(TableId::Parabolic)) {
      if (row->family == "G(1,1,n)") t1 = row;
    }
    const TableRow* t2 = nullptr;
    for (const auto* row : t_.rows_of(TableId::Cuspidal)) {
      if (row->family == "G(1,1,ℓ^i)") t2 = row;
    }
    if (!t1 || !t2) return;
    auto threshold = [](const std::string& text, std::string_view var) -> std::uint64_t {
      for (std::string_view op : {"≥", ">="}) {
        auto key = std::string(var) + std::string(op);
        auto pos = text.find(key);
        if (pos != std::string::npos) {
          auto rest = std::string_view(text).substr(pos + key.size());
          std::uint64_t v = 0;
          std::from_chars(rest.data(), rest.data() + rest.size(), v);
          return v;
        }
      }
      return 1;
    };
    auto q_min = threshold(t1->annotation("cuspidal"), "q");
    auto i_min = threshold(t2->annotation("range"), "i");
    std::string t1_miss;
    std::string t2_miss;
    for (std::uint64_t ell : {2, 3, 5, 7}) {
      for (std::uint64_t n = std::max<std::uint64_t>(2, ell); n <= 64; ++n) {
        auto lambda = valuation::minimal_factorial_partition(ell, n);
        bool whole = lambda.length() == 1;
        ++report_.checks;
        if (is_power_of(n, ell, static_cast<unsigned>(q_min)) != whole && t1_miss.empty()) {
          t1_miss = "n=" + std::to_string(n) + ", ℓ=" + std::to_string(ell);
        }
        if (is_power_of(n, ell, static_cast<unsigned>(i_min)) != whole && t2_miss.empty()) {
          t2_miss = "n=" + std::to_string(n) + ", ℓ=" + std::to_string(ell);
        }
      }
    }
    if (!t1_miss.empty()) {
      flag(std::string(kAnomalyG1Condition), *t1,
           "condition '" + t1->annotation("cuspidal") + "' disagrees with P_ℓ = G(1,1,n) at " +
               t1_miss,
           true);
    }
    if (!t2_miss.empty()) {
      flag("T2-G1-range", *t2, "range disagrees with P_ℓ = G(1,1,n) at " + t2_miss, false);
    }
  }

  template <class F>
  static void for_grid(F&& f) {
    for (std::uint64_t m = 1; m <= 12; ++m) {
      for (std::uint64_t p = 1; p <= m; ++p) {
        if (m % p != 0) continue;
        for (std::uint64_t n = 1; n <= 6; ++n) {
          if (n == 1 && p != 1) continue;
          if (m == 1 && n == 1) continue;
          ImprimitiveParams g{m, p, n};
          for (auto ell : prime_divisors(g.order())) f(g, ell);
        }
      }
    }
  }

  // T1's family cuspidal conditions (G2, G3) agree with T2's family rows.
  void check_family_cuspidality() {
    for_grid([&](const ImprimitiveParams& g, std::uint64_t ell) {
      if (g.m == 1) return;
      const TableRow* t1 = nullptr;
      for (const auto* row : t_.rows_of(TableId::Parabolic)) {
        if (family_matches(*row, g, ell)) {
          t1 = row;
          break;
        }
      }
      if (!t1) return;
      bool t1_cusp = condition_holds(t1->annotation("cuspidal"), g, ell);
      bool t2_cusp = t_.find(TableId::Cuspidal, GroupType::imprimitive(g.m, g.p, g.n), ell);
      check(t1_cusp == t2_cusp, "T2-family", *t1,
            "G(" + std::to_string(g.m) + "," + std::to_string(g.p) + "," + std::to_string(g.n) +
                ") at ℓ=" + std::to_string(ell) + " cuspidal per Table 1 but not Table 2");
    });
  }

  // T4 => T2 and T4 <=> "T3 has a single class equal to G".
  void check_supercuspidal() {
    std::set<std::pair<unsigned, std::uint64_t>> t4;
    for (const auto* row : t_.rows_of(TableId::Supercuspidal)) {
      if (!is_concrete(*row)) continue;
      auto st = *row->shephard_todd;
      check(*row->members.front().order == exceptional_order(st), "T4-order", *row,
            "|G| listed as " + row->members.front().order_text);
      for (auto ell : row->primes) {
        t4.emplace(st, ell);
        check(t_.find(TableId::Cuspidal, GroupType::exceptional(st), ell) != nullptr,
              "T4-not-cuspidal", *row,
              "supercuspidal at " + std::to_string(ell) + " but not listed in Table 2");
      }
    }
    std::set<std::pair<unsigned, std::uint64_t>> t3;
    for (const auto& row : t_.rows()) {
      if (!is_reflection(row) || !is_concrete(row)) continue;
      auto st = *row.shephard_todd;
      if (row.members.size() == 1 && *row.members.front().type == GroupType::exceptional(st)) {
        for (auto ell : row.primes) t3.emplace(st, ell);
      }
    }
    for (const auto& [st, ell] : t3) {
      ++report_.checks;
      if (!t4.count({st, ell})) {
        const auto& r = t_.lookup(TableId::Reflection, GroupType::exceptional(st), ell);
        flag("T4-missing", r, "R_ℓ = G at ℓ=" + std::to_string(ell) + " but absent from Table 4",
             false);
      }
    }
    for (const auto& [st, ell] : t4) {
      ++report_.checks;
      if (!t3.count({st, ell})) {
        const auto& r = t_.lookup(TableId::Supercuspidal, GroupType::exceptional(st), ell);
        flag("T4-extra", r, "listed supercuspidal at ℓ=" + std::to_string(ell) +
                                " but Table 3 has R_ℓ proper",
             false);
      }
    }
    for_grid([&](const ImprimitiveParams& g, std::uint64_t ell) {
      auto type = GroupType::imprimitive(g.m, g.p, g.n);
      if (!t_.find(TableId::Supercuspidal, type, ell)) return;
      check(t_.find(TableId::Cuspidal, type, ell) != nullptr, "T4-family-not-cuspidal",
            *t_.find(TableId::Supercuspidal, type, ell), type.to_string() + " at ℓ=" +
                std::to_string(ell));
    });
  }

  bool supercuspidal_in_t4(const GroupType& type, std::uint64_t ell) const {
    for (const auto& c : type.components()) {
      if (c.order() % ell != 0) continue;
      if (!t_.find(TableId::Supercuspidal, c, ell)) return false;
    }
    return true;
  }

  // Whenever P_ℓ is proper, ℓ is supercuspidal for P_ℓ.
  void check_observation() {
    for (const auto* row : t_.rows_of(TableId::Parabolic)) {
      if (!is_concrete(*row)) continue;
      auto st = *row->shephard_todd;
      const auto& m = row->members.front();
      if (*m.type == GroupType::exceptional(st)) continue;
      for (auto ell : row->primes) {
        check(supercuspidal_in_t4(*m.type, ell), "observation", *row,
              m.label + " is not supercuspidal at ℓ=" + std::to_string(ell) + " per Table 4");
      }
    }
  }

  // T5 agrees with the multiplicities in T3, every non-unique T3 entry has
  // a T5 row, and the G(m,p,n) class count formula matches alpha_class_count.
  void check_nonunique() {
    std::set<std::pair<unsigned, std::uint64_t>> covered;
    for (const auto* row : t_.rows_of(TableId::NonUnique)) {
      if (!is_concrete(*row)) continue;
      auto st = *row->shephard_todd;
      for (auto ell : row->primes) {
        covered.emplace(st, ell);
        auto type = GroupType::exceptional(st);
        const TableRow* r3 = t_.find(TableId::Reflection, type, ell);
        if (!r3) r3 = t_.find(TableId::ReflectionRank2, type, ell);
        if (!r3) {
          check(false, "T5-orphan", *row, "no Table 3 row at ℓ=" + std::to_string(ell));
          continue;
        }
        const auto& label = row->members.front();
        std::uint64_t count = 0;
        bool order_ok = true;
        for (const auto& m : r3->members) {
          if (m.base_label != label.base_label) continue;
          ++count;
          order_ok = order_ok && *m.order == *label.order;
        }
        check(row->class_count && *row->class_count == count, "T5-count", *row,
              label.label + ": " + row->class_count_text + " classes vs " +
                  std::to_string(count) + " in Table 3");
        check(order_ok, "T5-order", *row, label.label + " order disagrees with Table 3");
      }
    }
    for (const auto& row : t_.rows()) {
      if (!is_reflection(row) || !is_concrete(row) || row.members.size() < 2) continue;
      for (auto ell : row.primes) {
        check(covered.count({*row.shephard_todd, ell}) > 0, "T5-missing", row,
              "several classes at ℓ=" + std::to_string(ell) + " but no Table 5 row");
      }
    }
    const TableRow* family = nullptr;
    for (const auto* row : t_.rows_of(TableId::NonUnique)) {
      if (row->is_family()) family = row;
    }
    if (!family) return;
    for (std::uint64_t m = 2; m <= 24; ++m) {
      for (std::uint64_t p = 1; p <= m; ++p) {
        if (m % p != 0) continue;
        for (std::uint64_t n = 2; n <= 8; ++n) {
          for (auto ell : prime_divisors(BigInt(p))) {
            if (!family_matches(*family, {m, p, n}, ell)) continue;
            auto li = upow(ell, valuation::nu(ell, m));
            auto lj = upow(ell, valuation::nu(ell, p));
            auto delta = AugmentedPartition::make({{li, lj, n}}, {m, p, n});
            check(alpha_class_count(delta) == std::gcd(p / lj, n), "T5-family-count", *family,
                  "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) +
                      ")");
          }
        }
      }
    }
  }

  const TableSet& t_;
  ConsistencyReport report_;
};

}  // namespace

ConsistencyReport check_consistency(const TableSet& tables) { return Checker(tables).run(); }

}  // namespace sylow::tables
