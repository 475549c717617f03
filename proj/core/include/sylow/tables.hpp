#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/group_model.hpp"

/// The five published tables as embedded, checksummed data, plus a
/// cross-table consistency checker.
namespace sylow::tables {

enum class TableId {
  Parabolic,        // T1
  Cuspidal,         // T2
  Reflection,       // T3
  ReflectionRank2,  // T3b
  Supercuspidal,    // T4
  NonUnique,        // T5
};

/// "T1", "T2", "T3", "T3b", "T4", "T5".
std::string_view table_code(TableId id);
/// "parabolic", "cuspidal", "reflection", "reflection-rank2", "supercuspidal",
/// "nonunique".
std::string_view table_slug(TableId id);
std::string_view table_caption(TableId id);
/// Accepts codes and slugs; throws ParseError otherwise.
TableId parse_table_id(std::string_view text);

struct Member {
  /// As tabulated, including a leading '~' for a second class ("~A2").
  std::string label;
  /// Label without the '~'.
  std::string base_label;
  /// 0 for the plain label, 1 for the tilde class.
  unsigned distinguisher = 0;
  /// Parsed group for concrete rows; empty for family patterns.
  std::optional<GroupType> type;
  std::string order_text;
  std::optional<BigInt> order;
  /// Separators in order_text other than '*' (kept to report typos).
  std::vector<std::string> irregular_separators;
};

struct TableRow {
  TableId table = TableId::Parabolic;
  std::size_t line = 0;
  std::string group_text;
  /// Shephard-Todd index for single exceptional rows.
  std::optional<unsigned> shephard_todd;
  /// Classical name after '=' ("H3", "C3×T", "G(1,1,n)").
  std::string group_name;
  /// Indices covered by a range row such as "G{5,7-22}".
  std::vector<unsigned> shephard_todd_range;
  /// Family pattern for parametric rows ("G(m,p,n)", "G(ℓ^i,1,ℓ^j)", ...).
  std::string family;

  std::string ell_text;
  std::vector<std::uint64_t> primes;
  bool all_primes = false;
  /// Symbolic condition for family rows ("ℓ∣m", "ℓ∣m,ℓ∤p", ...).
  std::string condition;

  std::vector<Member> members;
  std::string class_count_text;
  std::optional<std::uint64_t> class_count;
  std::map<std::string, std::string, std::less<>> annotations;

  bool is_family() const { return !family.empty(); }
  bool is_range() const { return !shephard_todd_range.empty(); }
  bool covers_prime(std::uint64_t ell) const;
  std::string annotation(std::string_view key) const;
};

std::uint64_t fnv1a64(std::string_view text);

/// Checksum of the shipped table edition.
inline constexpr std::uint64_t kEditionChecksum = 0x217ecdb31a94c1d5ULL;

/// Raw text compiled into the library.
std::string_view embedded_table_text();

class TableSet {
 public:
  /// Throws ParseError with the offending line number.
  static TableSet parse(std::string_view text);
  static TableSet load_file(const std::filesystem::path& path);
  /// Parsed once; throws if the embedded text does not match kEditionChecksum.
  static const TableSet& embedded();

  const std::vector<TableRow>& rows() const { return rows_; }
  std::vector<const TableRow*> rows_of(TableId id) const;
  std::uint64_t checksum() const { return checksum_; }

  /// First row of `id` matching the group and prime; family rows match by
  /// pattern and condition. Throws NotFound.
  const TableRow& lookup(TableId id, const GroupType& group, std::uint64_t ell) const;
  const TableRow* find(TableId id, const GroupType& group, std::uint64_t ell) const;
  /// All T5 rows for an exceptional group and prime.
  std::vector<const TableRow*> nonunique_rows(unsigned shephard_todd, std::uint64_t ell) const;

 private:
  std::vector<TableRow> rows_;
  std::uint64_t checksum_ = 0;
};

/// Does G(m,p,n) (with the given prime) match a family row?
bool family_matches(const TableRow& row, const ImprimitiveParams& g, std::uint64_t ell);

struct Anomaly {
  std::string id;
  TableId table = TableId::Parabolic;
  std::string group;
  /// Data-file line of the row that raised it.
  std::size_t line = 0;
  std::string detail;
  bool expected = false;
};

/// Ids of the anomalies that the shipped edition is known to contain.
inline constexpr std::string_view kAnomalyG1Condition = "T1-G1-cuspidal-exponent";
inline constexpr std::string_view kAnomalyT2Block = "T2-G30-G32-block";
inline constexpr std::string_view kAnomalyG26Typo = "T3-G26-order-typo";

struct ConsistencyReport {
  std::vector<Anomaly> anomalies;
  std::size_t checks = 0;

  /// Distinct anomaly ids, in first-seen order.
  std::vector<std::string> anomaly_ids() const;
  std::vector<std::string> unexpected_ids() const;
  std::vector<std::string> missing_expected_ids() const;
  /// Exactly the known anomalies, each at least once, and nothing else.
  bool matches_known() const;
};

/// Order divisibility and full valuation of every concrete order column,
/// Table 2 against Table 1, Table 4 against Tables 2 and 3, Table 5 against
/// Table 3, and the non-cuspidal => supercuspidal-parabolic property.
ConsistencyReport check_consistency(const TableSet& tables);

}  // namespace sylow::tables
