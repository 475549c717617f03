#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylow/tables.hpp"

/// Regeneration of the tables from the classifier, row by row, with the
/// consistency anomalies attached to the rows that raised them.
namespace sylow::tables {

enum class RowStatus {
  Verified,
  /// Carries a consistency anomaly.
  Anomaly,
  /// Produced by the classifier but absent from the data.
  Added,
  /// Disagrees with the classifier with no anomaly to explain it.
  Mismatch,
};

std::string_view status_name(RowStatus s);

struct RegeneratedRow {
  std::string group;
  std::string ell;
  std::vector<std::string> labels;
  std::vector<std::string> orders;
  std::string class_count;
  /// Cuspidal primes (Tables 1, 2), "supercuspidal" (Tables 3, 4), or empty.
  std::string marking;
  RowStatus status = RowStatus::Verified;
  std::vector<std::string> anomaly_ids;
  std::string detail;
  /// Data-file line; 0 for added rows.
  std::size_t line = 0;

  friend bool operator==(const RegeneratedRow&, const RegeneratedRow&) = default;
};

struct RegeneratedTable {
  TableId id = TableId::Parabolic;
  std::vector<RegeneratedRow> rows;
  /// Grid points used to evaluate the parametric rows.
  std::size_t family_samples = 0;

  std::size_t count(RowStatus s) const;
  /// No row is a mismatch.
  bool reproduced() const { return count(RowStatus::Mismatch) == 0; }
};

/// Rebuilds one table. Concrete rows are recomputed through the classifier;
/// parametric rows are evaluated on every G(m,p,n) with m <= 12, n <= 6 they
/// match.
RegeneratedTable regenerate_table(TableId id, const TableSet& data = TableSet::embedded());
RegeneratedTable regenerate_table(TableId id, const TableSet& data,
                                  const ConsistencyReport& report);

/// Byte-stable markdown rendering with a caption line.
std::string render_markdown(const RegeneratedTable& table);

}  // namespace sylow::tables
