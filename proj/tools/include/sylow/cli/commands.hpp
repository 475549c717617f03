#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sylow/classifier.hpp"

/// The sylowclass command line: classify, sylow, tables, verify.
namespace sylow::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitVerification = 4,
};

enum class Format { Text, Markdown, Json };

Format parse_format(std::string_view text);

struct ClassEntry {
  std::string label;
  std::string order_factored;
  std::optional<std::uint64_t> twist_index;

  friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

/// One classification answer in the JSON schema's vocabulary.
struct ClassificationReport {
  std::string group;
  std::string order_factored;
  std::uint64_t ell = 0;
  std::string kind;
  std::vector<ClassEntry> classes;
  bool cuspidal = false;
  bool supercuspidal = false;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport make_report(const SubgroupClassResult& result);

std::string to_json(const ClassificationReport& report);
/// Throws ParseError on malformed input.
ClassificationReport report_from_json(std::string_view text);

std::string render(const ClassificationReport& report, Format format);

/// Order cap for the oracle: SYLOW_ORACLE_CAP if set, else the default.
std::uint64_t oracle_cap_from_env();

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylow::cli
