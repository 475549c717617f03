#include "sylow/cli/commands.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sylow/campaign.hpp"
#include "sylow/errors.hpp"
#include "sylow/oracle.hpp"
#include "sylow/sylow_structure.hpp"
#include "sylow/table_regen.hpp"
#include "sylow/valuation.hpp"

namespace sylow::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string group;
  std::string ell = "all";
  std::string kind = "reflection";
  std::string format = "text";
  std::string table = "all";
  std::optional<std::uint64_t> order_cap;
  std::uint64_t max_order = oracle::kDefaultOrderCap;
  std::uint64_t max_m = 24;
  std::uint64_t max_n = 8;
  unsigned threads = 0;
  bool observation = false;
  bool quiet = false;
};

std::vector<std::uint64_t> primes_for(const GroupType& g, const std::string& ell) {
  if (ell == "all") return prime_divisors(g.order());
  std::uint64_t value = 0;
  try {
    std::size_t used = 0;
    value = std::stoull(ell, &used);
    if (used != ell.size()) throw std::invalid_argument(ell);
  } catch (const std::logic_error&) {
    throw ParseError("--ell expects a prime or 'all', got '" + ell + "'");
  }
  if (!valuation::is_prime(value)) throw ParseError(ell + " is not prime");
  return {value};
}

std::string markdown_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// A single answer is printed bare; several are wrapped in an array.
void print_json_list(std::ostream& out, const std::vector<json>& items) {
  if (items.size() == 1) {
    out << items.front().dump(2) << "\n";
  } else {
    out << json(items).dump(2) << "\n";
  }
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto g = parse_group_spec(o.group);
  const auto kind = parse_kind(o.kind);
  const auto format = parse_format(o.format);
  std::vector<json> items;
  for (auto ell : primes_for(g, o.ell)) {
    auto report = make_report(classify(g, ell, kind));
    if (format == Format::Json) {
      items.push_back(json::parse(to_json(report)));
    } else {
      out << render(report, format);
    }
  }
  if (format == Format::Json) print_json_list(out, items);
  return kExitOk;
}

int cmd_sylow(const Options& o, std::ostream& out) {
  const auto g = parse_group_spec(o.group);
  const auto format = parse_format(o.format);
  std::vector<json> items;
  for (auto ell : primes_for(g, o.ell)) {
    const auto term = sylow_structure(g, ell);
    const auto order = format_factored(structure_order(term));
    switch (format) {
      case Format::Json:
        items.push_back({{"group", g.to_string()},
                         {"ell", ell},
                         {"structure", term.to_string()},
                         {"expanded", term.expand().to_string()},
                         {"order_factored", order}});
        break;
      case Format::Markdown:
        out << markdown_row({g.to_string(), std::to_string(ell), term.to_string(), order});
        break;
      case Format::Text:
        out << "Syl_" << ell << "(" << g.to_string() << ") = " << term.to_string()
            << ", order " << order << "\n";
        break;
    }
  }
  if (format == Format::Json) print_json_list(out, items);
  return kExitOk;
}

json table_json(const tables::RegeneratedTable& t, const tables::ConsistencyReport& report) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"group", r.group},
                    {"ell", r.ell},
                    {"members", r.labels},
                    {"orders", r.orders},
                    {"class_count", r.class_count},
                    {"marking", r.marking},
                    {"status", tables::status_name(r.status)},
                    {"anomalies", r.anomaly_ids},
                    {"detail", r.detail}});
  }
  json anomalies = json::array();
  for (const auto& a : report.anomalies) {
    if (a.table != t.id) continue;
    anomalies.push_back(
        {{"id", a.id}, {"group", a.group}, {"detail", a.detail}, {"expected", a.expected}});
  }
  return {{"id", tables::table_slug(t.id)},
          {"code", tables::table_code(t.id)},
          {"caption", tables::table_caption(t.id)},
          {"rows", rows},
          {"anomalies", anomalies}};
}

int cmd_tables(const Options& o, std::ostream& out) {
  const auto format = parse_format(o.format);
  const auto& data = tables::TableSet::embedded();
  const auto report = tables::check_consistency(data);
  std::vector<tables::TableId> ids;
  if (o.table == "all") {
    ids = {tables::TableId::Parabolic, tables::TableId::Cuspidal, tables::TableId::Reflection,
           tables::TableId::ReflectionRank2, tables::TableId::Supercuspidal,
           tables::TableId::NonUnique};
  } else {
    ids = {tables::parse_table_id(o.table)};
    // The reflection table continues with its rank-2 part.
    if (ids.front() == tables::TableId::Reflection) ids.push_back(tables::TableId::ReflectionRank2);
  }
  std::vector<json> items;
  bool first = true;
  for (auto id : ids) {
    auto t = tables::regenerate_table(id, data, report);
    if (format == Format::Json) {
      items.push_back(table_json(t, report));
    } else {
      if (!first) out << "\n";
      out << tables::render_markdown(t);
    }
    first = false;
  }
  if (format == Format::Json) print_json_list(out, items);
  return kExitOk;
}

void print_group_check(const campaign::GroupCheck& g, std::ostream& out) {
  out << "G(" << g.params.m << "," << g.params.p << "," << g.params.n << ")";
  if (g.skipped) {
    out << " skipped: " << g.notice << "\n";
    return;
  }
  out << " order " << g.order;
  for (const auto& p : g.primes) {
    out << "  ℓ=" << p.ell << ":" << (p.ok() ? "pass" : "FAIL");
  }
  out << "\n";
  for (const auto& p : g.primes) {
    if (!p.ok()) out << "    ℓ=" << p.ell << " " << p.detail << "\n";
  }
}

json group_check_json(const campaign::GroupCheck& g) {
  json primes = json::array();
  for (const auto& p : g.primes) {
    json refl = json::array();
    for (const auto& c : p.oracle_reflection) {
      refl.push_back({{"delta", c.delta.to_string()}, {"order", c.order}, {"class_size", c.class_size}});
    }
    primes.push_back({{"ell", p.ell},
                      {"parabolic", p.parabolic_ok},
                      {"reflection", p.reflection_ok},
                      {"class_sizes", p.class_sizes_ok},
                      {"sylow", p.sylow_ok},
                      {"sylow_order", p.sylow_order},
                      {"reflection_classes", refl},
                      {"detail", p.detail}});
  }
  return {{"group", GroupType::imprimitive(g.params.m, g.params.p, g.params.n).to_string()},
          {"order", g.order},
          {"skipped", g.skipped},
          {"notice", g.notice},
          {"pass", g.ok()},
          {"primes", primes}};
}

int cmd_observation(const Options& o, std::ostream& out) {
  const auto report = verify_observation(irreducible_catalog());
  if (parse_format(o.format) == Format::Json) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back(
          {{"group", v.group.to_string()}, {"ell", v.ell}, {"parabolic", v.parabolic.to_string()}});
    }
    out << json{{"checked", report.checked},
                {"non_cuspidal", report.non_cuspidal},
                {"violations", violations}}
               .dump(2)
        << "\n";
  } else {
    out << "observation: " << report.checked << " (group, prime) pairs, " << report.non_cuspidal
        << " non-cuspidal, " << report.violations.size() << " violations\n";
    for (const auto& v : report.violations) {
      out << "  " << v.group.to_string() << " at " << v.ell << ": " << v.parabolic.to_string()
          << " is not supercuspidal\n";
    }
  }
  return report.violations.empty() ? kExitOk : kExitVerification;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.observation) return cmd_observation(o, out);
  campaign::Options opts;
  opts.order_cap = o.order_cap.value_or(oracle_cap_from_env());
  opts.threads = o.threads;
  std::vector<ImprimitiveParams> groups;
  if (!o.group.empty()) {
    const auto g = parse_group_spec(o.group);
    if (!g.is_imprimitive()) {
      throw Unsupported("the oracle only enumerates G(m,p,n), not " + g.to_string());
    }
    groups.push_back(g.imprimitive_params());
    if (o.ell != "all") opts.primes = primes_for(g, o.ell);
    for (auto ell : opts.primes) {
      if (g.order() % ell != 0) {
        throw NotADivisor(std::to_string(ell) + " does not divide |" + g.to_string() + "|");
      }
    }
  } else {
    if (o.ell != "all") opts.primes = primes_for(GroupType::symmetric(1), o.ell);
    groups = campaign::imprimitive_grid({o.max_m, o.max_n, std::min(o.max_order, opts.order_cap)});
  }
  const auto format = parse_format(o.format);
  auto report = campaign::run(groups, opts, [&](const campaign::GroupCheck& g) {
    if (g.skipped) err << "notice: " << g.notice << "\n";
    if (format != Format::Json && !o.quiet) print_group_check(g, out);
  });
  if (format == Format::Json) {
    json items = json::array();
    for (const auto& g : report.groups) items.push_back(group_check_json(g));
    out << json{{"groups", items},
                {"checked", report.checked()},
                {"skipped", report.skipped()},
                {"failed", report.failed()}}
               .dump(2)
        << "\n";
  } else {
    if (groups.size() == 1 && !report.groups.front().skipped) {
      const auto& gc = report.groups.front();
      const auto type = GroupType::imprimitive(gc.params.m, gc.params.p, gc.params.n);
      for (const auto& p : gc.primes) {
        const auto predicted = classify_reflection(type, p.ell).class_count;
        out << "  ℓ=" << p.ell << ": reflection classes " << p.oracle_reflection.size()
            << " (theorem " << predicted << ")";
        if (!p.oracle_reflection.empty()) {
          out << " of " << p.oracle_reflection.front().delta.to_string() << ", order "
              << p.oracle_reflection.front().order;
        }
        out << "; Sylow order " << p.sylow_order << "\n";
      }
    }
    if (o.quiet) {
      for (const auto& g : report.groups) {
        if (!g.ok()) print_group_check(g, out);
      }
    }
    out << "verified " << report.checked() << " groups, " << report.skipped() << " skipped, "
        << report.failed() << " failed\n";
  }
  return report.ok() ? kExitOk : kExitVerification;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "markdown" || text == "md") return Format::Markdown;
  if (text == "json") return Format::Json;
  throw ParseError("unknown format '" + std::string(text) + "'");
}

ClassificationReport make_report(const SubgroupClassResult& result) {
  ClassificationReport r;
  r.group = result.group.to_string();
  r.order_factored = format_factored(result.group.order());
  r.ell = result.ell;
  r.kind = std::string(kind_name(result.kind));
  for (const auto& m : result.members) {
    r.classes.push_back({m.label, format_factored(m.order), m.twist_index});
  }
  r.cuspidal = is_cuspidal(result.group, result.ell);
  r.supercuspidal = is_supercuspidal(result.group, result.ell);
  return r;
}

std::string to_json(const ClassificationReport& report) {
  json classes = json::array();
  for (const auto& c : report.classes) {
    json entry = {{"label", c.label}, {"order_factored", c.order_factored}};
    entry["twist_index"] = c.twist_index ? json(*c.twist_index) : json(nullptr);
    classes.push_back(entry);
  }
  return json{{"group", report.group},
              {"order_factored", report.order_factored},
              {"ell", report.ell},
              {"kind", report.kind},
              {"classes", classes},
              {"cuspidal", report.cuspidal},
              {"supercuspidal", report.supercuspidal}}
      .dump(2);
}

ClassificationReport report_from_json(std::string_view text) {
  try {
    const auto j = json::parse(text);
    ClassificationReport r;
    r.group = j.at("group").get<std::string>();
    r.order_factored = j.at("order_factored").get<std::string>();
    r.ell = j.at("ell").get<std::uint64_t>();
    r.kind = j.at("kind").get<std::string>();
    for (const auto& c : j.at("classes")) {
      ClassEntry e;
      e.label = c.at("label").get<std::string>();
      e.order_factored = c.at("order_factored").get<std::string>();
      if (c.contains("twist_index") && !c.at("twist_index").is_null()) {
        e.twist_index = c.at("twist_index").get<std::uint64_t>();
      }
      r.classes.push_back(std::move(e));
    }
    r.cuspidal = j.at("cuspidal").get<bool>();
    r.supercuspidal = j.at("supercuspidal").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
}

std::string render(const ClassificationReport& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << to_json(report) << "\n";
      break;
    case Format::Markdown:
      out << "### " << report.group << ", ℓ = " << report.ell << ", " << report.kind << "\n\n"
          << "|G| = " << report.order_factored << "; cuspidal: " << yes_no(report.cuspidal)
          << "; supercuspidal: " << yes_no(report.supercuspidal) << "\n\n"
          << markdown_row({"Class", "Order", "Twist"}) << "|---|---|---|\n";
      for (const auto& c : report.classes) {
        out << markdown_row({c.label, c.order_factored,
                             c.twist_index ? std::to_string(*c.twist_index) : "-"});
      }
      out << "\n";
      break;
    case Format::Text:
      out << report.group << " (order " << report.order_factored << "), ℓ=" << report.ell
          << ", " << report.kind << ": " << report.classes.size()
          << (report.classes.size() == 1 ? " class" : " classes") << "\n";
      for (const auto& c : report.classes) {
        out << "  " << c.label << "  order " << c.order_factored;
        if (c.twist_index) out << "  twist " << *c.twist_index;
        out << "\n";
      }
      out << "  cuspidal: " << yes_no(report.cuspidal)
          << ", supercuspidal: " << yes_no(report.supercuspidal) << "\n";
      break;
  }
  return out.str();
}

std::uint64_t oracle_cap_from_env() {
  const char* env = std::getenv("SYLOW_ORACLE_CAP");
  if (!env || !*env) return oracle::kDefaultOrderCap;
  try {
    std::size_t used = 0;
    auto v = std::stoull(env, &used);
    if (used == std::string_view(env).size() && v > 0) return v;
  } catch (const std::logic_error&) {
  }
  throw ParseError(std::string("SYLOW_ORACLE_CAP must be a positive integer, got '") + env + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Minimal l-Sylow parabolic and reflection subgroups of unitary reflection groups",
               "sylowclass"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "Classify P_l or R_l of a group");
  classify->add_option("--group,-g", o.group, "Group spec, e.g. \"G(12,6,3)\", G28, \"G4 x S3\"")
      ->required();
  classify->add_option("--ell,-l", o.ell, "Prime or 'all'");
  classify->add_option("--kind,-k", o.kind, "parabolic or reflection")
      ->check(CLI::IsMember({"parabolic", "reflection"}));
  classify->add_option("--format,-f", o.format, "text, markdown or json");

  auto* sylow = app.add_subcommand("sylow", "Describe the l-Sylow subgroup");
  sylow->add_option("--group,-g", o.group, "Group spec")->required();
  sylow->add_option("--ell,-l", o.ell, "Prime or 'all'");
  sylow->add_option("--format,-f", o.format, "text, markdown or json");

  auto* tables = app.add_subcommand("tables", "Regenerate the classification tables");
  tables->add_option("--id,-i", o.table,
                     "parabolic, cuspidal, reflection, reflection-rank2, supercuspidal, "
                     "nonunique, T1..T5 or all");
  tables->add_option("--format,-f", o.format, "markdown or json");

  auto* verify = app.add_subcommand("verify", "Check the classifier against the brute-force oracle");
  verify->add_option("--group,-g", o.group, "Single G(m,p,n) instead of the grid");
  verify->add_option("--ell,-l", o.ell, "Prime or 'all'");
  verify->add_option("--max-order", o.max_order, "Largest group order on the grid");
  verify->add_option("--max-m", o.max_m, "Largest m on the grid");
  verify->add_option("--max-n", o.max_n, "Largest n on the grid");
  verify->add_option("--order-cap", o.order_cap, "Oracle enumeration cap (env SYLOW_ORACLE_CAP)");
  verify->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
  verify->add_flag("--observation", o.observation,
                   "Check that non-cuspidal primes are supercuspidal for P_l over the catalog");
  verify->add_flag("--quiet,-q", o.quiet, "Only print failing groups and the summary");
  verify->add_option("--format,-f", o.format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out);
    if (sylow->parsed()) return cmd_sylow(o, out);
    if (tables->parsed()) return cmd_tables(o, out);
    return cmd_verify(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotADivisor& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sylowclass"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sylow::cli
