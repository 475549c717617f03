#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "sylow/classifier.hpp"
#include "sylow/cli/commands.hpp"
#include "sylow/errors.hpp"

namespace {

using namespace sylow;
using namespace sylow::cli;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, std::string_view needle) {
  return text.find(needle) != std::string::npos;
}

TEST(Classify, TwistedReflectionClasses) {
  auto r = invoke({"classify", "--group", "G(12,6,3)", "--ell", "2", "--kind", "reflection",
                   "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"].size(), 3U);
  EXPECT_EQ(j["classes"][0]["label"], "G(4,2,3)");
  EXPECT_EQ(j["classes"][0]["order_factored"], "2^6*3");
  EXPECT_EQ(j["supercuspidal"], false);
}

TEST(Classify, ExceptionalReflection) {
  auto r = invoke({"classify", "--group", "G28", "--ell", "3", "--kind", "reflection"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(has(r.out, "A2^2")) << r.out;
  EXPECT_TRUE(has(r.out, "2^2*3^2")) << r.out;
}

TEST(Classify, ParabolicNotCuspidal) {
  auto r = invoke({"classify", "-g", "G(6,1,5)", "-l", "5", "-k", "parabolic", "-f", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"][0]["label"], "G(1,1,5)");
  EXPECT_EQ(j["cuspidal"], false);
}

TEST(Classify, ExitCodes) {
  EXPECT_EQ(invoke({"classify", "--group", "G(4,2,3)", "--ell", "5"}).code, kExitDomain);
  EXPECT_EQ(invoke({"classify", "--group", "G(4,3,3)", "--ell", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"classify", "--group", "nonsense", "--ell", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"classify", "--ell", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Report, JsonRoundTrip) {
  for (auto kind : {SubgroupKind::Parabolic, SubgroupKind::Reflection}) {
    auto rep = make_report(classify(GroupType::imprimitive(12, 6, 3), 2, kind));
    EXPECT_EQ(report_from_json(to_json(rep)), rep);
  }
  EXPECT_THROW(report_from_json("{"), ParseError);
  EXPECT_THROW(report_from_json("{\"group\": 3}"), ParseError);
}

TEST(Report, FormatParsing) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("markdown"), Format::Markdown);
  EXPECT_THROW(parse_format("yaml"), ParseError);
}

TEST(Sylow, Examples) {
  auto a = invoke({"sylow", "--group", "G12", "--ell", "2"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_TRUE(has(a.out, "SD16"));
  EXPECT_TRUE(has(a.out, "16"));
  auto b = invoke({"sylow", "--group", "G(1,1,6)", "--ell", "2"});
  EXPECT_TRUE(has(b.out, "C2 × W(2,2)")) << b.out;
  auto c = invoke({"sylow", "--group", "G(8,1,1)", "--ell", "2"});
  EXPECT_TRUE(has(c.out, "C8")) << c.out;
  EXPECT_EQ(invoke({"sylow", "--group", "G12", "--ell", "5"}).code, kExitDomain);
}

TEST(Tables, SupercuspidalMarkdown) {
  auto r = invoke({"tables", "--id", "supercuspidal", "--format", "markdown"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::size_t rows = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("| G", 0) == 0 && line.rfind("| Group", 0) != 0) ++rows;
  }
  EXPECT_EQ(rows, 13U) << r.out;
}

TEST(Tables, NonUniqueListsG26) {
  auto r = invoke({"tables", "--id", "nonunique"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(has(r.out, "G26"));
  EXPECT_TRUE(has(r.out, "L3"));
  EXPECT_TRUE(has(r.out, "B3(3)"));
}

TEST(Tables, CuspidalJsonCarriesAnomalies) {
  auto r = invoke({"tables", "--id", "cuspidal", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["code"], "T2");
  EXPECT_FALSE(j["rows"].empty());
  bool block = false;
  for (const auto& a : j["anomalies"]) block |= a["id"] == "T2-G30-G32-block";
  EXPECT_TRUE(block);
}

TEST(Verify, SingleGroup) {
  auto r = invoke({"verify", "--group", "G(12,6,3)", "--ell", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(has(r.out, "reflection classes 3")) << r.out;
}

TEST(Verify, SmallCampaign) {
  auto r = invoke({"verify", "--max-order", "200", "--quiet"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}

TEST(Verify, Observation) {
  auto r = invoke({"verify", "--observation"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(has(r.out, "0 violations")) << r.out;
}

TEST(Env, OracleCap) {
  ::unsetenv("SYLOW_ORACLE_CAP");
  EXPECT_EQ(oracle_cap_from_env(), 20000U);
  ::setenv("SYLOW_ORACLE_CAP", "500", 1);
  EXPECT_EQ(oracle_cap_from_env(), 500U);
  ::setenv("SYLOW_ORACLE_CAP", "lots", 1);
  EXPECT_THROW(oracle_cap_from_env(), InvalidArgument);
  ::unsetenv("SYLOW_ORACLE_CAP");
}

}  // namespace
