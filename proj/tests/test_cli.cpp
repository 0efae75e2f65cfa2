#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using dl4x::cli::run;
using Json = nlohmann::json;

namespace {

const std::string kData = DL4X_TEST_DATA;

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, ConsistentKb) {
  auto r = call({kData + "/kid.owl"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "Consistent");
  EXPECT_NE(r.out.find("models: 2, branches: 2"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, InconsistentKb) {
  auto r = call({"check", kData + "/synonyms_contradiction.owl"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(first_line(r.out), "Inconsistent");
}

TEST(Cli, EmitSections) {
  auto r = call({kData + "/kid.owl", "--emit-coding", "--emit-expansion", "--emit-tableau", "--emit-models",
                 "--emit-eqset", "--trace"});
  ASSERT_EQ(r.code, 0);
  for (const char* s : {"# coding", "# expansion", "# trace", "# tableau", "# equivalence classes", "# models"})
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
  EXPECT_NE(r.out.find("V0{Ann} $IN V1{Kid}    [E-Rule]"), std::string::npos);
}

TEST(Cli, JsonOutput) {
  auto r = call({kData + "/synonyms.owl", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Consistent");
  EXPECT_EQ(j["models"].size(), 1u);
  EXPECT_EQ(j["eqClasses"][0]["classes"].size(), 3u);
  EXPECT_EQ(j["stats"]["branches"], 1);
  EXPECT_TRUE(j["stats"].contains("elapsedMs"));
}

TEST(Cli, TextAndJsonAgree) {
  for (const char* f : {"kid.owl", "kid_not_person.owl", "synonyms.owl", "synonyms_contradiction.owl"}) {
    auto text = call({kData + "/" + f});
    auto json = call({kData + "/" + f, "--format", "json"});
    EXPECT_EQ(text.code, json.code) << f;
    EXPECT_EQ(Json::parse(json.out)["verdict"], first_line(text.out)) << f;
  }
}

TEST(Cli, InputErrors) {
  auto missing = call({kData + "/missing.owl"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(missing.out.empty());
  EXPECT_EQ(missing.err.rfind("dl4x: error: ", 0), 0u);
  EXPECT_EQ(missing.err.find('\n'), missing.err.size() - 1);

  EXPECT_EQ(call({kData + "/kid.owl", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({kData + "/kid.owl", "--strict-declarations"}).code, 0);
  EXPECT_EQ(call({}).code, 2);
}

TEST(Cli, ResourceLimit) {
  auto r = call({kData + "/kid.owl", "--max-instances", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("dl4x: resource limit: ", 0), 0u);
}

TEST(Cli, Oracle) {
  auto sat = call({"oracle", kData + "/kid.owl"});
  EXPECT_EQ(sat.code, 0);
  auto unsat = call({"oracle", kData + "/synonyms_contradiction.owl"});
  EXPECT_EQ(unsat.code, 1);
  EXPECT_EQ(first_line(unsat.out), "Unsatisfiable");
  EXPECT_EQ(call({"oracle", kData + "/synonyms.owl", "--max-atoms", "3"}).code, 3);
}
