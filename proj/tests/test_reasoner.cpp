#include <gtest/gtest.h>

#include "dl4x/errors.hpp"
#include "dl4x/owlxml.hpp"
#include "dl4x/reasoner.hpp"

using namespace dl4x;
using namespace dl4x::dl;

namespace {
const std::string kData = DL4X_TEST_DATA;
}

TEST(Decide, KidOntologyHasTwoModels) {
  Verdict v = decide(read_owl_xml_file(kData + "/kid.owl"));
  EXPECT_EQ(v.kind, VerdictKind::Consistent);
  EXPECT_EQ(v.models.size(), 2u);
  EXPECT_EQ(v.branches, 2u);
  EXPECT_EQ(v.clauses, 4u);
  EXPECT_EQ(v.stats.pb_rules, 1u);
  EXPECT_EQ(v.stats.e_rules, 2u);
  EXPECT_TRUE(v.witnesses.empty());
}

TEST(Decide, SynonymClasses) {
  Verdict v = decide(read_owl_xml_file(kData + "/synonyms.owl"));
  ASSERT_TRUE(v.consistent());
  ASSERT_EQ(v.models.size(), 1u);
  EXPECT_EQ(v.models[0].domain.size(), 5u);
  EXPECT_EQ(v.classes[0].nontrivial().size(), 3u);

  Verdict bad = decide(read_owl_xml_file(kData + "/synonyms_contradiction.owl"));
  EXPECT_EQ(bad.kind, VerdictKind::Inconsistent);
  EXPECT_TRUE(bad.models.empty());
  EXPECT_EQ(bad.witnesses.size(), 1u);
}

TEST(Decide, ContradictoryAssertions) {
  KnowledgeBase kb;
  kb.add(concept_assertion("a", concept_name("C")));
  kb.add(concept_assertion("a", negation(concept_name("C"))));
  Verdict v = decide(kb);
  EXPECT_EQ(v.kind, VerdictKind::Inconsistent);
  EXPECT_EQ(v.branches, 1u);
}

TEST(Decide, RoleAxioms) {
  KnowledgeBase kb;
  kb.add(irreflexive(role("R")));
  kb.add(role_assertion("a", "b", role("R")));
  kb.add(same_individual("a", "b"));
  EXPECT_EQ(decide(kb).kind, VerdictKind::Inconsistent);

  KnowledgeBase ok;
  ok.add(transitive(role("R")));
  ok.add(role_assertion("a", "b", role("R")));
  ok.add(role_assertion("b", "c", role("R")));
  ok.add(role_assertion("a", "c", negation(role("R"))));
  EXPECT_EQ(decide(ok).kind, VerdictKind::Inconsistent);
}

TEST(Decide, ErrorsBecomeVerdicts) {
  KnowledgeBase bad;
  bad.add(inclusion(concept_name("C"), exists(role("R"), concept_name("D"))));
  Verdict v = decide(bad);
  EXPECT_EQ(v.kind, VerdictKind::InputError);
  EXPECT_FALSE(v.error.empty());

  KnowledgeBase big;
  big.add(inclusion(concept_name("C"), at_most(2, role("R"), top())));
  EXPECT_EQ(decide(big, {.translate = {.max_cardinality = 1}}).kind, VerdictKind::ResourceLimit);
  EXPECT_THROW(run_pipeline(bad), InputError);
}

TEST(Decide, PipelineStages) {
  auto p = run_pipeline(read_owl_xml_file(kData + "/kid.owl"));
  EXPECT_EQ(p.translation.universals.size(), 1u);
  EXPECT_EQ(p.normalized.formulas.size(), 3u);
  EXPECT_EQ(p.expanded.clauses.size(), 4u);
  ASSERT_TRUE(p.tableau);
  EXPECT_EQ(verdict_of(*p.tableau).models.size(), 2u);
  EXPECT_STREQ(to_string(VerdictKind::Consistent), "Consistent");
}
