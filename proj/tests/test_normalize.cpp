#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "dl4x/codec.hpp"
#include "dl4x/errors.hpp"
#include "dl4x/normalize.hpp"
#include "dl4x/owlxml.hpp"
#include "random.hpp"

using namespace dl4x;

namespace {

const std::string kData = DL4X_TEST_DATA;

const Variable a = Variable::individual("a");
const Variable b = Variable::individual("b");
const Variable setA = Variable::set("A");
const Variable setB = Variable::set("B");

Literal in(const Variable& x, const Variable& s) { return pos(Atom::member(x, s)); }
Matrix m(const Literal& l) { return Matrix::literal(l); }

using Valuation = std::map<Atom, bool>;

bool eval(const Matrix& f, const Valuation& v) {
  auto ops = f.operands();
  switch (f.connective()) {
    case Connective::Literal: return v.at(f.lit().atom) == f.lit().positive;
    case Connective::True: return true;
    case Connective::False: return false;
    case Connective::Not: return !eval(ops[0], v);
    case Connective::And: return std::ranges::all_of(ops, [&](const Matrix& o) { return eval(o, v); });
    case Connective::Or: return std::ranges::any_of(ops, [&](const Matrix& o) { return eval(o, v); });
    case Connective::Implies: return !eval(ops[0], v) || eval(ops[1], v);
    case Connective::Iff: return eval(ops[0], v) == eval(ops[1], v);
  }
  return false;
}

bool eval(const Clause& c, const Valuation& v) {
  return std::ranges::any_of(c.disjuncts(), [&](const Literal& l) { return v.at(l.atom) == l.positive; });
}

// Five atoms, none of them a reflexive equality.
std::vector<Atom> atom_pool() {
  return {Atom::member(a, setA), Atom::member(a, setB), Atom::member(b, setA), Atom::member(b, setB),
          Atom::equal(a, b)};
}

Matrix random_propositional(gen::Rng& rng, int depth) {
  static const auto pool = atom_pool();
  std::uniform_int_distribution<int> d(0, 9);
  int k = d(rng);
  if (depth == 0 || k < 3) {
    if (k == 0 && depth > 0) return Matrix::truth();
    return Matrix::literal({pool[rng() % pool.size()], rng() % 2 == 0});
  }
  auto sub = [&] { return random_propositional(rng, depth - 1); };
  switch (k) {
    case 3: return Matrix::negation(sub());
    case 4:
    case 5: return Matrix::conjunction({sub(), sub(), sub()});
    case 6:
    case 7: return Matrix::disjunction({sub(), sub()});
    case 8: return Matrix::implication(sub(), sub());
    default: return Matrix::equivalence(sub(), sub());
  }
}

}  // namespace

TEST(Cnf, Examples) {
  Literal p = in(a, setA), q = in(a, setB), r = in(b, setA);
  auto c1 = cnf_clauses(Matrix::implication(m(p), m(q)));
  ASSERT_TRUE(c1);
  EXPECT_EQ(*c1, (std::vector<Clause>{Clause{complement(p), q}}));

  auto c2 = cnf_clauses(Matrix::disjunction({m(p), Matrix::conjunction({m(q), m(r)})}));
  ASSERT_TRUE(c2);
  EXPECT_EQ(*c2, (std::vector<Clause>{Clause{p, q}, Clause{p, r}}));

  auto iff = cnf_clauses(Matrix::equivalence(m(p), m(q)));
  ASSERT_TRUE(iff);
  EXPECT_EQ(iff->size(), 2u);

  EXPECT_EQ(cnf_clauses(Matrix::disjunction({m(p), m(complement(p))})), std::vector<Clause>{});
  EXPECT_EQ(cnf_clauses(Matrix::truth()), std::vector<Clause>{});
  EXPECT_FALSE(cnf_clauses(Matrix::falsity()));
  EXPECT_FALSE(cnf_clauses(Matrix::conjunction({m(p), Matrix::falsity()})));
}

TEST(Miniscope, SplitsAndShrinksPrefixes) {
  VariableRegistry source;
  source.add_free(a);
  Variable z1 = source.fresh_bound(Range::Abstract);
  Variable z2 = source.fresh_bound(Range::Abstract);
  UniversalFormula f({z1, z2}, Matrix::conjunction({m(in(z1, setA)), m(in(z2, setB))}));
  VariableRegistry target = source.without_bound();
  auto parts = miniscope_and_rename(to_cnf(f), source, target);
  ASSERT_EQ(parts.size(), 2u);
  for (const auto& part : parts) {
    EXPECT_EQ(part.prefix.size(), 1u);
    EXPECT_TRUE(is_well_formed(part));
  }
  EXPECT_NE(parts[0].prefix[0], parts[1].prefix[0]);
  EXPECT_EQ(target.bound().size(), 2u);
}

TEST(Expand, KidOntologyHasFourClauses) {
  auto t = translate_kb(read_owl_xml_file(kData + "/kid.owl"));
  auto e = expand_kb(t);
  ASSERT_EQ(e.clauses.size(), 4u);
  EXPECT_EQ(e.domain, std::vector<Variable>{Variable::individual("Ann")});
  EXPECT_EQ(encode(e.clauses.back()), "V0{Ann} $IN V1{Person}");
  std::size_t binary = 0, ternary = 0;
  for (const auto& c : e.clauses) {
    binary += c.size() == 2;
    ternary += c.size() == 3;
  }
  EXPECT_EQ(binary, 2u);
  EXPECT_EQ(ternary, 1u);
  EXPECT_TRUE(check_node_clash(e).empty());
}

TEST(Expand, TerminologyOnlyUsesWitness) {
  dl::KnowledgeBase kb;
  kb.add(dl::inclusion(dl::concept_name("A"), dl::concept_name("B")));
  auto e = expand_kb(translate_kb(kb));
  ASSERT_EQ(e.clauses.size(), 1u);
  Variable w = Variable::individual("_witness");
  EXPECT_EQ(e.clauses[0], (Clause{neg(Atom::member(w, setA)), in(w, setB)}));
}

TEST(Expand, TwoVariablePrefixOverTwoIndividuals) {
  dl::KnowledgeBase kb;
  kb.add(dl::disjoint_roles(dl::role("R"), dl::role("S")));
  kb.add(dl::concept_assertion("a", dl::concept_name("A")));
  kb.add(dl::concept_assertion("b", dl::concept_name("A")));
  auto e = expand_kb(translate_kb(kb));
  EXPECT_EQ(e.clauses.size(), 6u);
  EXPECT_EQ(std::ranges::count_if(e.clauses, [](const Clause& c) { return c.size() == 2; }), 4);
}

TEST(Expand, InstanceLimit) {
  dl::KnowledgeBase kb;
  kb.add(dl::transitive(dl::role("R")));
  for (const char* i : {"a", "b", "c"}) kb.add(dl::concept_assertion(i, dl::concept_name("A")));
  auto t = translate_kb(kb);
  EXPECT_THROW(expand_kb(t, ExpandOptions{.max_instances = 20}), ResourceLimit);
  EXPECT_NO_THROW(expand_kb(t, ExpandOptions{.max_instances = 27}));
}

TEST(NodeClash, Examples) {
  Literal p = in(a, setA);
  auto clashes = check_node_clash(ground_kb({Clause{p}, Clause{complement(p)}, Clause{in(b, setB)}}));
  ASSERT_EQ(clashes.size(), 1u);
  EXPECT_EQ(clashes[0].literal, p);
  EXPECT_EQ(clashes[0].complement, complement(p));

  auto self = check_node_clash(ground_kb({Clause{neg(Atom::equal(a, a))}}));
  ASSERT_EQ(self.size(), 1u);
  EXPECT_FALSE(self[0].complement);

  EXPECT_TRUE(check_node_clash(ground_kb({Clause{p, complement(p)}})).empty());
}

TEST(CnfProperty, EquivalentOnEveryValuation) {
  gen::Rng rng(41);
  auto pool = atom_pool();
  for (int i = 0; i < 300; ++i) {
    Matrix f = random_propositional(rng, 4);
    auto clauses = cnf_clauses(f);
    for (unsigned bits = 0; bits < (1u << pool.size()); ++bits) {
      Valuation v;
      for (std::size_t k = 0; k < pool.size(); ++k) v[pool[k]] = (bits >> k) & 1;
      bool expected = eval(f, v);
      bool actual = clauses && std::ranges::all_of(*clauses, [&](const Clause& c) { return eval(c, v); });
      ASSERT_EQ(actual, expected) << "valuation " << bits;
    }
  }
}

TEST(ExpandProperty, GroundAndDeterministic) {
  gen::Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    auto kb = gen::random_kb(rng);
    auto t = translate_kb(kb);
    auto e1 = expand_kb(t), e2 = expand_kb(t);
    ASSERT_EQ(e1.clauses, e2.clauses);
    for (const auto& c : e1.clauses) {
      ASSERT_GT(c.size(), 0u);
      for (const auto& v : variables_of(clause_matrix(c))) {
        ASSERT_FALSE(v.is_bound()) << encode(c);
        ASSERT_TRUE(e1.registry.contains(v)) << encode(c);
      }
    }
  }
}
