#include "random.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dl4x::gen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

const std::vector<std::string> kNames = {"a", "b", "Ann", "x_1", "Kid", "R", "long name", "%", "p.q", "7"};

}  // namespace

std::vector<Clause> random_ground_clauses(Rng& rng, const GroundShape& shape) {
  std::vector<Variable> xs;
  int individuals = uniform(rng, 2, shape.max_individuals);
  for (int i = 1; i <= individuals; ++i) xs.push_back(Variable::individual("x" + std::to_string(i)));
  const std::vector<Variable> sets = {Variable::set("A"), Variable::set("B"), Variable::set("C")};
  const std::vector<Variable> relations = {Variable::relation("R"), Variable::relation("S")};

  std::vector<Atom> pool;
  int atoms = uniform(rng, 1, shape.max_atoms);
  for (int tries = 0; static_cast<int>(pool.size()) < atoms && tries < 100; ++tries) {
    Atom a = Atom::member(pick(rng, xs), pick(rng, sets));
    int kind = uniform(rng, 0, 9);
    if (kind < 4) {
      const Variable& x = pick(rng, xs);
      const Variable& y = pick(rng, xs);
      if (x == y) continue;
      a = Atom::equal(x, y);
    } else if (kind < 6) {
      a = Atom::pair_member(pick(rng, xs), pick(rng, xs), pick(rng, relations));
    }
    if (std::ranges::find(pool, a) == pool.end()) pool.push_back(a);
  }

  std::vector<Clause> out;
  int clauses = uniform(rng, 1, shape.max_clauses);
  for (int c = 0; c < clauses; ++c) {
    std::vector<Literal> lits;
    int size = uniform(rng, 1, shape.max_literals);
    for (int i = 0; i < size; ++i) {
      Literal l{pick(rng, pool), coin(rng)};
      if (std::ranges::find(lits, l) == lits.end()) lits.push_back(l);
    }
    out.emplace_back(std::move(lits));
  }
  return out;
}

Variable random_variable(Rng& rng) {
  int sort = uniform(rng, 0, 3);
  return Variable(sort, pick(rng, kNames));
}

namespace {

Atom random_atom(Rng& rng, std::span<const Variable> xs) {
  auto x = [&] { return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))]; };
  switch (uniform(rng, 0, 2)) {
    case 0: return Atom::equal(x(), x());
    case 1: return Atom::member(x(), Variable::set(pick(rng, kNames)));
    default: return Atom::pair_member(x(), x(), Variable::relation(pick(rng, kNames)));
  }
}

std::vector<Variable> free_individuals() {
  std::vector<Variable> out;
  for (const auto& n : kNames) out.push_back(Variable::individual(n));
  return out;
}

}  // namespace

Literal random_literal(Rng& rng) {
  static const std::vector<Variable> xs = free_individuals();
  return {random_atom(rng, xs), coin(rng)};
}

Clause random_clause(Rng& rng, int max_size) {
  std::vector<Literal> lits;
  int size = uniform(rng, 1, max_size);
  for (int i = 0; i < size; ++i) lits.push_back(random_literal(rng));
  return Clause(std::move(lits));
}

Matrix random_matrix(Rng& rng, int depth, std::span<const Variable> individuals) {
  if (depth <= 0 || coin(rng, 0.25)) {
    int k = uniform(rng, 0, 19);
    if (k == 0) return Matrix::truth();
    if (k == 1) return Matrix::falsity();
    return Matrix::literal({random_atom(rng, individuals), coin(rng)});
  }
  auto sub = [&] { return random_matrix(rng, depth - 1, individuals); };
  switch (uniform(rng, 0, 4)) {
    case 0: return Matrix::negation(sub());
    case 1:
    case 2: {
      std::vector<Matrix> ops;
      int k = uniform(rng, 2, 3);
      for (int i = 0; i < k; ++i) ops.push_back(sub());
      return uniform(rng, 1, 2) == 1 ? Matrix::conjunction(std::move(ops)) : Matrix::disjunction(std::move(ops));
    }
    case 3: return Matrix::implication(sub(), sub());
    default: return Matrix::equivalence(sub(), sub());
  }
}

UniversalFormula random_formula(Rng& rng, int depth, int max_variables) {
  std::vector<Variable> vars;
  int bound = uniform(rng, 0, std::min(3, max_variables));
  for (int i = 1; i <= bound; ++i) vars.push_back(Variable::bound("z" + std::to_string(i)));
  int free = uniform(rng, 1, std::max(1, max_variables - bound));
  for (int i = 0; i < free; ++i) vars.push_back(Variable::individual(pick(rng, kNames)));
  Matrix m = random_matrix(rng, depth, vars);
  std::vector<Variable> prefix;
  for (const auto& v : variables_of(m))
    if (v.is_bound()) prefix.push_back(v);
  std::ranges::shuffle(prefix, rng);
  return UniversalFormula(std::move(prefix), std::move(m));
}

// Knowledge bases

namespace {

using namespace dl;

struct KbGen {
  Rng& rng;
  const std::vector<std::string> individuals = {"a", "b", "c"};
  const std::vector<std::string> concepts = {"A", "B", "C"};
  const std::vector<std::string> roles = {"R", "S"};
  const std::vector<std::string> data_roles = {"P", "Q"};
  const std::vector<Constant> constants = {{"1", "int"}, {"2", "int"}, {"u", "str"}};
  const std::vector<std::string> datatypes = {"int", "str", "date"};

  std::string ind() { return pick(rng, individuals); }
  Constant constant() { return pick(rng, constants); }
  int card() { return uniform(rng, 1, 2); }

  Term concept_term(int depth) {
    if (depth <= 0 || coin(rng, 0.4)) {
      switch (uniform(rng, 0, 11)) {
        case 0: return top();
        case 1: return bottom();
        case 2: return nominal(ind());
        case 3: return has_self(abstract_role(0));
        case 4: return has_value(abstract_role(0), ind());
        case 5: return has_data_value(concrete_role(0), constant());
        default: return concept_name(pick(rng, concepts));
      }
    }
    switch (uniform(rng, 0, 2)) {
      case 0: return negation(concept_term(depth - 1));
      case 1: return conjunction({concept_term(depth - 1), concept_term(depth - 1)});
      default: return disjunction({concept_term(depth - 1), concept_term(depth - 1)});
    }
  }

  Term abstract_role(int depth) {
    if (depth <= 0 || coin(rng, 0.5)) {
      switch (uniform(rng, 0, 9)) {
        case 0: return universal_role();
        case 1: return identity(concept_term(0));
        case 2: return product(concept_term(0), concept_term(0));
        default: return role(pick(rng, roles));
      }
    }
    switch (uniform(rng, 0, 6)) {
      case 0: return inverse(abstract_role(depth - 1));
      case 1: return negation(abstract_role(depth - 1));
      case 2: return disjunction({abstract_role(depth - 1), abstract_role(depth - 1)});
      case 3: return conjunction({abstract_role(depth - 1), abstract_role(depth - 1)});
      case 4: return domain_restriction(abstract_role(depth - 1), concept_term(0));
      case 5: return range_restriction(abstract_role(depth - 1), concept_term(0));
      default: return restriction(abstract_role(depth - 1), concept_term(0), concept_term(0));
    }
  }

  Term data_range(int depth) {
    if (depth <= 0 || coin(rng, 0.5)) {
      if (coin(rng, 0.3)) {
        std::vector<Constant> cs{constant()};
        if (coin(rng)) cs.push_back(constant());
        std::ranges::sort(cs);
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        return one_of(std::move(cs));
      }
      return datatype(pick(rng, datatypes));
    }
    switch (uniform(rng, 0, 2)) {
      case 0: return negation(data_range(depth - 1));
      case 1: return conjunction({data_range(depth - 1), data_range(depth - 1)});
      default: return disjunction({data_range(depth - 1), data_range(depth - 1)});
    }
  }

  Term concrete_role(int depth) {
    if (depth <= 0 || coin(rng, 0.5)) return data_role(pick(rng, data_roles));
    switch (uniform(rng, 0, 5)) {
      case 0: return negation(concrete_role(depth - 1));
      case 1: return disjunction({concrete_role(depth - 1), concrete_role(depth - 1)});
      case 2: return conjunction({concrete_role(depth - 1), concrete_role(depth - 1)});
      case 3: return domain_restriction(concrete_role(depth - 1), concept_term(0));
      case 4: return range_restriction(concrete_role(depth - 1), data_range(0));
      default: return restriction(concrete_role(depth - 1), concept_term(0), data_range(0));
    }
  }

  Term role_name() { return role(pick(rng, roles)); }
  Term data_role_name() { return data_role(pick(rng, data_roles)); }

  Axiom statement() {
    switch (uniform(rng, 0, 31)) {
      case 0: return role_equivalence(role_name(), coin(rng, 0.3) ? product(concept_term(1), concept_term(1)) : abstract_role(2));
      case 1: return role_inclusion(abstract_role(2), abstract_role(2));
      case 2: {
        std::vector<Term> chain{role_name(), role_name()};
        return role_chain(std::move(chain), role_name());
      }
      case 3: return symmetric(abstract_role(1));
      case 4: return asymmetric(abstract_role(1));
      case 5: return reflexive(abstract_role(1));
      case 6: return irreflexive(abstract_role(1));
      case 7: return disjoint_roles(abstract_role(1), abstract_role(1));
      case 8: return transitive(abstract_role(1));
      case 9: return functional(abstract_role(1));
      case 10: return role_equivalence(data_role_name(), concrete_role(2));
      case 11: return role_inclusion(concrete_role(2), concrete_role(2));
      case 12: return disjoint_roles(concrete_role(1), concrete_role(1));
      case 13: return functional(concrete_role(1));
      case 14: return equivalence(concept_term(2), concept_term(2));
      case 15: return inclusion(concept_term(2), concept_term(2));
      case 16: return inclusion(concept_term(1), forall(abstract_role(1), concept_term(1)));
      case 17: return inclusion(exists(abstract_role(1), concept_term(1)), concept_term(1));
      case 18: return inclusion(at_least(card(), abstract_role(1), concept_term(1)), concept_term(1));
      case 19: return inclusion(concept_term(1), at_most(card(), abstract_role(1), concept_term(1)));
      case 20: return inclusion(concept_term(1), forall(concrete_role(1), data_range(1)));
      case 21: return inclusion(exists(concrete_role(1), data_range(1)), concept_term(1));
      case 22: return inclusion(at_least(card(), concrete_role(1), data_range(1)), concept_term(1));
      case 23: return inclusion(concept_term(1), at_most(card(), concrete_role(1), data_range(1)));
      case 24: return equivalence(data_range(2), data_range(2));
      case 25: return inclusion(data_range(2), data_range(2));
      case 26: return concept_assertion(ind(), concept_term(2));
      case 27: return role_assertion(ind(), ind(), abstract_role(2));
      case 28: return same_individual(ind(), ind());
      case 29: return different_individual(ind(), ind());
      case 30: return data_assertion(constant(), data_range(2));
      default: return data_role_assertion(ind(), constant(), concrete_role(2));
    }
  }

  Axiom fact() {
    switch (uniform(rng, 0, 4)) {
      case 0: return concept_assertion(ind(), concept_name(pick(rng, concepts)));
      case 1: return concept_assertion(ind(), negation(concept_name(pick(rng, concepts))));
      case 2: return role_assertion(ind(), ind(), role_name());
      case 3: return same_individual(ind(), ind());
      default: return different_individual(ind(), ind());
    }
  }
};

}  // namespace

KnowledgeBase random_kb(Rng& rng) {
  KbGen g{rng};
  for (;;) {
    KnowledgeBase kb;
    Axiom a = g.statement();
    if (check_statement(a)) continue;
    kb.add(std::move(a));
    int facts = uniform(rng, 0, 2);
    for (int i = 0; i < facts; ++i) kb.add(g.fact());
    KnowledgeBase used = kb;
    used.declare_used_names();
    if (used.signature.abstract_roles.size() + used.signature.concrete_roles.size() > 2) continue;
    if (!validate_fragment(kb).empty()) continue;
    return kb;
  }
}

}  // namespace dl4x::gen
