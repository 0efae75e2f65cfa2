#include "dl4x/translate.hpp"

#include <algorithm>
#include <set>

#include "dl4x/errors.hpp"
#include "dl4x/normalize.hpp"

namespace dl4x {

using namespace dl;

void VariableRegistry::add_free(const Variable& v, Range r) {
  if (contains(v)) {
    if (v.sort == 0 && range_of(v) != r)
      throw InvalidStatement("name '" + v.name + "' used both as individual and data constant");
    return;
  }
  if (v.sort == 0) {
    position_[v] = free_[0].size();
    range_[v] = r;
  }
  free_[v.sort].push_back(v);
}

Variable VariableRegistry::fresh_bound(Range r) {
  for (;;) {
    std::string name = "z" + std::to_string(next_bound_++);
    if (contains(Variable::individual(name))) continue;
    Variable v = Variable::bound(name);
    if (range_.contains(v)) continue;
    range_[v] = r;
    bound_.push_back(v);
    return v;
  }
}

bool VariableRegistry::contains(const Variable& v) const {
  if (v.is_bound()) return range_.contains(v);
  return std::ranges::find(free_[v.sort], v) != free_[v.sort].end();
}

Range VariableRegistry::range_of(const Variable& v) const {
  auto it = range_.find(v);
  return it == range_.end() ? Range::Abstract : it->second;
}

std::vector<Variable> VariableRegistry::domain(Range r) const {
  std::vector<Variable> out;
  for (const auto& v : free_[0])
    if (range_of(v) == r) out.push_back(v);
  return out;
}

std::size_t VariableRegistry::position(const Variable& v) const {
  auto it = position_.find(v);
  if (it == position_.end()) throw PreconditionViolated("variable " + v.name + " not in registry");
  return it->second;
}

VariableRegistry VariableRegistry::without_bound() const {
  VariableRegistry out = *this;
  out.bound_.clear();
  std::erase_if(out.range_, [](const auto& kv) { return kv.first.is_bound(); });
  out.next_bound_ = 1;
  return out;
}

Variable individual_variable(const std::string& a) { return Variable::individual(escape_name(a)); }

Variable constant_variable(const Constant& c) {
  return Variable::individual(escape_name(c.value) + "^^" + escape_name(c.datatype));
}

Variable concept_variable(const std::string& c) { return Variable::set(escape_name(c)); }
Variable datatype_variable(const std::string& d) { return Variable::set(escape_name(d)); }
Variable role_variable(const std::string& r) { return Variable::relation(escape_name(r)); }

namespace {

Matrix conj(std::vector<Matrix> ops) { return Matrix::conjunction(std::move(ops)); }
Matrix disj(std::vector<Matrix> ops) { return Matrix::disjunction(std::move(ops)); }
Matrix eq(const Variable& x, const Variable& y) { return Matrix::atom(Atom::equal(x, y)); }

Range range_of_role(const Term& r) {
  return category_of(r) == Category::ConcreteRole ? Range::Concrete : Range::Abstract;
}

// Condition on y for the filler of a restriction on role r.
Matrix translate_filler(const Term& r, const Term& filler, const Variable& y) {
  return range_of_role(r) == Range::Concrete ? translate_datatype(filler, y) : translate_concept(filler, y);
}

template <typename F>
Matrix boolean(const Term& t, F&& rec) {
  std::vector<Matrix> ops;
  for (const auto& op : t.operands) ops.push_back(rec(op));
  switch (t.kind) {
    case TermKind::Not: return Matrix::negation(ops[0]);
    case TermKind::And: return conj(std::move(ops));
    default: return disj(std::move(ops));
  }
}

}  // namespace

Matrix translate_concept(const Term& c, const Variable& x) {
  if (category_of(c) != Category::Concept) throw NotAConcept("not a concept: " + to_string(c));
  switch (c.kind) {
    case TermKind::ConceptName: return Matrix::atom(Atom::member(x, concept_variable(c.name)));
    case TermKind::Top: return Matrix::truth();
    case TermKind::Bottom: return Matrix::falsity();
    case TermKind::Nominal: return eq(x, individual_variable(c.name));
    case TermKind::HasSelf: return translate_role(c.operands[0], x, x);
    case TermKind::HasValue: return translate_role(c.operands[0], x, individual_variable(c.name));
    case TermKind::HasDataValue: return translate_role(c.operands[0], x, constant_variable(c.constants[0]));
    case TermKind::Not:
    case TermKind::And:
    case TermKind::Or: return boolean(c, [&](const Term& op) { return translate_concept(op, x); });
    default: throw InvalidStatement("restriction inside a concept term: " + to_string(c));
  }
}

Matrix translate_role(const Term& r, const Variable& x, const Variable& y) {
  auto cat = category_of(r);
  if (cat != Category::AbstractRole && cat != Category::ConcreteRole) throw NotARole("not a role: " + to_string(r));
  const auto& ops = r.operands;
  switch (r.kind) {
    case TermKind::RoleName:
    case TermKind::DataRoleName: return Matrix::atom(Atom::pair_member(x, y, role_variable(r.name)));
    case TermKind::UniversalRole: return Matrix::truth();
    case TermKind::Inverse: return translate_role(ops[0], y, x);
    case TermKind::Identity: return conj({eq(x, y), translate_concept(ops[0], x)});
    case TermKind::Product: return conj({translate_concept(ops[0], x), translate_concept(ops[1], y)});
    case TermKind::DomainRestriction: return conj({translate_role(ops[0], x, y), translate_concept(ops[1], x)});
    case TermKind::RangeRestriction: return conj({translate_role(ops[0], x, y), translate_filler(ops[0], ops[1], y)});
    case TermKind::Restriction:
      return conj({translate_role(ops[0], x, y), translate_concept(ops[1], x), translate_filler(ops[0], ops[2], y)});
    default: return boolean(r, [&](const Term& op) { return translate_role(op, x, y); });
  }
}

Matrix translate_datatype(const Term& t, const Variable& x) {
  if (category_of(t) != Category::DataRange) throw InvalidStatement("not a data type term: " + to_string(t));
  switch (t.kind) {
    case TermKind::Datatype: return Matrix::atom(Atom::member(x, datatype_variable(t.name)));
    case TermKind::OneOf: {
      std::vector<Matrix> ops;
      for (const auto& c : t.constants) ops.push_back(eq(x, constant_variable(c)));
      return disj(std::move(ops));
    }
    default: return boolean(t, [&](const Term& op) { return translate_datatype(op, x); });
  }
}

namespace {

void register_term(const Term& t, VariableRegistry& reg) {
  switch (t.kind) {
    case TermKind::ConceptName: reg.add_free(concept_variable(t.name)); break;
    case TermKind::Nominal:
    case TermKind::HasValue: reg.add_free(individual_variable(t.name), Range::Abstract); break;
    case TermKind::RoleName:
    case TermKind::DataRoleName: reg.add_free(role_variable(t.name)); break;
    case TermKind::Datatype: reg.add_free(datatype_variable(t.name)); break;
    default: break;
  }
  for (const auto& op : t.operands) register_term(op, reg);
  for (const auto& c : t.constants) reg.add_free(constant_variable(c), Range::Concrete);
}

void register_axiom(const Axiom& a, VariableRegistry& reg) {
  for (const auto& i : a.individuals) reg.add_free(individual_variable(i), Range::Abstract);
  if (a.constant) reg.add_free(constant_variable(*a.constant), Range::Concrete);
  for (const auto& t : a.terms) register_term(t, reg);
}

// Collects the bound variables of one statement in creation order.
class Prefix {
 public:
  explicit Prefix(VariableRegistry& reg) : reg_(reg) {}

  Variable var(Range r = Range::Abstract) {
    vars_.push_back(reg_.fresh_bound(r));
    return vars_.back();
  }

  std::vector<Variable> vars(std::size_t n, Range r) {
    std::vector<Variable> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(var(r));
    return out;
  }

  UniversalFormula close(Matrix m) const {
    auto used = variables_of(m);
    std::vector<Variable> prefix;
    for (const auto& v : vars_)
      if (std::ranges::find(used, v) != used.end()) prefix.push_back(v);
    return UniversalFormula(std::move(prefix), std::move(m));
  }

 private:
  VariableRegistry& reg_;
  std::vector<Variable> vars_;
};

void check_cardinality(int n, const TranslateOptions& options) {
  if (n > options.max_cardinality)
    throw ResourceLimit("cardinality " + std::to_string(n) + " exceeds the limit " +
                        std::to_string(options.max_cardinality));
}

UniversalFormula translate_inclusion(const Term& lhs, const Term& rhs, Prefix& p, const TranslateOptions& options) {
  if (category_of(lhs) == Category::DataRange) {
    Variable z = p.var(Range::Concrete);
    return p.close(Matrix::implication(translate_datatype(lhs, z), translate_datatype(rhs, z)));
  }
  if (lhs.kind == TermKind::Exists) {
    const Term& r = lhs.operands[0];
    Variable z1 = p.var();
    Variable z2 = p.var(range_of_role(r));
    return p.close(Matrix::implication(conj({translate_role(r, z1, z2), translate_filler(r, lhs.operands[1], z2)}),
                                       translate_concept(rhs, z1)));
  }
  if (lhs.kind == TermKind::AtLeast) {
    const Term& r = lhs.operands[0];
    check_cardinality(lhs.cardinality, options);
    Variable z = p.var();
    auto zs = p.vars(lhs.cardinality, range_of_role(r));
    std::vector<Matrix> premise;
    for (const auto& zi : zs) premise.push_back(translate_role(r, z, zi));
    for (const auto& zi : zs) premise.push_back(translate_filler(r, lhs.operands[1], zi));
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j) premise.push_back(Matrix::negation(eq(zs[i], zs[j])));
    return p.close(Matrix::implication(conj(std::move(premise)), translate_concept(rhs, z)));
  }
  if (rhs.kind == TermKind::ForAll) {
    const Term& r = rhs.operands[0];
    Variable z1 = p.var();
    Variable z2 = p.var(range_of_role(r));
    return p.close(Matrix::implication(conj({translate_concept(lhs, z1), translate_role(r, z1, z2)}),
                                       translate_filler(r, rhs.operands[1], z2)));
  }
  if (rhs.kind == TermKind::AtMost) {
    const Term& r = rhs.operands[0];
    check_cardinality(rhs.cardinality, options);
    Variable z = p.var();
    auto zs = p.vars(rhs.cardinality + 1, range_of_role(r));
    std::vector<Matrix> premise{translate_concept(lhs, z)};
    for (const auto& zi : zs) premise.push_back(translate_role(r, z, zi));
    for (const auto& zi : zs) premise.push_back(translate_filler(r, rhs.operands[1], zi));
    std::vector<Matrix> some_equal;
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j) some_equal.push_back(eq(zs[i], zs[j]));
    return p.close(Matrix::implication(conj(std::move(premise)), disj(std::move(some_equal))));
  }
  Variable z = p.var();
  return p.close(Matrix::implication(translate_concept(lhs, z), translate_concept(rhs, z)));
}

UniversalFormula translate_universal(const Axiom& a, Prefix& p, const TranslateOptions& options) {
  const auto& t = a.terms;
  switch (a.kind) {
    case AxiomKind::RoleEquivalence:
    case AxiomKind::RoleInclusion: {
      Variable z1 = p.var();
      Variable z2 = p.var(range_of_role(t[0]));
      Matrix lhs = translate_role(t[0], z1, z2);
      Matrix rhs = translate_role(t[1], z1, z2);
      return p.close(a.kind == AxiomKind::RoleInclusion ? Matrix::implication(lhs, rhs)
                                                         : Matrix::equivalence(lhs, rhs));
    }
    case AxiomKind::RoleChainInclusion: {
      auto zs = p.vars(t.size(), Range::Abstract);
      std::vector<Matrix> chain;
      for (std::size_t i = 0; i + 1 < t.size(); ++i) chain.push_back(translate_role(t[i], zs[i], zs[i + 1]));
      return p.close(Matrix::implication(conj(std::move(chain)), translate_role(t.back(), zs.front(), zs.back())));
    }
    case AxiomKind::Symmetric:
    case AxiomKind::Asymmetric: {
      Variable z1 = p.var();
      Variable z2 = p.var();
      Matrix back = translate_role(t[0], z2, z1);
      if (a.kind == AxiomKind::Asymmetric) back = Matrix::negation(back);
      return p.close(Matrix::implication(translate_role(t[0], z1, z2), back));
    }
    case AxiomKind::Reflexive:
    case AxiomKind::Irreflexive: {
      Variable z = p.var();
      Matrix self = translate_role(t[0], z, z);
      return p.close(a.kind == AxiomKind::Reflexive ? self : Matrix::negation(self));
    }
    case AxiomKind::DisjointRoles: {
      Variable z1 = p.var();
      Variable z2 = p.var(range_of_role(t[0]));
      return p.close(Matrix::negation(conj({translate_role(t[0], z1, z2), translate_role(t[1], z1, z2)})));
    }
    case AxiomKind::Transitive: {
      Variable z1 = p.var();
      Variable z2 = p.var();
      Variable z3 = p.var();
      return p.close(Matrix::implication(conj({translate_role(t[0], z1, z2), translate_role(t[0], z2, z3)}),
                                         translate_role(t[0], z1, z3)));
    }
    case AxiomKind::Functional: {
      Range r = range_of_role(t[0]);
      Variable z = p.var();
      Variable z1 = p.var(r);
      Variable z2 = p.var(r);
      return p.close(
          Matrix::implication(conj({translate_role(t[0], z, z1), translate_role(t[0], z, z2)}), eq(z1, z2)));
    }
    case AxiomKind::Equivalence: {
      bool data = category_of(t[0]) == Category::DataRange;
      Variable z = p.var(data ? Range::Concrete : Range::Abstract);
      Matrix lhs = data ? translate_datatype(t[0], z) : translate_concept(t[0], z);
      Matrix rhs = data ? translate_datatype(t[1], z) : translate_concept(t[1], z);
      return p.close(conj({Matrix::implication(lhs, rhs), Matrix::implication(rhs, lhs)}));
    }
    case AxiomKind::Inclusion: return translate_inclusion(t[0], t[1], p, options);
    default: break;
  }
  throw InvalidStatement("not a terminological statement: " + to_string(a));
}

Matrix translate_assertion(const Axiom& a) {
  const auto& t = a.terms;
  auto ind = [&](std::size_t i) { return individual_variable(a.individuals[i]); };
  switch (a.kind) {
    case AxiomKind::ConceptAssertion: return translate_concept(t[0], ind(0));
    case AxiomKind::RoleAssertion: return translate_role(t[0], ind(0), ind(1));
    case AxiomKind::SameIndividual: return eq(ind(0), ind(1));
    case AxiomKind::DifferentIndividual: return Matrix::negation(eq(ind(0), ind(1)));
    case AxiomKind::DataAssertion: return translate_datatype(t[0], constant_variable(*a.constant));
    case AxiomKind::DataRoleAssertion: return translate_role(t[0], ind(0), constant_variable(*a.constant));
    default: break;
  }
  throw InvalidStatement("not an assertion: " + to_string(a));
}

}  // namespace

AxiomTranslation translate_axiom(const Axiom& a, VariableRegistry& registry, const TranslateOptions& options) {
  if (auto rule = check_statement(a)) throw InvalidStatement(to_string(a) + ": " + *rule);
  register_axiom(a, registry);
  AxiomTranslation out;
  if (box_of(a.kind) != Box::ABox) {
    Prefix p(registry);
    out.universals.push_back(translate_universal(a, p, options));
    return out;
  }
  Matrix m = translate_assertion(a);
  auto clauses = cnf_clauses(m);
  bool literals = clauses && std::ranges::all_of(*clauses, [](const Clause& c) { return c.is_unit(); });
  if (literals) {
    for (const auto& c : *clauses) out.literals.push_back(c[0]);
  } else {
    out.universals.emplace_back(std::vector<Variable>{}, m);
  }
  return out;
}

TranslationOutput translate_kb(const KnowledgeBase& input, const TranslateOptions& options) {
  auto violations = validate_fragment(input);
  if (!violations.empty()) {
    const auto& v = violations.front();
    std::string what = v.rule;
    if (!v.statement.terms.empty() || !v.statement.individuals.empty()) what = to_string(v.statement) + ": " + what;
    throw InvalidStatement(what);
  }
  KnowledgeBase kb = input;
  kb.declare_used_names();

  TranslationOutput out;
  auto& reg = out.registry;
  // Free names first, so that bound names avoid them.
  for (const Axiom* a : kb.statements()) register_axiom(*a, reg);
  for (const auto& i : kb.signature.individuals) reg.add_free(individual_variable(i), Range::Abstract);
  for (const auto& c : kb.signature.concepts) reg.add_free(concept_variable(c));
  for (const auto& r : kb.signature.abstract_roles) reg.add_free(role_variable(r));
  for (const auto& r : kb.signature.concrete_roles) reg.add_free(role_variable(r));

  std::vector<std::pair<Variable, std::string>> constants;  // variable, data type
  for (const auto& [d, values] : kb.dmap.constants) {
    reg.add_free(datatype_variable(d));
    for (const auto& value : values) {
      Variable v = constant_variable(Constant{value, d});
      reg.add_free(v, Range::Concrete);
      constants.emplace_back(v, d);
    }
    // every data type domain is non-empty
    if (values.empty()) {
      Variable w = constant_variable(Constant{"_witness", d});
      reg.add_free(w, Range::Concrete);
      constants.emplace_back(w, d);
    }
  }
  std::ranges::sort(constants, {}, [&](const auto& c) { return reg.position(c.first); });

  for (const Axiom* a : kb.statements()) {
    auto t = translate_axiom(*a, reg, options);
    std::ranges::move(t.literals, std::back_inserter(out.ground_literals));
    std::ranges::move(t.universals, std::back_inserter(out.universals));
  }

  for (const auto& [v, d] : constants) {
    out.data_facts.push_back(pos(Atom::member(v, datatype_variable(d))));
    for (const auto& [other, _] : kb.dmap.constants)
      if (other != d) out.data_facts.push_back(neg(Atom::member(v, datatype_variable(other))));
  }
  for (std::size_t i = 0; i < constants.size(); ++i)
    for (std::size_t j = i + 1; j < constants.size(); ++j)
      out.data_facts.push_back(neg(Atom::equal(constants[i].first, constants[j].first)));
  for (const auto& a : reg.domain(Range::Abstract))
    for (const auto& [e, _] : constants) out.data_facts.push_back(neg(Atom::equal(a, e)));
  return out;
}

}  // namespace dl4x
