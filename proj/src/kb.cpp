#include "dl4x/kb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dl4x::dl {

namespace {

Term leaf(TermKind k, std::string name = {}) { return Term{k, std::move(name), {}, 0, {}}; }

Term node(TermKind k, std::vector<Term> ops) { return Term{k, {}, {}, 0, std::move(ops)}; }

bool is_role(Category c) { return c == Category::AbstractRole || c == Category::ConcreteRole; }

bool is_quantified(TermKind k) {
  return k == TermKind::Exists || k == TermKind::ForAll || k == TermKind::AtLeast || k == TermKind::AtMost;
}

// Category the filler of a restriction on a role of category `role` must have.
Category filler_category(Category role) {
  return role == Category::AbstractRole ? Category::Concept : Category::DataRange;
}

}  // namespace

std::optional<Category> category_of(const Term& t) {
  auto op_cat = [&](std::size_t i) -> std::optional<Category> {
    if (i >= t.operands.size()) return std::nullopt;
    return category_of(t.operands[i]);
  };
  auto arity = [&](std::size_t n) { return t.operands.size() == n; };
  switch (t.kind) {
    case TermKind::ConceptName:
    case TermKind::Nominal:
      if (!arity(0) || t.name.empty()) return std::nullopt;
      return Category::Concept;
    case TermKind::Top:
    case TermKind::Bottom:
      if (!arity(0)) return std::nullopt;
      return Category::Concept;
    case TermKind::HasSelf:
      if (!arity(1) || op_cat(0) != Category::AbstractRole) return std::nullopt;
      return Category::Concept;
    case TermKind::HasValue:
      if (!arity(1) || op_cat(0) != Category::AbstractRole || t.name.empty()) return std::nullopt;
      return Category::Concept;
    case TermKind::HasDataValue:
      if (!arity(1) || op_cat(0) != Category::ConcreteRole || t.constants.size() != 1) return std::nullopt;
      return Category::Concept;
    case TermKind::Exists:
    case TermKind::ForAll:
    case TermKind::AtLeast:
    case TermKind::AtMost: {
      if (!arity(2)) return std::nullopt;
      auto r = op_cat(0);
      if (!r || !is_role(*r) || op_cat(1) != filler_category(*r)) return std::nullopt;
      return Category::Concept;
    }
    case TermKind::RoleName:
      if (!arity(0) || t.name.empty()) return std::nullopt;
      return Category::AbstractRole;
    case TermKind::UniversalRole:
      if (!arity(0)) return std::nullopt;
      return Category::AbstractRole;
    case TermKind::DataRoleName:
      if (!arity(0) || t.name.empty()) return std::nullopt;
      return Category::ConcreteRole;
    case TermKind::Inverse:
      if (!arity(1) || op_cat(0) != Category::AbstractRole) return std::nullopt;
      return Category::AbstractRole;
    case TermKind::Identity:
      if (!arity(1) || op_cat(0) != Category::Concept) return std::nullopt;
      return Category::AbstractRole;
    case TermKind::Product:
      if (!arity(2) || op_cat(0) != Category::Concept || op_cat(1) != Category::Concept) return std::nullopt;
      return Category::AbstractRole;
    case TermKind::DomainRestriction: {
      auto r = op_cat(0);
      if (!arity(2) || !r || !is_role(*r) || op_cat(1) != Category::Concept) return std::nullopt;
      return r;
    }
    case TermKind::RangeRestriction: {
      auto r = op_cat(0);
      if (!arity(2) || !r || !is_role(*r) || op_cat(1) != filler_category(*r)) return std::nullopt;
      return r;
    }
    case TermKind::Restriction: {
      auto r = op_cat(0);
      if (!arity(3) || !r || !is_role(*r) || op_cat(1) != Category::Concept ||
          op_cat(2) != filler_category(*r))
        return std::nullopt;
      return r;
    }
    case TermKind::Datatype:
      if (!arity(0) || t.name.empty()) return std::nullopt;
      return Category::DataRange;
    case TermKind::OneOf:
      if (!arity(0) || t.constants.empty()) return std::nullopt;
      return Category::DataRange;
    case TermKind::Not:
      if (!arity(1)) return std::nullopt;
      return op_cat(0);
    case TermKind::And:
    case TermKind::Or: {
      if (t.operands.size() < 2) return std::nullopt;
      auto c = op_cat(0);
      for (std::size_t i = 1; i < t.operands.size(); ++i)
        if (op_cat(i) != c) return std::nullopt;
      return c;
    }
  }
  return std::nullopt;
}

bool is_plain(const Term& t) {
  if (is_quantified(t.kind)) return false;
  return std::ranges::all_of(t.operands, is_plain);
}

Term concept_name(std::string name) { return leaf(TermKind::ConceptName, std::move(name)); }
Term top() { return leaf(TermKind::Top); }
Term bottom() { return leaf(TermKind::Bottom); }
Term nominal(std::string individual) { return leaf(TermKind::Nominal, std::move(individual)); }
Term has_self(Term role) { return node(TermKind::HasSelf, {std::move(role)}); }

Term has_value(Term role, std::string individual) {
  Term t = node(TermKind::HasValue, {std::move(role)});
  t.name = std::move(individual);
  return t;
}

Term has_data_value(Term data_role, Constant c) {
  Term t = node(TermKind::HasDataValue, {std::move(data_role)});
  t.constants = {std::move(c)};
  return t;
}

Term exists(Term role, Term filler) { return node(TermKind::Exists, {std::move(role), std::move(filler)}); }
Term forall(Term role, Term filler) { return node(TermKind::ForAll, {std::move(role), std::move(filler)}); }

Term at_least(int n, Term role, Term filler) {
  Term t = node(TermKind::AtLeast, {std::move(role), std::move(filler)});
  t.cardinality = n;
  return t;
}

Term at_most(int n, Term role, Term filler) {
  Term t = node(TermKind::AtMost, {std::move(role), std::move(filler)});
  t.cardinality = n;
  return t;
}

Term role(std::string name) { return leaf(TermKind::RoleName, std::move(name)); }
Term universal_role() { return leaf(TermKind::UniversalRole); }
Term inverse(Term r) { return node(TermKind::Inverse, {std::move(r)}); }
Term identity(Term c) { return node(TermKind::Identity, {std::move(c)}); }
Term product(Term lhs, Term rhs) { return node(TermKind::Product, {std::move(lhs), std::move(rhs)}); }
Term data_role(std::string name) { return leaf(TermKind::DataRoleName, std::move(name)); }

Term domain_restriction(Term r, Term c) {
  return node(TermKind::DomainRestriction, {std::move(r), std::move(c)});
}

Term range_restriction(Term r, Term filler) {
  return node(TermKind::RangeRestriction, {std::move(r), std::move(filler)});
}

Term restriction(Term r, Term domain, Term range) {
  return node(TermKind::Restriction, {std::move(r), std::move(domain), std::move(range)});
}

Term datatype(std::string name) { return leaf(TermKind::Datatype, std::move(name)); }

Term one_of(std::vector<Constant> constants) {
  Term t = leaf(TermKind::OneOf);
  t.constants = std::move(constants);
  return t;
}

Term negation(Term t) { return node(TermKind::Not, {std::move(t)}); }
Term conjunction(std::vector<Term> ops) { return node(TermKind::And, std::move(ops)); }
Term disjunction(std::vector<Term> ops) { return node(TermKind::Or, std::move(ops)); }

Box box_of(AxiomKind k) {
  switch (k) {
    case AxiomKind::Equivalence:
    case AxiomKind::Inclusion:
      return Box::TBox;
    case AxiomKind::ConceptAssertion:
    case AxiomKind::RoleAssertion:
    case AxiomKind::SameIndividual:
    case AxiomKind::DifferentIndividual:
    case AxiomKind::DataAssertion:
    case AxiomKind::DataRoleAssertion:
      return Box::ABox;
    default:
      return Box::RBox;
  }
}

const char* to_string(AxiomKind k) {
  switch (k) {
    case AxiomKind::RoleEquivalence: return "RoleEquivalence";
    case AxiomKind::RoleInclusion: return "RoleInclusion";
    case AxiomKind::RoleChainInclusion: return "RoleChainInclusion";
    case AxiomKind::Symmetric: return "Symmetric";
    case AxiomKind::Asymmetric: return "Asymmetric";
    case AxiomKind::Reflexive: return "Reflexive";
    case AxiomKind::Irreflexive: return "Irreflexive";
    case AxiomKind::DisjointRoles: return "DisjointRoles";
    case AxiomKind::Transitive: return "Transitive";
    case AxiomKind::Functional: return "Functional";
    case AxiomKind::Equivalence: return "Equivalence";
    case AxiomKind::Inclusion: return "Inclusion";
    case AxiomKind::ConceptAssertion: return "ConceptAssertion";
    case AxiomKind::RoleAssertion: return "RoleAssertion";
    case AxiomKind::SameIndividual: return "SameIndividual";
    case AxiomKind::DifferentIndividual: return "DifferentIndividual";
    case AxiomKind::DataAssertion: return "DataAssertion";
    case AxiomKind::DataRoleAssertion: return "DataRoleAssertion";
  }
  return "?";
}

namespace {

Axiom make(AxiomKind k, std::vector<Term> terms, std::vector<std::string> inds = {},
           std::optional<Constant> c = std::nullopt) {
  return Axiom{k, std::move(terms), std::move(inds), std::move(c)};
}

}  // namespace

Axiom role_equivalence(Term r1, Term r2) { return make(AxiomKind::RoleEquivalence, {std::move(r1), std::move(r2)}); }
Axiom role_inclusion(Term r1, Term r2) { return make(AxiomKind::RoleInclusion, {std::move(r1), std::move(r2)}); }

Axiom role_chain(std::vector<Term> chain, Term r) {
  chain.push_back(std::move(r));
  return make(AxiomKind::RoleChainInclusion, std::move(chain));
}

Axiom symmetric(Term r) { return make(AxiomKind::Symmetric, {std::move(r)}); }
Axiom asymmetric(Term r) { return make(AxiomKind::Asymmetric, {std::move(r)}); }
Axiom reflexive(Term r) { return make(AxiomKind::Reflexive, {std::move(r)}); }
Axiom irreflexive(Term r) { return make(AxiomKind::Irreflexive, {std::move(r)}); }
Axiom disjoint_roles(Term r1, Term r2) { return make(AxiomKind::DisjointRoles, {std::move(r1), std::move(r2)}); }
Axiom transitive(Term r) { return make(AxiomKind::Transitive, {std::move(r)}); }
Axiom functional(Term r) { return make(AxiomKind::Functional, {std::move(r)}); }
Axiom equivalence(Term lhs, Term rhs) { return make(AxiomKind::Equivalence, {std::move(lhs), std::move(rhs)}); }
Axiom inclusion(Term lhs, Term rhs) { return make(AxiomKind::Inclusion, {std::move(lhs), std::move(rhs)}); }

Axiom concept_assertion(std::string a, Term c) {
  return make(AxiomKind::ConceptAssertion, {std::move(c)}, {std::move(a)});
}

Axiom role_assertion(std::string a, std::string b, Term r) {
  return make(AxiomKind::RoleAssertion, {std::move(r)}, {std::move(a), std::move(b)});
}

Axiom same_individual(std::string a, std::string b) {
  return make(AxiomKind::SameIndividual, {}, {std::move(a), std::move(b)});
}

Axiom different_individual(std::string a, std::string b) {
  return make(AxiomKind::DifferentIndividual, {}, {std::move(a), std::move(b)});
}

Axiom data_assertion(Constant e, Term t) { return make(AxiomKind::DataAssertion, {std::move(t)}, {}, std::move(e)); }

Axiom data_role_assertion(std::string a, Constant e, Term p) {
  return make(AxiomKind::DataRoleAssertion, {std::move(p)}, {std::move(a)}, std::move(e));
}

void KnowledgeBase::add(Axiom a) {
  switch (box_of(a.kind)) {
    case Box::RBox: rbox.push_back(std::move(a)); break;
    case Box::TBox: tbox.push_back(std::move(a)); break;
    case Box::ABox: abox.push_back(std::move(a)); break;
  }
}

std::vector<const Axiom*> KnowledgeBase::statements() const {
  std::vector<const Axiom*> out;
  for (const auto* box : {&rbox, &tbox, &abox})
    for (const auto& a : *box) out.push_back(&a);
  return out;
}

namespace {

void add_unique(std::vector<std::string>& names, const std::string& n) {
  if (std::ranges::find(names, n) == names.end()) names.push_back(n);
}

void declare_term(const Term& t, Signature& sig, DatatypeMap& dmap) {
  switch (t.kind) {
    case TermKind::ConceptName: add_unique(sig.concepts, t.name); break;
    case TermKind::Nominal:
    case TermKind::HasValue: add_unique(sig.individuals, t.name); break;
    case TermKind::RoleName: add_unique(sig.abstract_roles, t.name); break;
    case TermKind::DataRoleName: add_unique(sig.concrete_roles, t.name); break;
    case TermKind::Datatype: dmap.add_datatype(t.name); break;
    default: break;
  }
  for (const auto& c : t.constants) dmap.add_constant(c);
  for (const auto& op : t.operands) declare_term(op, sig, dmap);
}

}  // namespace

void KnowledgeBase::declare_used_names() {
  for (const Axiom* a : statements()) {
    for (const auto& i : a->individuals) add_unique(signature.individuals, i);
    if (a->constant) dmap.add_constant(*a->constant);
    for (const auto& t : a->terms) declare_term(t, signature, dmap);
  }
}

namespace {

std::optional<std::string> check_cardinalities(const Term& t) {
  if ((t.kind == TermKind::AtLeast || t.kind == TermKind::AtMost) && t.cardinality < 1)
    return "cardinality bound must be at least 1";
  for (const auto& op : t.operands)
    if (auto v = check_cardinalities(op)) return v;
  return std::nullopt;
}

bool plain_of(const Term& t, Category c) { return is_plain(t) && category_of(t) == c; }

bool plain_role(const Term& t) {
  auto c = category_of(t);
  return is_plain(t) && c && is_role(*c);
}

// Checks a concept inclusion lhs [= rhs against the admitted shapes.
std::optional<std::string> check_concept_inclusion(const Term& lhs, const Term& rhs) {
  bool lhs_plain = is_plain(lhs);
  bool rhs_plain = is_plain(rhs);
  auto operands_plain = [](const Term& t) { return std::ranges::all_of(t.operands, is_plain); };
  if (lhs_plain && rhs_plain) return std::nullopt;
  if (rhs_plain && (lhs.kind == TermKind::Exists || lhs.kind == TermKind::AtLeast) && operands_plain(lhs))
    return std::nullopt;
  if (lhs_plain && (rhs.kind == TermKind::ForAll || rhs.kind == TermKind::AtMost) && operands_plain(rhs))
    return std::nullopt;
  if (rhs.kind == TermKind::Exists || rhs.kind == TermKind::AtLeast)
    return "existential or minimum cardinality restriction on the right of an inclusion";
  if (lhs.kind == TermKind::ForAll || lhs.kind == TermKind::AtMost)
    return "universal or maximum cardinality restriction on the left of an inclusion";
  if (!lhs_plain && !rhs_plain) return "restrictions on both sides of an inclusion";
  return "restriction nested inside a concept term";
}

}  // namespace

std::optional<std::string> check_statement(const Axiom& a) {
  for (const auto& t : a.terms) {
    if (!category_of(t)) return "ill-formed term " + to_string(t);
    if (auto v = check_cardinalities(t)) return v;
  }
  auto terms = [&](std::size_t n) { return a.terms.size() == n; };
  auto inds = [&](std::size_t n) {
    return a.individuals.size() == n &&
           std::ranges::all_of(a.individuals, [](const std::string& s) { return !s.empty(); });
  };
  const auto abstract = Category::AbstractRole;
  switch (a.kind) {
    case AxiomKind::RoleEquivalence:
    case AxiomKind::RoleInclusion:
    case AxiomKind::DisjointRoles:
      if (!terms(2) || !plain_role(a.terms[0]) || category_of(a.terms[0]) != category_of(a.terms[1]) ||
          !is_plain(a.terms[1]))
        return "role axiom needs two plain roles of the same kind";
      return std::nullopt;
    case AxiomKind::RoleChainInclusion:
      if (a.terms.size() < 2 ||
          !std::ranges::all_of(a.terms, [&](const Term& t) { return plain_of(t, abstract); }))
        return "role inclusion axiom needs abstract roles R1...Rn [= R";
      return std::nullopt;
    case AxiomKind::Symmetric:
    case AxiomKind::Asymmetric:
    case AxiomKind::Reflexive:
    case AxiomKind::Irreflexive:
    case AxiomKind::Transitive:
      if (!terms(1) || !plain_of(a.terms[0], abstract)) return "role property needs an abstract role";
      return std::nullopt;
    case AxiomKind::Functional:
      if (!terms(1) || !plain_role(a.terms[0])) return "functionality needs a role";
      return std::nullopt;
    case AxiomKind::Equivalence:
      if (!terms(2)) return "equivalence needs two terms";
      if (plain_of(a.terms[0], Category::Concept) && plain_of(a.terms[1], Category::Concept)) return std::nullopt;
      if (plain_of(a.terms[0], Category::DataRange) && plain_of(a.terms[1], Category::DataRange))
        return std::nullopt;
      if (category_of(a.terms[0]) == Category::Concept && category_of(a.terms[1]) == Category::Concept)
        return "restriction inside a concept equivalence";
      return "equivalence needs two concepts or two data type terms";
    case AxiomKind::Inclusion:
      if (!terms(2)) return "inclusion needs two terms";
      if (plain_of(a.terms[0], Category::DataRange) && plain_of(a.terms[1], Category::DataRange))
        return std::nullopt;
      if (category_of(a.terms[0]) != Category::Concept || category_of(a.terms[1]) != Category::Concept)
        return "inclusion needs two concepts or two data type terms";
      return check_concept_inclusion(a.terms[0], a.terms[1]);
    case AxiomKind::ConceptAssertion:
      if (!terms(1) || !inds(1) || !plain_of(a.terms[0], Category::Concept))
        return "concept assertion needs an individual and a plain concept";
      return std::nullopt;
    case AxiomKind::RoleAssertion:
      if (!terms(1) || !inds(2) || !plain_of(a.terms[0], abstract))
        return "role assertion needs two individuals and an abstract role";
      return std::nullopt;
    case AxiomKind::SameIndividual:
    case AxiomKind::DifferentIndividual:
      if (!terms(0) || !inds(2)) return "(dis)agreement needs two individuals";
      return std::nullopt;
    case AxiomKind::DataAssertion:
      if (!terms(1) || !inds(0) || !a.constant || !plain_of(a.terms[0], Category::DataRange))
        return "data type assertion needs a constant and a data type term";
      return std::nullopt;
    case AxiomKind::DataRoleAssertion:
      if (!terms(1) || !inds(1) || !a.constant || !plain_of(a.terms[0], Category::ConcreteRole))
        return "concrete role assertion needs an individual, a constant and a concrete role";
      return std::nullopt;
  }
  return "unknown statement";
}

std::vector<Violation> validate_fragment(const KnowledgeBase& kb) {
  std::vector<Violation> out;
  for (const Axiom* a : kb.statements())
    if (auto rule = check_statement(*a)) out.push_back({*a, *rule});

  // Concepts and data types share sort 1, abstract and concrete roles sort 3.
  KnowledgeBase used = kb;
  used.declare_used_names();
  const auto& sig = used.signature;
  for (const auto& r : sig.abstract_roles)
    if (std::ranges::find(sig.concrete_roles, r) != sig.concrete_roles.end())
      out.push_back({Axiom{}, "name '" + r + "' used as abstract and concrete role"});
  for (const auto& c : sig.concepts)
    if (used.dmap.constants.contains(c))
      out.push_back({Axiom{}, "name '" + c + "' used as concept and data type"});
  return out;
}

namespace {

void print(std::ostream& os, const Term& t);

void print_ops(std::ostream& os, const Term& t, const char* sep) {
  os << '(';
  for (std::size_t i = 0; i < t.operands.size(); ++i) {
    if (i > 0) os << sep;
    print(os, t.operands[i]);
  }
  os << ')';
}

void print_constant(std::ostream& os, const Constant& c) { os << '"' << c.value << "\"^^" << c.datatype; }

void print(std::ostream& os, const Term& t) {
  auto op = [&](std::size_t i) -> const Term& { return t.operands.at(i); };
  switch (t.kind) {
    case TermKind::ConceptName:
    case TermKind::RoleName:
    case TermKind::DataRoleName:
    case TermKind::Datatype: os << t.name; break;
    case TermKind::Top: os << "⊤"; break;
    case TermKind::Bottom: os << "⊥"; break;
    case TermKind::Nominal: os << '{' << t.name << '}'; break;
    case TermKind::HasSelf: os << "∃"; print(os, op(0)); os << ".Self"; break;
    case TermKind::HasValue: os << "∃"; print(os, op(0)); os << ".{" << t.name << '}'; break;
    case TermKind::HasDataValue:
      os << "∃";
      print(os, op(0));
      os << ".{";
      print_constant(os, t.constants.at(0));
      os << '}';
      break;
    case TermKind::Exists:
    case TermKind::ForAll:
    case TermKind::AtLeast:
    case TermKind::AtMost:
      if (t.kind == TermKind::Exists) os << "∃";
      if (t.kind == TermKind::ForAll) os << "∀";
      if (t.kind == TermKind::AtLeast) os << "≥" << t.cardinality << ' ';
      if (t.kind == TermKind::AtMost) os << "≤" << t.cardinality << ' ';
      print(os, op(0));
      os << '.';
      print(os, op(1));
      break;
    case TermKind::UniversalRole: os << 'U'; break;
    case TermKind::Inverse: print(os, op(0)); os << "⁻"; break;
    case TermKind::Identity: os << "id"; print_ops(os, t, ", "); break;
    case TermKind::Product: print_ops(os, t, " × "); break;
    case TermKind::DomainRestriction: print(os, op(0)); os << "_{"; print(os, op(1)); os << "|}"; break;
    case TermKind::RangeRestriction: print(os, op(0)); os << "_{|"; print(os, op(1)); os << '}'; break;
    case TermKind::Restriction:
      print(os, op(0));
      os << "_{";
      print(os, op(1));
      os << '|';
      print(os, op(2));
      os << '}';
      break;
    case TermKind::OneOf:
      os << '{';
      for (std::size_t i = 0; i < t.constants.size(); ++i) {
        if (i > 0) os << ", ";
        print_constant(os, t.constants[i]);
      }
      os << '}';
      break;
    case TermKind::Not: os << "¬"; print(os, op(0)); break;
    case TermKind::And: print_ops(os, t, " ⊓ "); break;
    case TermKind::Or: print_ops(os, t, " ⊔ "); break;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print(os, t);
  return os.str();
}

std::string to_string(const Axiom& a) {
  std::ostringstream os;
  auto term = [&](std::size_t i) { return i < a.terms.size() ? to_string(a.terms[i]) : std::string("?"); };
  auto ind = [&](std::size_t i) { return i < a.individuals.size() ? a.individuals[i] : std::string("?"); };
  std::string c;
  if (a.constant) {
    std::ostringstream cs;
    print_constant(cs, *a.constant);
    c = cs.str();
  }
  switch (a.kind) {
    case AxiomKind::RoleEquivalence:
    case AxiomKind::Equivalence: os << term(0) << " ≡ " << term(1); break;
    case AxiomKind::RoleInclusion:
    case AxiomKind::Inclusion: os << term(0) << " ⊑ " << term(1); break;
    case AxiomKind::RoleChainInclusion:
      for (std::size_t i = 0; i + 1 < a.terms.size(); ++i) os << (i ? " " : "") << term(i);
      os << " ⊑ " << term(a.terms.empty() ? 0 : a.terms.size() - 1);
      break;
    case AxiomKind::Symmetric: os << "Sym(" << term(0) << ')'; break;
    case AxiomKind::Asymmetric: os << "Asym(" << term(0) << ')'; break;
    case AxiomKind::Reflexive: os << "Ref(" << term(0) << ')'; break;
    case AxiomKind::Irreflexive: os << "Irref(" << term(0) << ')'; break;
    case AxiomKind::DisjointRoles: os << "Dis(" << term(0) << ", " << term(1) << ')'; break;
    case AxiomKind::Transitive: os << "Tra(" << term(0) << ')'; break;
    case AxiomKind::Functional: os << "Fun(" << term(0) << ')'; break;
    case AxiomKind::ConceptAssertion: os << ind(0) << " : " << term(0); break;
    case AxiomKind::RoleAssertion: os << '(' << ind(0) << ", " << ind(1) << ") : " << term(0); break;
    case AxiomKind::SameIndividual: os << ind(0) << " = " << ind(1); break;
    case AxiomKind::DifferentIndividual: os << ind(0) << " ≠ " << ind(1); break;
    case AxiomKind::DataAssertion: os << c << " : " << term(0); break;
    case AxiomKind::DataRoleAssertion: os << '(' << ind(0) << ", " << c << ") : " << term(0); break;
  }
  return os.str();
}

}  // namespace dl4x::dl
