#pragma once

// Knowledge bases of the description logic DL<4LQS^R,x>(D): concept, role and
// data type terms, RBox/TBox/ABox statements, and the fragment check.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dl4x::dl {

// A data type constant e_d.
struct Constant {
  std::string value;
  std::string datatype;

  friend auto operator<=>(const Constant&, const Constant&) = default;
  friend bool operator==(const Constant&, const Constant&) = default;
};

enum class TermKind {
  // concepts
  ConceptName,
  Top,
  Bottom,
  Nominal,       // {a}
  HasSelf,       // exists R.Self
  HasValue,      // exists R.{a}
  HasDataValue,  // exists P.{e_d}
  // quantified restrictions; only admitted at the top of an inclusion side
  Exists,   // exists R.C / exists P.t
  ForAll,   // forall R.C / forall P.t
  AtLeast,  // >=n R.C / >=n P.t
  AtMost,   // <=n R.C / <=n P.t
  // abstract roles
  RoleName,
  UniversalRole,
  Inverse,
  Identity,  // id(C)
  Product,   // C1 x C2
  // concrete roles
  DataRoleName,
  // role restrictions, abstract or concrete depending on the role operand
  DomainRestriction,  // R_{C|}
  RangeRestriction,   // R_{|C}, P_{|t}
  Restriction,        // R_{C1|C2}, P_{C|t}
  // data type terms
  Datatype,
  OneOf,  // {e_d1, ..., e_dn}
  // Boolean operators shared by concepts, roles and data type terms
  Not,
  And,
  Or,
};

enum class Category { Concept, AbstractRole, ConcreteRole, DataRange };

struct Term {
  TermKind kind;
  std::string name;                 // entity name or nominal individual
  std::vector<Constant> constants;  // OneOf, HasDataValue
  int cardinality = 0;              // AtLeast, AtMost
  std::vector<Term> operands;

  friend bool operator==(const Term&, const Term&) = default;
};

// Category of a well-formed term, nullopt when operand kinds do not fit.
std::optional<Category> category_of(const Term& t);

// True iff the term contains no Exists/ForAll/AtLeast/AtMost node.
bool is_plain(const Term& t);

// Term constructors.
Term concept_name(std::string name);
Term top();
Term bottom();
Term nominal(std::string individual);
Term has_self(Term role);
Term has_value(Term role, std::string individual);
Term has_data_value(Term data_role, Constant c);
Term exists(Term role, Term filler);
Term forall(Term role, Term filler);
Term at_least(int n, Term role, Term filler);
Term at_most(int n, Term role, Term filler);
Term role(std::string name);
Term universal_role();
Term inverse(Term role);
Term identity(Term c);
Term product(Term lhs, Term rhs);
Term data_role(std::string name);
Term domain_restriction(Term role, Term c);
Term range_restriction(Term role, Term filler);
Term restriction(Term role, Term domain, Term range);
Term datatype(std::string name);
Term one_of(std::vector<Constant> constants);
Term negation(Term t);
Term conjunction(std::vector<Term> ops);
Term disjunction(std::vector<Term> ops);

enum class AxiomKind {
  // RBox
  RoleEquivalence,
  RoleInclusion,
  RoleChainInclusion,  // terms = R1..Rn, R
  Symmetric,
  Asymmetric,
  Reflexive,
  Irreflexive,
  DisjointRoles,
  Transitive,
  Functional,
  // TBox: concept or data type terms
  Equivalence,
  Inclusion,
  // ABox
  ConceptAssertion,   // a : C
  RoleAssertion,      // (a, b) : R
  SameIndividual,     // a = b
  DifferentIndividual,  // a != b
  DataAssertion,      // e_d : t
  DataRoleAssertion,  // (a, e_d) : P
};

enum class Box { RBox, TBox, ABox };

Box box_of(AxiomKind k);
const char* to_string(AxiomKind k);

struct Axiom {
  AxiomKind kind;
  std::vector<Term> terms;
  std::vector<std::string> individuals;
  std::optional<Constant> constant;

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

// Axiom constructors.
Axiom role_equivalence(Term r1, Term r2);
Axiom role_inclusion(Term r1, Term r2);
Axiom role_chain(std::vector<Term> chain, Term r);
Axiom symmetric(Term r);
Axiom asymmetric(Term r);
Axiom reflexive(Term r);
Axiom irreflexive(Term r);
Axiom disjoint_roles(Term r1, Term r2);
Axiom transitive(Term r);
Axiom functional(Term r);
Axiom equivalence(Term lhs, Term rhs);
Axiom inclusion(Term lhs, Term rhs);
Axiom concept_assertion(std::string a, Term c);
Axiom role_assertion(std::string a, std::string b, Term r);
Axiom same_individual(std::string a, std::string b);
Axiom different_individual(std::string a, std::string b);
Axiom data_assertion(Constant e, Term t);
Axiom data_role_assertion(std::string a, Constant e, Term p);

// The data type map D restricted to what is used: N_D and N_C(d).
struct DatatypeMap {
  std::map<std::string, std::set<std::string>> constants;  // datatype -> lexical values

  void add_datatype(const std::string& d) { constants[d]; }
  void add_constant(const Constant& c) { constants[c.datatype].insert(c.value); }

  friend bool operator==(const DatatypeMap&, const DatatypeMap&) = default;
};

// Declared names per kind, in declaration order.
struct Signature {
  std::vector<std::string> individuals;
  std::vector<std::string> concepts;
  std::vector<std::string> abstract_roles;
  std::vector<std::string> concrete_roles;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct KnowledgeBase {
  std::vector<Axiom> rbox;
  std::vector<Axiom> tbox;
  std::vector<Axiom> abox;
  DatatypeMap dmap;
  Signature signature;

  // Appends to the box the axiom kind belongs to.
  void add(Axiom a);

  // Statements in the order RBox, TBox, ABox.
  std::vector<const Axiom*> statements() const;

  // Adds every name and constant used by the statements to the signature
  // and the data type map, keeping existing entries and their order.
  void declare_used_names();

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

struct Violation {
  Axiom statement;
  std::string rule;
};

// Grammar check: one Violation per statement that does not instantiate a
// statement form of the logic.
std::vector<Violation> validate_fragment(const KnowledgeBase& kb);
std::optional<std::string> check_statement(const Axiom& a);

// Readable DL syntax, used in diagnostics.
std::string to_string(const Term& t);
std::string to_string(const Axiom& a);

}  // namespace dl4x::dl
