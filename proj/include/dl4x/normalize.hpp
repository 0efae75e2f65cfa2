#pragma once

// From translation output to the ground clause set Phi_KB: CNF conversion,
// miniscoping with bound-variable renaming, grounding and the atomic clash
// check run before the tableau.

#include <optional>
#include <vector>

#include "dl4x/logic.hpp"
#include "dl4x/translate.hpp"

namespace dl4x {

// Clauses of a CNF matrix. nullopt stands for an unsatisfiable matrix (an
// empty clause), the empty vector for a valid one. Tautological clauses and
// duplicate clauses are dropped; no fresh atoms are introduced.
std::optional<std::vector<Clause>> cnf_clauses(const Matrix& m);

// The formula with its matrix in CNF (a conjunction of clause matrices, or
// true/false). Prefix variables no longer occurring are dropped.
UniversalFormula to_cnf(const UniversalFormula& f);

// Splits a CNF formula into one formula per clause, keeps only the prefix
// variables of each clause and renames them to fresh variables of `target`.
// Ranges of the original bound variables are read from `source`.
std::vector<UniversalFormula> miniscope_and_rename(const UniversalFormula& f, const VariableRegistry& source,
                                                   VariableRegistry& target);

// The normalized formula phi-bar: CNF'd, miniscoped, renamed universals plus
// the unchanged ground literals.
struct NormalizedKB {
  std::vector<UniversalFormula> formulas;
  std::vector<Literal> ground_literals;
  std::vector<Literal> data_facts;
  VariableRegistry registry;
};

NormalizedKB normalize(const TranslationOutput& t);

struct ExpandOptions {
  std::size_t max_instances = 1'000'000;
};

struct ExpandedKB {
  std::vector<Clause> clauses;   // Phi_KB
  std::vector<Variable> domain;  // free sort-0 variables, registry order
  VariableRegistry registry;
};

// Grounds every formula over the free sort-0 variables of the matching
// range, tuples in lexicographic registry order, formulas in order, then
// appends the ABox literals and the data facts as unit clauses. Adds the
// witness individual `_witness` when no individual exists. Throws
// ResourceLimit once the instance count exceeds options.max_instances.
ExpandedKB expand_kb(const NormalizedKB& n, const ExpandOptions& options = {});
ExpandedKB expand_kb(const TranslationOutput& t, const ExpandOptions& options = {});

// An ExpandedKB over arbitrary ground clauses; the registry lists their
// variables in first-occurrence order, sort-0 ones as individuals.
ExpandedKB ground_kb(std::vector<Clause> clauses);

struct Clash {
  Literal literal;                    // positive member of a pair, or not (x = x)
  std::optional<Literal> complement;  // absent for not (x = x)
};

// Complementary unit clauses and unit not (x = x).
std::vector<Clash> check_node_clash(const ExpandedKB& e);

}  // namespace dl4x
