#pragma once

// Translation of knowledge bases into 4LQS^R formulae.
//
// Individuals a, concepts C and roles R become X^0_a, X^1_C and X^3_R.
// A datatype d becomes X^1_d and a constant e of type d becomes the sort-0
// variable X^0_{e^^d}. Individuals and constants share sort 0 but range over
// disjoint domains, recorded per variable as a Range.

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dl4x/kb.hpp"
#include "dl4x/logic.hpp"

namespace dl4x {

enum class Range : std::uint8_t { Abstract, Concrete };

// VVL (free variables) and VQL (bound variables), per sort, in first-seen
// order, plus the range of every sort-0 variable.
class VariableRegistry {
 public:
  // Registers a free variable; no-op if already present.
  void add_free(const Variable& v, Range r = Range::Abstract);
  // Registers a fresh bound sort-0 variable z<k>, avoiding every free
  // sort-0 name and every bound name already issued.
  Variable fresh_bound(Range r);

  bool contains(const Variable& v) const;
  Range range_of(const Variable& v) const;

  std::span<const Variable> free(int sort) const { return free_[sort]; }
  std::span<const Variable> bound() const { return bound_; }

  // Free sort-0 variables of the given range, in registry order.
  std::vector<Variable> domain(Range r) const;

  // Position of a free sort-0 variable in VVL; the order <_theta.
  std::size_t position(const Variable& v) const;

  // A copy with the same free variables and no bound ones.
  VariableRegistry without_bound() const;

 private:
  std::array<std::vector<Variable>, 4> free_;
  std::vector<Variable> bound_;
  std::map<Variable, Range> range_;
  std::map<Variable, std::size_t> position_;
  std::size_t next_bound_ = 1;
};

struct TranslateOptions {
  int max_cardinality = 8;
};

struct TranslationOutput {
  std::vector<Literal> ground_literals;      // ABox
  std::vector<UniversalFormula> universals;  // RBox, TBox, non-literal ABox
  std::vector<Literal> data_facts;           // data type structure
  VariableRegistry registry;
};

// Variable naming.
Variable individual_variable(const std::string& a);
Variable constant_variable(const dl::Constant& c);
Variable concept_variable(const std::string& c);
Variable datatype_variable(const std::string& d);
Variable role_variable(const std::string& r);

// Characteristic conditions. Each throws NotAConcept / NotARole when the
// term has the wrong category, InvalidStatement for quantified restrictions.
Matrix translate_concept(const dl::Term& c, const Variable& x);
Matrix translate_role(const dl::Term& r, const Variable& x, const Variable& y);
Matrix translate_datatype(const dl::Term& t, const Variable& x);

// Translates one statement. Bound variables are drawn from `registry`;
// free variables are registered in it.
struct AxiomTranslation {
  std::vector<Literal> literals;
  std::vector<UniversalFormula> universals;
};
AxiomTranslation translate_axiom(const dl::Axiom& a, VariableRegistry& registry,
                                 const TranslateOptions& options = {});

// Throws InvalidStatement if validate_fragment(kb) is not empty and
// ResourceLimit for cardinality bounds above options.max_cardinality.
TranslationOutput translate_kb(const dl::KnowledgeBase& kb, const TranslateOptions& options = {});

}  // namespace dl4x
