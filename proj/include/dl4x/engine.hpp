#pragma once

// KE-tableau over ground clause sets: E-rule, PB-rule, saturation,
// equivalence classes with the substitution sigma and model extraction.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dl4x/logic.hpp"
#include "dl4x/normalize.hpp"

namespace dl4x {

enum class Rule : std::uint8_t { E, PB };

const char* to_string(Rule r);

struct TraceEvent {
  Rule rule;
  std::size_t branch;  // branch the rule was applied to
  std::size_t clause;  // index of the clause in Phi_KB
  Literal literal;     // E: literal added; PB: literal of the left child
  std::size_t left = 0, right = 0;  // PB: child branches
};

// A literal l and its complement, or a single literal not (x = x).
struct ClosureWitness {
  Literal literal;
  std::optional<Literal> complement;
};

std::string to_string(const ClosureWitness& w);

struct EquivPartition {
  // Every free sort-0 variable in exactly one class; classes ordered by
  // representative, members by <_theta; the representative comes first.
  std::vector<std::vector<Variable>> classes;
  std::map<Variable, Variable> sigma;  // non-representative -> representative

  const Variable& representative(const Variable& v) const;
  std::vector<std::vector<Variable>> nontrivial() const;
  Literal apply(const Literal& l) const;
};

// Finest partition of `order` merging x and y for every x = y on the branch.
// `order` lists the free sort-0 variables in <_theta order.
EquivPartition compute_equiv(std::span<const Literal> branch, std::span<const Variable> order);

// Closure of the substituted branch: a complementary pair or not (z = z).
std::optional<ClosureWitness> final_clash_check(std::span<const Literal> branch, const EquivPartition& p);

// Minimal model over the classes of `p`.
struct Interpretation {
  std::vector<std::vector<Variable>> domain;  // the classes
  std::map<Variable, std::set<std::size_t>> sets;
  std::map<Variable, std::set<std::pair<std::size_t, std::size_t>>> relations;

  std::map<Variable, std::size_t> element;  // variable -> class index

  std::size_t element_of(const Variable& x) const;
  bool holds(const Literal& l) const;
  bool satisfies(const Clause& c) const;
};

// `sets` and `relations` list the sort-1 and sort-3 variables to interpret.
Interpretation extract_model(std::span<const Literal> branch, const EquivPartition& p,
                             std::span<const Variable> sets, std::span<const Variable> relations);

class Tableau {
 public:
  enum class Status : std::uint8_t { Open, Closed, Split };

  struct Node {
    std::vector<Literal> literals;  // root: the unit clauses
    std::optional<Rule> rule;       // rule that created the node
    std::optional<std::size_t> clause;
    std::optional<std::size_t> parent, left, right;
  };

  struct Branch {
    std::size_t id;
    std::size_t leaf;  // node index
    Status status = Status::Open;
    std::vector<Literal> literals;  // root to leaf, insertion order
    std::optional<ClosureWitness> witness;
  };

  struct Stats {
    std::size_t e_rules = 0;
    std::size_t pb_rules = 0;
  };

  // The root holds every clause of `e`; unit clauses are its literals.
  explicit Tableau(const ExpandedKB& e);

  std::span<const Clause> clauses() const { return clauses_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t node_count() const { return nodes_.size(); }
  const Branch& branch(std::size_t id) const { return branches_[id].b; }
  std::size_t branch_count() const { return branches_.size(); }

  bool on_branch(std::size_t branch, const Literal& l) const;
  bool fulfilled(std::size_t branch, std::size_t clause) const;
  // Disjunct indices of `clause` whose complement is not on the branch.
  std::vector<std::size_t> open_disjuncts(std::size_t branch, std::size_t clause) const;
  // Some clause of the branch admits the E-rule.
  bool e_rule_applicable(std::size_t branch) const;

  // Adds disjunct i of `clause`. Throws PreconditionViolated unless the
  // complements of all other disjuncts are on the branch and disjunct i is not.
  // Returns the new node.
  std::size_t apply_e_rule(std::size_t branch, std::size_t clause, std::size_t i);

  // Splits on `l`: the left child branch receives l, the right complement(l).
  // Throws PreconditionViolated if l or its complement is on the branch.
  std::pair<std::size_t, std::size_t> apply_pb_rule(std::size_t branch, const Literal& l,
                                                    std::size_t clause = 0);

  // Applies the rules until every branch is closed or fulfilled, then runs
  // the equivalence-class clash check on the open ones.
  void saturate();

  // Leaf branches in tree order (left to right).
  std::vector<std::size_t> open_branches() const;
  std::vector<std::size_t> closed_branches() const;

  // Available after saturate() for branches that stayed open.
  const EquivPartition& partition(std::size_t branch) const { return branches_[branch].partition; }
  Interpretation model(std::size_t branch) const;

  const std::vector<TraceEvent>& trace() const { return trace_; }
  const Stats& stats() const { return stats_; }

  // Indented tree, literals and clauses in the coding.
  std::string render() const;

 private:
  struct State {
    Branch b;
    std::vector<std::int8_t> value;        // per atom: 0 absent, 1 positive, -1 negative
    std::vector<std::size_t> unfulfilled;  // clause indices, top = back
    EquivPartition partition;
  };

  int find_atom(const Atom& a) const;
  int intern(const Atom& a);
  std::int8_t value(const State& s, const Literal& l) const;
  void assert_literal(State& s, const Literal& l);
  std::size_t add_branch(State s);
  void finish(std::size_t branch);
  std::vector<std::size_t> leaves(Status status) const;
  void render_node(std::string& out, std::size_t node, std::size_t indent) const;

  std::vector<Clause> clauses_;
  std::vector<Variable> domain_;
  std::vector<Variable> sets_;
  std::vector<Variable> relations_;
  std::map<Atom, int> atoms_;
  std::vector<Node> nodes_;
  std::vector<State> branches_;
  std::map<std::size_t, std::size_t> branch_of_leaf_;
  std::vector<TraceEvent> trace_;
  Stats stats_;
};

}  // namespace dl4x
