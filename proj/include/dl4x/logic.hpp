#pragma once

// Abstract syntax of the level-0 fragment of 4LQS^R used by the reasoner:
// sorted variables, atomic formulae, literals, clauses and purely universal
// formulae over sort-0 variables.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace dl4x {

enum class Binding : std::uint8_t { Free, Bound };

// A 4LQS^R variable X^sort_name. Sort 0 denotes individuals, 1 sets,
// 2 collections of sets and 3 relations (sets of pairs).
struct Variable {
  int sort = 0;
  std::string name;
  Binding binding = Binding::Free;

  Variable() = default;
  Variable(int sort, std::string name, Binding binding = Binding::Free);

  static Variable individual(std::string name) { return {0, std::move(name)}; }
  static Variable set(std::string name) { return {1, std::move(name)}; }
  static Variable relation(std::string name) { return {3, std::move(name)}; }
  static Variable bound(std::string name) { return {0, std::move(name), Binding::Bound}; }

  bool is_bound() const { return binding == Binding::Bound; }

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// True iff `name` may be used as a variable name: non-empty, no '$', '{', '}'.
bool is_valid_name(std::string_view name);

// Percent-encodes '$', '{', '}' and whitespace.
std::string escape_name(std::string_view s);

enum class Relator : std::uint8_t { Membership, Equality };

// x = y, x in X^1, or <x,y> in X^3.
class Atom {
 public:
  static Atom member(Variable x, Variable set);
  static Atom pair_member(Variable x, Variable y, Variable relation);
  static Atom equal(Variable x, Variable y);

  Relator relator() const { return relator_; }
  bool is_equality() const { return relator_ == Relator::Equality; }
  bool is_pair() const { return second_.has_value(); }

  // Left argument (x), second pair component (y, pair atoms only) and the
  // right-hand side (X^1, X^3, or y for equalities).
  const Variable& first() const { return first_; }
  const Variable& second() const { return *second_; }
  const Variable& target() const { return target_; }

  // x = x
  bool is_reflexive_equality() const { return is_equality() && first_ == target_; }

  // Applies `f` to every sort-0 argument.
  template <typename F>
  Atom map_individuals(F&& f) const {
    Atom out = *this;
    out.first_ = f(first_);
    if (second_) out.second_ = f(*second_);
    if (is_equality()) out.target_ = f(target_);
    return out;
  }

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  Atom(Relator r, Variable first, std::optional<Variable> second, Variable target)
      : relator_(r), first_(std::move(first)), second_(std::move(second)), target_(std::move(target)) {}

  Relator relator_;
  Variable first_;
  std::optional<Variable> second_;
  Variable target_;
};

struct Literal {
  Atom atom;
  bool positive = true;

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(Atom a) { return {std::move(a), true}; }
inline Literal neg(Atom a) { return {std::move(a), false}; }

Literal complement(const Literal& l);

// not (x = x)
inline bool is_self_disequality(const Literal& l) {
  return !l.positive && l.atom.is_reflexive_equality();
}

// A non-empty disjunction of literals; disjunct order is significant.
class Clause {
 public:
  explicit Clause(std::vector<Literal> disjuncts);
  Clause(std::initializer_list<Literal> disjuncts) : Clause(std::vector<Literal>(disjuncts)) {}

  std::span<const Literal> disjuncts() const { return disjuncts_; }
  std::size_t size() const { return disjuncts_.size(); }
  const Literal& operator[](std::size_t i) const { return disjuncts_[i]; }
  bool is_unit() const { return disjuncts_.size() == 1; }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> disjuncts_;
};

struct Tautology {
  friend bool operator==(Tautology, Tautology) { return true; }
};
struct Unsatisfiable {
  friend bool operator==(Unsatisfiable, Unsatisfiable) { return true; }
};

using SimplifiedClause = std::variant<Clause, Tautology, Unsatisfiable>;

// Removes duplicate literals and literals not (x = x); detects tautologies
// (complementary pair or x = x) and clauses made only of not (x = x).
SimplifiedClause simplify_clause(const Clause& c);

enum class Connective : std::uint8_t { Literal, True, False, Not, And, Or, Implies, Iff };

// Propositional matrix over atomic formulae. Immutable; copies share nodes.
class Matrix {
 public:
  static Matrix literal(Literal l);
  static Matrix atom(Atom a) { return literal(pos(std::move(a))); }
  static Matrix truth();
  static Matrix falsity();
  static Matrix negation(Matrix m);
  // Zero operands give the neutral element, one operand is returned as is.
  static Matrix conjunction(std::vector<Matrix> ops);
  static Matrix disjunction(std::vector<Matrix> ops);
  static Matrix implication(Matrix lhs, Matrix rhs);
  static Matrix equivalence(Matrix lhs, Matrix rhs);

  Connective connective() const { return node_->connective; }
  const Literal& lit() const { return *node_->lit; }
  std::span<const Matrix> operands() const { return node_->operands; }

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  struct Node {
    Connective connective;
    std::optional<Literal> lit;
    std::vector<Matrix> operands;
  };
  explicit Matrix(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Matrix make(Connective c, std::vector<Matrix> ops);

  std::shared_ptr<const Node> node_;
};

// Builds the matrix of a clause (a literal, or a disjunction of literals).
Matrix clause_matrix(const Clause& c);

// Collects the distinct variables of `m` in first-occurrence order.
std::vector<Variable> variables_of(const Matrix& m);

// Applies `f` to every sort-0 argument of every atom of `m`.
template <typename F>
Matrix map_individuals(const Matrix& m, F&& f) {
  switch (m.connective()) {
    case Connective::Literal:
      return Matrix::literal({m.lit().atom.map_individuals(f), m.lit().positive});
    case Connective::True:
    case Connective::False:
      return m;
    default: {
      std::vector<Matrix> ops;
      for (const auto& op : m.operands()) ops.push_back(map_individuals(op, f));
      switch (m.connective()) {
        case Connective::Not: return Matrix::negation(ops[0]);
        case Connective::And: return Matrix::conjunction(std::move(ops));
        case Connective::Or: return Matrix::disjunction(std::move(ops));
        case Connective::Implies: return Matrix::implication(ops[0], ops[1]);
        default: return Matrix::equivalence(ops[0], ops[1]);
      }
    }
  }
}

// (forall z1)...(forall zn) matrix, with z1..zn bound sort-0 variables.
struct UniversalFormula {
  std::vector<Variable> prefix;
  Matrix matrix;

  UniversalFormula(std::vector<Variable> prefix, Matrix matrix);

  bool is_ground() const { return prefix.empty(); }

  friend bool operator==(const UniversalFormula&, const UniversalFormula&) = default;
};

// Checks the prefix invariants: distinct bound sort-0 variables, each
// occurring in the matrix, and no bound variable of the matrix outside it.
bool is_well_formed(const UniversalFormula& f);

}  // namespace dl4x
