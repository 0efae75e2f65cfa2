#include "dl4x/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace dl4x {

Variable::Variable(int sort_, std::string name_, Binding binding_)
    : sort(sort_), name(std::move(name_)), binding(binding_) {
  if (sort < 0 || sort > 3) throw std::invalid_argument("variable sort out of range");
  if (!is_valid_name(name)) throw std::invalid_argument("invalid variable name '" + name + "'");
}

bool is_valid_name(std::string_view name) {
  return !name.empty() && name.find_first_of("${}") == std::string_view::npos;
}

std::string escape_name(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (c == '$' || c == '{' || c == '}' || std::isspace(u)) {
      out += '%';
      out += kHex[u >> 4];
      out += kHex[u & 0xF];
    } else {
      out += c;
    }
  }
  return out;
}

Atom Atom::member(Variable x, Variable set) {
  if (x.sort != 0 || set.sort != 1) throw std::invalid_argument("membership needs x^0 in X^1");
  return Atom(Relator::Membership, std::move(x), std::nullopt, std::move(set));
}

Atom Atom::pair_member(Variable x, Variable y, Variable relation) {
  if (x.sort != 0 || y.sort != 0 || relation.sort != 3)
    throw std::invalid_argument("pair membership needs <x^0,y^0> in X^3");
  return Atom(Relator::Membership, std::move(x), std::move(y), std::move(relation));
}

Atom Atom::equal(Variable x, Variable y) {
  if (x.sort != 0 || y.sort != 0) throw std::invalid_argument("equality relates sort-0 variables");
  return Atom(Relator::Equality, std::move(x), std::nullopt, std::move(y));
}

Literal complement(const Literal& l) { return {l.atom, !l.positive}; }

Clause::Clause(std::vector<Literal> disjuncts) : disjuncts_(std::move(disjuncts)) {
  if (disjuncts_.empty()) throw std::invalid_argument("empty clause");
}

SimplifiedClause simplify_clause(const Clause& c) {
  std::vector<Literal> kept;
  std::set<Literal> seen;
  for (const auto& l : c.disjuncts()) {
    if (l.atom.is_reflexive_equality()) {
      if (l.positive) return Tautology{};
      continue;
    }
    if (seen.contains(complement(l))) return Tautology{};
    if (seen.insert(l).second) kept.push_back(l);
  }
  // every disjunct was not (x = x)
  if (kept.empty()) return Unsatisfiable{};
  return Clause(std::move(kept));
}

Matrix Matrix::make(Connective c, std::vector<Matrix> ops) {
  return Matrix(std::make_shared<const Node>(Node{c, std::nullopt, std::move(ops)}));
}

Matrix Matrix::literal(Literal l) {
  return Matrix(std::make_shared<const Node>(Node{Connective::Literal, std::move(l), {}}));
}

Matrix Matrix::truth() { return make(Connective::True, {}); }
Matrix Matrix::falsity() { return make(Connective::False, {}); }
Matrix Matrix::negation(Matrix m) { return make(Connective::Not, {std::move(m)}); }

Matrix Matrix::conjunction(std::vector<Matrix> ops) {
  if (ops.empty()) return truth();
  if (ops.size() == 1) return ops.front();
  return make(Connective::And, std::move(ops));
}

Matrix Matrix::disjunction(std::vector<Matrix> ops) {
  if (ops.empty()) return falsity();
  if (ops.size() == 1) return ops.front();
  return make(Connective::Or, std::move(ops));
}

Matrix Matrix::implication(Matrix lhs, Matrix rhs) {
  return make(Connective::Implies, {std::move(lhs), std::move(rhs)});
}

Matrix Matrix::equivalence(Matrix lhs, Matrix rhs) {
  return make(Connective::Iff, {std::move(lhs), std::move(rhs)});
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.node_ == b.node_) return true;
  if (a.connective() != b.connective()) return false;
  if (a.connective() == Connective::Literal) return a.lit() == b.lit();
  return std::ranges::equal(a.operands(), b.operands());
}

Matrix clause_matrix(const Clause& c) {
  std::vector<Matrix> ops;
  for (const auto& l : c.disjuncts()) ops.push_back(Matrix::literal(l));
  return Matrix::disjunction(std::move(ops));
}

namespace {

void collect(const Matrix& m, std::vector<Variable>& out) {
  auto add = [&](const Variable& v) {
    if (std::ranges::find(out, v) == out.end()) out.push_back(v);
  };
  if (m.connective() == Connective::Literal) {
    const Atom& a = m.lit().atom;
    add(a.first());
    if (a.is_pair()) add(a.second());
    add(a.target());
    return;
  }
  for (const auto& op : m.operands()) collect(op, out);
}

}  // namespace

std::vector<Variable> variables_of(const Matrix& m) {
  std::vector<Variable> out;
  collect(m, out);
  return out;
}

UniversalFormula::UniversalFormula(std::vector<Variable> prefix_, Matrix matrix_)
    : prefix(std::move(prefix_)), matrix(std::move(matrix_)) {}

bool is_well_formed(const UniversalFormula& f) {
  std::set<Variable> prefix;
  for (const auto& v : f.prefix) {
    if (v.sort != 0 || !v.is_bound() || !prefix.insert(v).second) return false;
  }
  std::set<Variable> used;
  for (const auto& v : variables_of(f.matrix)) {
    if (v.is_bound()) {
      if (!prefix.contains(v)) return false;
      used.insert(v);
    }
  }
  return used.size() == prefix.size();
}

}  // namespace dl4x
