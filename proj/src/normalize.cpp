#include "dl4x/normalize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dl4x/errors.hpp"

namespace dl4x {

namespace {

// A conjunction of disjunctions; an empty inner vector is the empty clause.
using RawCnf = std::vector<std::vector<Literal>>;

bool tautological(const std::vector<Literal>& c) {
  return std::ranges::any_of(c, [&](const Literal& l) {
    return (l.positive && l.atom.is_reflexive_equality()) || std::ranges::find(c, complement(l)) != c.end();
  });
}

RawCnf concat(RawCnf a, RawCnf b) {
  std::ranges::move(b, std::back_inserter(a));
  return a;
}

// Distributes a disjunction of two CNFs.
RawCnf product(const RawCnf& a, const RawCnf& b) {
  RawCnf out;
  for (const auto& ca : a)
    for (const auto& cb : b) {
      std::vector<Literal> c = ca;
      c.insert(c.end(), cb.begin(), cb.end());
      if (!tautological(c)) out.push_back(std::move(c));
    }
  return out;
}

RawCnf product_all(std::span<const Matrix> ops, bool positive);

// CNF of m (positive) or of its negation.
RawCnf raw_cnf(const Matrix& m, bool positive) {
  auto ops = m.operands();
  switch (m.connective()) {
    case Connective::Literal: return {{positive ? m.lit() : complement(m.lit())}};
    case Connective::True: return positive ? RawCnf{} : RawCnf{{}};
    case Connective::False: return positive ? RawCnf{{}} : RawCnf{};
    case Connective::Not: return raw_cnf(ops[0], !positive);
    case Connective::And:
    case Connective::Or: {
      bool conjunctive = (m.connective() == Connective::And) == positive;
      if (!conjunctive) return product_all(ops, positive);
      RawCnf out;
      for (const auto& op : ops) out = concat(std::move(out), raw_cnf(op, positive));
      return out;
    }
    case Connective::Implies:
      if (positive) return product(raw_cnf(ops[0], false), raw_cnf(ops[1], true));
      return concat(raw_cnf(ops[0], true), raw_cnf(ops[1], false));
    case Connective::Iff:
      if (positive)
        return concat(product(raw_cnf(ops[0], false), raw_cnf(ops[1], true)),
                      product(raw_cnf(ops[1], false), raw_cnf(ops[0], true)));
      return concat(product(raw_cnf(ops[0], true), raw_cnf(ops[1], true)),
                    product(raw_cnf(ops[0], false), raw_cnf(ops[1], false)));
  }
  return {};
}

RawCnf product_all(std::span<const Matrix> ops, bool positive) {
  RawCnf out{{}};
  for (const auto& op : ops) out = product(out, raw_cnf(op, positive));
  return out;
}

Clause as_clause(const Matrix& m) {
  if (m.connective() == Connective::Literal) return Clause{m.lit()};
  std::vector<Literal> lits;
  for (const auto& op : m.operands()) {
    if (op.connective() != Connective::Literal) throw PreconditionViolated("matrix is not a clause");
    lits.push_back(op.lit());
  }
  if (m.connective() != Connective::Or || lits.empty()) throw PreconditionViolated("matrix is not a clause");
  return Clause(std::move(lits));
}

std::vector<Variable> prefix_in(const UniversalFormula& f, const Matrix& m) {
  auto used = variables_of(m);
  std::vector<Variable> out;
  for (const auto& v : f.prefix)
    if (std::ranges::find(used, v) != used.end()) out.push_back(v);
  return out;
}

template <typename F>
Clause map_clause(const Clause& c, F&& f) {
  std::vector<Literal> out;
  for (const auto& l : c.disjuncts()) out.push_back({l.atom.map_individuals(f), l.positive});
  return Clause(std::move(out));
}

}  // namespace

std::optional<std::vector<Clause>> cnf_clauses(const Matrix& m) {
  std::vector<Clause> out;
  for (const auto& raw : raw_cnf(m, true)) {
    if (raw.empty()) return std::nullopt;
    auto s = simplify_clause(Clause(raw));
    if (std::holds_alternative<Unsatisfiable>(s)) return std::nullopt;
    if (auto* c = std::get_if<Clause>(&s); c && std::ranges::find(out, *c) == out.end()) out.push_back(*c);
  }
  return out;
}

UniversalFormula to_cnf(const UniversalFormula& f) {
  auto clauses = cnf_clauses(f.matrix);
  Matrix m = Matrix::falsity();
  if (clauses) {
    std::vector<Matrix> ops;
    for (const auto& c : *clauses) ops.push_back(clause_matrix(c));
    m = Matrix::conjunction(std::move(ops));
  }
  return UniversalFormula(prefix_in(f, m), m);
}

std::vector<UniversalFormula> miniscope_and_rename(const UniversalFormula& f, const VariableRegistry& source,
                                                   VariableRegistry& target) {
  auto clauses = cnf_clauses(f.matrix);
  if (!clauses) return {UniversalFormula({}, Matrix::falsity())};
  std::vector<UniversalFormula> out;
  for (const auto& c : *clauses) {
    Matrix m = clause_matrix(c);
    std::map<Variable, Variable> renaming;
    std::vector<Variable> prefix;
    for (const auto& v : prefix_in(f, m)) {
      Variable fresh = target.fresh_bound(source.range_of(v));
      renaming.emplace(v, fresh);
      prefix.push_back(fresh);
    }
    m = map_individuals(m, [&](const Variable& v) {
      auto it = renaming.find(v);
      return it == renaming.end() ? v : it->second;
    });
    out.emplace_back(std::move(prefix), std::move(m));
  }
  return out;
}

NormalizedKB normalize(const TranslationOutput& t) {
  NormalizedKB n{{}, t.ground_literals, t.data_facts, t.registry.without_bound()};
  for (const auto& u : t.universals)
    std::ranges::move(miniscope_and_rename(u, t.registry, n.registry), std::back_inserter(n.formulas));
  return n;
}

ExpandedKB expand_kb(const NormalizedKB& n, const ExpandOptions& options) {
  ExpandedKB e{{}, {}, n.registry};
  auto& reg = e.registry;
  if (reg.domain(Range::Abstract).empty()) reg.add_free(Variable::individual("_witness"), Range::Abstract);
  const std::vector<Variable> abstract = reg.domain(Range::Abstract);
  const std::vector<Variable> concrete = reg.domain(Range::Concrete);
  const Literal contradiction = neg(Atom::equal(abstract.front(), abstract.front()));

  std::size_t instances = 0;
  auto charge = [&](std::size_t k) {
    if (k > options.max_instances - std::min(instances, options.max_instances))
      throw ResourceLimit("ground instances exceed the limit " + std::to_string(options.max_instances));
    instances += k;
  };

  for (const auto& f : n.formulas) {
    if (f.matrix.connective() == Connective::True) continue;
    if (f.matrix.connective() == Connective::False) {
      charge(1);
      e.clauses.push_back(Clause{contradiction});
      continue;
    }
    Clause clause = as_clause(f.matrix);
    std::vector<const std::vector<Variable>*> domains;
    std::size_t count = 1;
    for (const auto& v : f.prefix) {
      domains.push_back(reg.range_of(v) == Range::Concrete ? &concrete : &abstract);
      std::size_t size = domains.back()->size();
      count = (size == 0 || count <= options.max_instances / size) ? count * size : options.max_instances + 1;
    }
    charge(count);
    if (count == 0) continue;

    std::vector<std::size_t> index(f.prefix.size(), 0);
    for (;;) {
      std::map<Variable, Variable> sigma;
      for (std::size_t i = 0; i < f.prefix.size(); ++i) sigma.emplace(f.prefix[i], (*domains[i])[index[i]]);
      Clause ground = map_clause(clause, [&](const Variable& v) {
        auto it = sigma.find(v);
        return it == sigma.end() ? v : it->second;
      });
      auto s = simplify_clause(ground);
      if (auto* c = std::get_if<Clause>(&s)) e.clauses.push_back(std::move(*c));
      if (std::holds_alternative<Unsatisfiable>(s)) e.clauses.push_back(Clause{contradiction});

      // odometer, last prefix variable fastest
      std::size_t k = index.size();
      while (k > 0 && ++index[k - 1] == domains[k - 1]->size()) index[--k] = 0;
      if (k == 0) break;
    }
  }
  for (const auto& l : n.ground_literals) e.clauses.push_back(Clause{l});
  for (const auto& l : n.data_facts) e.clauses.push_back(Clause{l});
  auto dom = reg.free(0);
  e.domain.assign(dom.begin(), dom.end());
  return e;
}

ExpandedKB expand_kb(const TranslationOutput& t, const ExpandOptions& options) {
  return expand_kb(normalize(t), options);
}

ExpandedKB ground_kb(std::vector<Clause> clauses) {
  ExpandedKB e{std::move(clauses), {}, {}};
  for (const auto& c : e.clauses)
    for (const auto& v : variables_of(clause_matrix(c))) e.registry.add_free(v);
  auto dom = e.registry.free(0);
  e.domain.assign(dom.begin(), dom.end());
  return e;
}

std::vector<Clash> check_node_clash(const ExpandedKB& e) {
  std::set<Literal> units;
  for (const auto& c : e.clauses)
    if (c.is_unit()) units.insert(c[0]);
  std::vector<Clash> out;
  std::set<Atom> reported;
  for (const auto& c : e.clauses) {
    if (!c.is_unit()) continue;
    const Literal& l = c[0];
    if (is_self_disequality(l)) {
      if (reported.insert(l.atom).second) out.push_back({l, std::nullopt});
    } else if (l.positive && units.contains(complement(l)) && reported.insert(l.atom).second) {
      out.push_back({l, complement(l)});
    }
  }
  return out;
}

}  // namespace dl4x
