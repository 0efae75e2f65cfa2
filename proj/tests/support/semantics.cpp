#include "semantics.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dl4x::gen {

using dl::Category;
using dl::Term;
using dl::TermKind;
using Mask = std::uint64_t;

namespace {

Mask full(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }
bool has(Mask m, int i) { return ((m >> i) & 1) != 0; }
Mask bit(int i) { return Mask{1} << i; }

struct Model {
  int n = 0;  // abstract elements
  int m = 0;  // concrete values
  std::map<std::string, int> individual;
  std::map<dl::Constant, int> constant;
  std::map<std::string, Mask> datatype;
  std::map<std::string, Mask> concepts, roles, data_roles;

  Category category(const Term& t) const {
    auto c = dl::category_of(t);
    if (!c) throw std::logic_error("ill-formed term " + dl::to_string(t));
    return *c;
  }

  // Abstract role pairs are indexed x*n + y, concrete ones x*m + v.
  int width(Category c) const { return c == Category::ConcreteRole ? m : n; }

  Mask concept_ext(const Term& t) const {
    const auto& ops = t.operands;
    switch (t.kind) {
      case TermKind::ConceptName: return concepts.at(t.name);
      case TermKind::Top: return full(n);
      case TermKind::Bottom: return 0;
      case TermKind::Nominal: return bit(individual.at(t.name));
      case TermKind::HasSelf: {
        Mask r = role(ops[0]), out = 0;
        for (int x = 0; x < n; ++x)
          if (has(r, x * n + x)) out |= bit(x);
        return out;
      }
      case TermKind::HasValue: {
        Mask r = role(ops[0]), out = 0;
        int y = individual.at(t.name);
        for (int x = 0; x < n; ++x)
          if (has(r, x * n + y)) out |= bit(x);
        return out;
      }
      case TermKind::HasDataValue: {
        Mask r = role(ops[0]), out = 0;
        int v = constant.at(t.constants.front());
        for (int x = 0; x < n; ++x)
          if (has(r, x * m + v)) out |= bit(x);
        return out;
      }
      case TermKind::Exists:
      case TermKind::ForAll:
      case TermKind::AtLeast:
      case TermKind::AtMost: {
        Category rc = category(ops[0]);
        int w = width(rc);
        Mask r = role(ops[0]);
        Mask f = rc == Category::ConcreteRole ? data_range(ops[1]) : concept_ext(ops[1]);
        Mask out = 0;
        for (int x = 0; x < n; ++x) {
          int count = 0;
          bool all = true;
          for (int y = 0; y < w; ++y) {
            if (!has(r, x * w + y)) continue;
            if (has(f, y))
              ++count;
            else
              all = false;
          }
          bool in = t.kind == TermKind::Exists   ? count >= 1
                    : t.kind == TermKind::ForAll ? all
                    : t.kind == TermKind::AtLeast ? count >= t.cardinality
                                                  : count <= t.cardinality;
          if (in) out |= bit(x);
        }
        return out;
      }
      case TermKind::Not: return full(n) & ~concept_ext(ops[0]);
      case TermKind::And: {
        Mask out = full(n);
        for (const auto& o : ops) out &= concept_ext(o);
        return out;
      }
      case TermKind::Or: {
        Mask out = 0;
        for (const auto& o : ops) out |= concept_ext(o);
        return out;
      }
      default: throw std::logic_error("not a concept: " + dl::to_string(t));
    }
  }

  Mask data_range(const Term& t) const {
    switch (t.kind) {
      case TermKind::Datatype: return datatype.at(t.name);
      case TermKind::OneOf: {
        Mask out = 0;
        for (const auto& c : t.constants) out |= bit(constant.at(c));
        return out;
      }
      case TermKind::Not: return full(m) & ~data_range(t.operands[0]);
      case TermKind::And: {
        Mask out = full(m);
        for (const auto& o : t.operands) out &= data_range(o);
        return out;
      }
      case TermKind::Or: {
        Mask out = 0;
        for (const auto& o : t.operands) out |= data_range(o);
        return out;
      }
      default: throw std::logic_error("not a data range: " + dl::to_string(t));
    }
  }

  // Pairs {(x, y) : x in a, y in b} over width w.
  Mask pairs(Mask a, Mask b, int w) const {
    Mask out = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < w; ++y)
        if (has(a, x) && has(b, y)) out |= bit(x * w + y);
    return out;
  }

  Mask role(const Term& t) const {
    Category c = category(t);
    int w = width(c);
    const auto& ops = t.operands;
    auto filler = [&](const Term& f) { return c == Category::ConcreteRole ? data_range(f) : concept_ext(f); };
    switch (t.kind) {
      case TermKind::RoleName: return roles.at(t.name);
      case TermKind::DataRoleName: return data_roles.at(t.name);
      case TermKind::UniversalRole: return full(n * n);
      case TermKind::Inverse: {
        Mask r = role(ops[0]), out = 0;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (has(r, x * n + y)) out |= bit(y * n + x);
        return out;
      }
      case TermKind::Identity: {
        Mask a = concept_ext(ops[0]), out = 0;
        for (int x = 0; x < n; ++x)
          if (has(a, x)) out |= bit(x * n + x);
        return out;
      }
      case TermKind::Product: return pairs(concept_ext(ops[0]), concept_ext(ops[1]), n);
      case TermKind::DomainRestriction: return role(ops[0]) & pairs(concept_ext(ops[1]), full(w), w);
      case TermKind::RangeRestriction: return role(ops[0]) & pairs(full(n), filler(ops[1]), w);
      case TermKind::Restriction: return role(ops[0]) & pairs(concept_ext(ops[1]), filler(ops[2]), w);
      case TermKind::Not: return full(n * w) & ~role(ops[0]);
      case TermKind::And: {
        Mask out = full(n * w);
        for (const auto& o : ops) out &= role(o);
        return out;
      }
      case TermKind::Or: {
        Mask out = 0;
        for (const auto& o : ops) out |= role(o);
        return out;
      }
      default: throw std::logic_error("not a role: " + dl::to_string(t));
    }
  }

  Mask compose(Mask a, Mask b) const {
    Mask out = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (has(a, x * n + y))
          for (int z = 0; z < n; ++z)
            if (has(b, y * n + z)) out |= bit(x * n + z);
    return out;
  }

  Mask transpose(Mask r) const {
    Mask out = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (has(r, x * n + y)) out |= bit(y * n + x);
    return out;
  }

  Mask diagonal() const {
    Mask out = 0;
    for (int x = 0; x < n; ++x) out |= bit(x * n + x);
    return out;
  }

  // Concept, data range or role extension, by category.
  Mask extension(const Term& t) const {
    switch (category(t)) {
      case Category::Concept: return concept_ext(t);
      case Category::DataRange: return data_range(t);
      default: return role(t);
    }
  }

  bool satisfies(const dl::Axiom& a) const {
    using K = dl::AxiomKind;
    const auto& ts = a.terms;
    switch (a.kind) {
      case K::RoleEquivalence:
      case K::Equivalence: return extension(ts[0]) == extension(ts[1]);
      case K::RoleInclusion:
      case K::Inclusion: return (extension(ts[0]) & ~extension(ts[1])) == 0;
      case K::RoleChainInclusion: {
        Mask c = role(ts[0]);
        for (std::size_t i = 1; i + 1 < ts.size(); ++i) c = compose(c, role(ts[i]));
        return (c & ~role(ts.back())) == 0;
      }
      case K::Symmetric: return role(ts[0]) == transpose(role(ts[0]));
      case K::Asymmetric: return (role(ts[0]) & transpose(role(ts[0]))) == 0;
      case K::Reflexive: return (diagonal() & ~role(ts[0])) == 0;
      case K::Irreflexive: return (diagonal() & role(ts[0])) == 0;
      case K::DisjointRoles: return (role(ts[0]) & role(ts[1])) == 0;
      case K::Transitive: {
        Mask r = role(ts[0]);
        return (compose(r, r) & ~r) == 0;
      }
      case K::Functional: {
        Mask r = role(ts[0]);
        int w = width(category(ts[0]));
        for (int x = 0; x < n; ++x)
          if (std::popcount((r >> (x * w)) & full(w)) > 1) return false;
        return true;
      }
      case K::ConceptAssertion: return has(concept_ext(ts[0]), individual.at(a.individuals[0]));
      case K::RoleAssertion:
        return has(role(ts[0]), individual.at(a.individuals[0]) * n + individual.at(a.individuals[1]));
      case K::SameIndividual: return individual.at(a.individuals[0]) == individual.at(a.individuals[1]);
      case K::DifferentIndividual: return individual.at(a.individuals[0]) != individual.at(a.individuals[1]);
      case K::DataAssertion: return has(data_range(ts[0]), constant.at(*a.constant));
      case K::DataRoleAssertion:
        return has(role(ts[0]), individual.at(a.individuals[0]) * m + constant.at(*a.constant));
    }
    return false;
  }
};

bool next_partition(std::vector<int>& a) {
  for (std::size_t i = a.size(); i-- > 1;) {
    int max_before = 0;
    for (std::size_t j = 0; j < i; ++j) max_before = std::max(max_before, a[j]);
    if (a[i] <= max_before) {
      ++a[i];
      std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
      return true;
    }
  }
  return false;
}

struct Setup {
  dl::KnowledgeBase kb;
  std::vector<std::string> individuals;
  Model base;  // concrete domain filled in
};

Setup setup(const dl::KnowledgeBase& input) {
  Setup s{input, {}, {}};
  s.kb.declare_used_names();
  s.individuals = s.kb.signature.individuals;
  for (const auto& [d, values] : s.kb.dmap.constants) {
    Mask ext = 0;
    for (const auto& v : values) {
      ext |= bit(s.base.m);
      s.base.constant.emplace(dl::Constant{v, d}, s.base.m++);
    }
    if (values.empty()) ext |= bit(s.base.m++);
    s.base.datatype.emplace(d, ext);
  }
  return s;
}

std::size_t bits_for(const dl::KnowledgeBase& kb, int n, int m) {
  const auto& sig = kb.signature;
  return sig.concepts.size() * n + sig.abstract_roles.size() * n * n + sig.concrete_roles.size() * n * m;
}

}  // namespace

std::size_t interpretation_bits(const dl::KnowledgeBase& kb) {
  Setup s = setup(kb);
  int n = std::max<int>(1, static_cast<int>(s.individuals.size()));
  return bits_for(s.kb, n, s.base.m);
}

std::optional<bool> semantically_consistent(const dl::KnowledgeBase& input, std::size_t max_bits) {
  Setup s = setup(input);
  const auto& sig = s.kb.signature;
  int n_max = std::max<int>(1, static_cast<int>(s.individuals.size()));
  if (bits_for(s.kb, n_max, s.base.m) > max_bits) return std::nullopt;

  auto statements = s.kb.statements();
  std::vector<int> block(s.individuals.size(), 0);
  for (;;) {
    Model model = s.base;
    model.n = 1;
    for (std::size_t i = 0; i < s.individuals.size(); ++i) {
      model.individual[s.individuals[i]] = block[i];
      model.n = std::max(model.n, block[i] + 1);
    }
    const int n = model.n, m = model.m;
    std::size_t bits = bits_for(s.kb, n, m);
    for (Mask assignment = 0; assignment < (Mask{1} << bits); ++assignment) {
      int offset = 0;
      auto take = [&](int k) {
        Mask v = (assignment >> offset) & full(k);
        offset += k;
        return v;
      };
      for (const auto& c : sig.concepts) model.concepts[c] = take(n);
      for (const auto& r : sig.abstract_roles) model.roles[r] = take(n * n);
      for (const auto& p : sig.concrete_roles) model.data_roles[p] = take(n * m);
      bool ok = true;
      for (const dl::Axiom* a : statements)
        if (!model.satisfies(*a)) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    if (!next_partition(block)) break;
  }
  return false;
}

}  // namespace dl4x::gen
