#include "dl4x/oracle.hpp"

#include <algorithm>
#include <set>

#include "dl4x/errors.hpp"

namespace dl4x {

namespace {

// Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
bool next_partition(std::vector<std::size_t>& a) {
  for (std::size_t i = a.size(); i-- > 1;) {
    if (a[i] <= *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i))) {
      ++a[i];
      std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
      return true;
    }
  }
  return false;
}

}  // namespace

OracleResult brute_force_sat(std::span<const Clause> clauses, const OracleOptions& options) {
  std::vector<Atom> atoms;
  std::set<Atom> seen;
  std::vector<Variable> eq_vars;
  for (const auto& c : clauses)
    for (const auto& l : c.disjuncts()) {
      if (!seen.insert(l.atom).second) continue;
      atoms.push_back(l.atom);
      if (l.atom.is_equality())
        for (const auto& v : {l.atom.first(), l.atom.target()})
          if (std::ranges::find(eq_vars, v) == eq_vars.end()) eq_vars.push_back(v);
    }
  if (atoms.size() > options.max_atoms)
    throw ResourceLimit(std::to_string(atoms.size()) + " atoms exceed the oracle limit " +
                        std::to_string(options.max_atoms));

  OracleResult result;
  const std::size_t n = eq_vars.size();
  std::vector<std::size_t> block(n, 0);
  for (;;) {
    std::map<Variable, std::size_t> block_of;
    for (std::size_t i = 0; i < n; ++i) block_of.emplace(eq_vars[i], block[i]);
    // canonical form: every equality variable replaced by its block's first member
    std::map<std::size_t, Variable> first_of;
    for (std::size_t i = 0; i < n; ++i) first_of.emplace(block[i], eq_vars[i]);
    auto canon = [&](const Variable& v) {
      auto it = block_of.find(v);
      return it == block_of.end() ? v : first_of.at(it->second);
    };

    std::vector<Atom> free;
    std::map<Atom, std::size_t> free_index;
    for (const auto& a : atoms) {
      if (a.is_equality()) continue;
      Atom c = a.map_individuals(canon);
      if (free_index.emplace(c, free.size()).second) free.push_back(c);
    }

    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
      auto truth = [&](const Atom& a) {
        if (a.is_equality()) return canon(a.first()) == canon(a.target());
        return ((bits >> free_index.at(a.map_individuals(canon))) & 1) != 0;
      };
      bool ok = std::ranges::all_of(clauses, [&](const Clause& c) {
        return std::ranges::any_of(c.disjuncts(), [&](const Literal& l) { return truth(l.atom) == l.positive; });
      });
      if (!ok) continue;
      result.satisfiable = true;
      if (!options.witnesses) return result;
      Assignment w;
      for (const auto& a : atoms) w.values.emplace(a, truth(a));
      std::size_t blocks = n == 0 ? 0 : *std::ranges::max_element(block) + 1;
      w.classes.resize(blocks);
      for (std::size_t i = 0; i < n; ++i) w.classes[block[i]].push_back(eq_vars[i]);
      result.witnesses.push_back(std::move(w));
    }

    if (!next_partition(block)) break;
  }
  return result;
}

OracleResult brute_force_sat(const ExpandedKB& e, const OracleOptions& options) {
  return brute_force_sat(e.clauses, options);
}

}  // namespace dl4x
