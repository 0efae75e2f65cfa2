#pragma once

// Exhaustive satisfiability check for ground clause sets with equality.
// Independent of the tableau: enumerates partitions of the variables
// occurring in equalities, then truth values of the remaining atoms modulo
// each partition.

#include <map>
#include <span>
#include <vector>

#include "dl4x/logic.hpp"
#include "dl4x/normalize.hpp"

namespace dl4x {

struct Assignment {
  std::map<Atom, bool> values;                 // every atom of the clause set
  std::vector<std::vector<Variable>> classes;  // partition of the equality variables

  bool holds(const Literal& l) const { return values.at(l.atom) == l.positive; }
};

struct OracleResult {
  bool satisfiable = false;
  std::vector<Assignment> witnesses;  // all satisfying assignments, if requested
};

struct OracleOptions {
  std::size_t max_atoms = 20;
  bool witnesses = false;
};

// Throws ResourceLimit when the clause set has more than max_atoms distinct atoms.
OracleResult brute_force_sat(std::span<const Clause> clauses, const OracleOptions& options = {});
OracleResult brute_force_sat(const ExpandedKB& e, const OracleOptions& options = {});

}  // namespace dl4x
