#pragma once

// Random instances for property tests and the acceptance runs.

#include <random>
#include <vector>

#include "dl4x/kb.hpp"
#include "dl4x/logic.hpp"

namespace dl4x::gen {

using Rng = std::mt19937_64;

struct GroundShape {
  int max_atoms = 8;
  int max_clauses = 12;
  int max_literals = 4;
  int max_individuals = 5;
};

// A ground clause set over individuals x1..x5, sets A..C and relations R, S.
// Atom pool of at most max_atoms atoms, equalities in either orientation.
std::vector<Clause> random_ground_clauses(Rng& rng, const GroundShape& shape = {});

Variable random_variable(Rng& rng);
Literal random_literal(Rng& rng);
Clause random_clause(Rng& rng, int max_size = 5);
Matrix random_matrix(Rng& rng, int depth, std::span<const Variable> individuals);
// Prefix variables all occur in the matrix.
UniversalFormula random_formula(Rng& rng, int depth = 6, int max_variables = 10);

// One statement drawn from the whole RBox/TBox/ABox inventory over at most
// three individuals, three concept names and two role names, plus up to two
// extra ABox assertions. Every statement passes the fragment check.
dl::KnowledgeBase random_kb(Rng& rng);

}  // namespace dl4x::gen
