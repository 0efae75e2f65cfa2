#pragma once

// The internal `$`-token coding of formulae.
//
//   variable X^i_name   Vi{name}
//   pair <x,y>          $OA x $CO y $AO
//   relators            $IN $NI $EQ $QE   (negative literals use $NI / $QE)
//   quantifier          $FA
//   connectives         $AD $OR $DA $RO   (and, or, not-and, not-or)
//
// Compound matrices are written infix inside `(` `)`. Connectives with no
// symbol above use the extension tokens $NG (not), $IM (implies),
// $IF (iff), $TR (true) and $FL (false); CNF output never contains them.
// A clause is written without brackets: `l1 $OR l2 $OR ...`.

#include <string>
#include <string_view>
#include <variant>

#include "dl4x/logic.hpp"

namespace dl4x {

std::string encode(const Variable& v);
std::string encode(const Literal& l);
std::string encode(const Clause& c);
std::string encode(const Matrix& m);
std::string encode(const UniversalFormula& f);

// Typed decoders; each throws MalformedCoding on any grammar violation,
// including trailing tokens.
Variable decode_variable(std::string_view s);
Literal decode_literal(std::string_view s);
Clause decode_clause(std::string_view s);
UniversalFormula decode_formula(std::string_view s);

using Coded = std::variant<Variable, Literal, Clause, UniversalFormula>;

// Decodes into the most specific kind the text can denote: a lone variable,
// then a literal, then a clause, otherwise a universal formula.
Coded decode(std::string_view s);

}  // namespace dl4x
