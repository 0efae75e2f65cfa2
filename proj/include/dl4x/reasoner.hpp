#pragma once

// The full consistency check: translate, normalize, expand, saturate,
// equivalence-class check and model extraction.

#include <memory>
#include <string>
#include <vector>

#include "dl4x/engine.hpp"
#include "dl4x/kb.hpp"
#include "dl4x/normalize.hpp"
#include "dl4x/translate.hpp"

namespace dl4x {

struct DecideOptions {
  TranslateOptions translate;
  ExpandOptions expand;
};

// Every intermediate stage, for diagnostics.
struct Pipeline {
  TranslationOutput translation;
  NormalizedKB normalized;
  ExpandedKB expanded;
  std::unique_ptr<Tableau> tableau;  // saturated
};

// Throws InputError or ResourceLimit.
Pipeline run_pipeline(const dl::KnowledgeBase& kb, const DecideOptions& options = {});

enum class VerdictKind : std::uint8_t { Consistent, Inconsistent, InputError, ResourceLimit };

const char* to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconsistent;
  std::vector<Interpretation> models;     // one per open branch, tree order
  std::vector<EquivPartition> classes;    // likewise
  std::size_t branches = 0;               // leaf branches of the tableau
  std::vector<ClosureWitness> witnesses;  // one per closed branch
  Tableau::Stats stats;
  std::size_t clauses = 0;
  std::string error;  // InputError / ResourceLimit message

  bool consistent() const { return kind == VerdictKind::Consistent; }
};

Verdict verdict_of(const Tableau& t);

// Errors are reported in the verdict rather than thrown.
Verdict decide(const dl::KnowledgeBase& kb, const DecideOptions& options = {});
Verdict decide(const ExpandedKB& e);

}  // namespace dl4x
