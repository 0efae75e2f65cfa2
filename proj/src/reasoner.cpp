#include "dl4x/reasoner.hpp"

#include "dl4x/errors.hpp"

namespace dl4x {

namespace {

Verdict failure(VerdictKind k, const Error& e) {
  Verdict v;
  v.kind = k;
  v.error = e.what();
  return v;
}

}  // namespace

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Consistent: return "Consistent";
    case VerdictKind::Inconsistent: return "Inconsistent";
    case VerdictKind::InputError: return "InputError";
    case VerdictKind::ResourceLimit: return "ResourceLimit";
  }
  return "?";
}

Pipeline run_pipeline(const dl::KnowledgeBase& kb, const DecideOptions& options) {
  Pipeline p;
  p.translation = translate_kb(kb, options.translate);
  p.normalized = normalize(p.translation);
  p.expanded = expand_kb(p.normalized, options.expand);
  p.tableau = std::make_unique<Tableau>(p.expanded);
  p.tableau->saturate();
  return p;
}

Verdict verdict_of(const Tableau& t) {
  Verdict v;
  v.kind = VerdictKind::Inconsistent;
  v.stats = t.stats();
  v.clauses = t.clauses().size();
  auto open = t.open_branches();
  auto closed = t.closed_branches();
  v.branches = open.size() + closed.size();
  for (std::size_t b : open) {
    v.models.push_back(t.model(b));
    v.classes.push_back(t.partition(b));
  }
  for (std::size_t b : closed) v.witnesses.push_back(*t.branch(b).witness);
  if (!open.empty()) v.kind = VerdictKind::Consistent;
  return v;
}

Verdict decide(const dl::KnowledgeBase& kb, const DecideOptions& options) {
  try {
    auto p = run_pipeline(kb, options);
    return verdict_of(*p.tableau);
  } catch (const InputError& e) {
    return failure(VerdictKind::InputError, e);
  } catch (const ResourceLimit& e) {
    return failure(VerdictKind::ResourceLimit, e);
  }
}

Verdict decide(const ExpandedKB& e) {
  Tableau t(e);
  t.saturate();
  return verdict_of(t);
}

}  // namespace dl4x
