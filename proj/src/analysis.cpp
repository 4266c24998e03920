#include "atomlab/analysis.hpp"

#include <stdexcept>

#include "atomlab/errors.hpp"

namespace atomlab {

SemigroupStats semigroup_stats(const Semigroup& t) {
  SemigroupStats s;
  s.size = t.size();
  for (const auto& el : t.elements) ++s.rank_histogram[el.rank()];
  PermGroup g = permutation_subgroup(t);
  s.subgroup_order = g.order();
  s.k_set_transitive.resize(static_cast<std::size_t>(t.degree) + 1);
  for (int k = 0; k <= t.degree; ++k)
    s.k_set_transitive[static_cast<std::size_t>(k)] = is_k_set_transitive(g, k);
  s.set_transitive = is_set_transitive(g, TransitivityMode::full_k);
  if (is_set_transitive(g, TransitivityMode::fast) != s.set_transitive)
    throw internal_error("fast and full set-transitivity checks disagree");
  if (s.set_transitive) s.recognized = recognize_set_transitive(g);
  return s;
}

AnalysisReport analyze(const Dfa& d, const AnalyzeOptions& opts) {
  require_minimal(d, "analyze");
  AnalysisReport r;
  r.n = d.n;
  r.alphabet = d.alphabet;

  MaximalityVerdict verdict = is_maximally_atomic_semantic(d, opts.exec);
  r.atoms = verdict.per_atom;
  r.atom_count = verdict.atom_count;
  r.atom_target = verdict.atom_target;
  r.semantic_maximal = verdict.maximal;

  if (!opts.with_semigroup) {
    r.notices.push_back("semigroup analysis skipped");
    return r;
  }

  Semigroup t = transition_semigroup(d, opts.cap);
  r.semigroup = semigroup_stats(t);
  bool algebraic = d.n == 1   ? true
                   : d.n == 2 ? t.size() == 4
                              : r.semigroup->set_transitive && contains_rank(t, d.n - 1);
  r.algebraic_maximal = algebraic;
  r.deciders_agree = algebraic == verdict.maximal;
  if (!*r.deciders_agree)
    throw internal_error("semantic and algebraic maximal-atomicity deciders disagree");

  if (d.n >= 2) {
    ClassFlags f = compute_class_flags(d, t, verdict);
    std::vector<std::string> bad = chain_violations(f);
    if (!bad.empty()) {
      std::string msg = "class chain violated:";
      for (const auto& b : bad) msg += " " + b + ";";
      throw internal_error(msg);
    }
    r.flags = f;
  } else {
    r.notices.push_back("class flags need n >= 2");
  }
  return r;
}

}  // namespace atomlab
