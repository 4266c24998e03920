#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atomlab/atoms.hpp"
#include "atomlab/automata.hpp"
#include "atomlab/semigroup.hpp"

namespace atomlab {

struct SemigroupStats {
  std::uint64_t size;
  std::map<int, std::uint64_t> rank_histogram;
  std::uint64_t subgroup_order;
  std::vector<bool> k_set_transitive;  // index k, 0..n
  bool set_transitive;
  std::optional<SetTransitiveTag> recognized;
};

SemigroupStats semigroup_stats(const Semigroup& t);

struct AnalyzeOptions {
  std::uint64_t cap = kDefaultClosureCap;
  Execution exec = Execution::serial;
  bool with_semigroup = true;  // off skips semigroup, flags and the algebraic decider
};

// Everything about one minimal DFA's language in a single pass.
struct AnalysisReport {
  int n;
  std::vector<std::string> alphabet;
  std::vector<AtomReport> atoms;  // per atom: achieved and target complexity
  std::size_t atom_count;
  std::uint64_t atom_target;
  bool semantic_maximal;
  std::optional<bool> algebraic_maximal;
  std::optional<bool> deciders_agree;
  std::optional<SemigroupStats> semigroup;
  std::optional<ClassFlags> flags;  // absent for n = 1 or without the semigroup
  std::vector<std::string> notices;
};

AnalysisReport analyze(const Dfa& d, const AnalyzeOptions& opts = {});

}  // namespace atomlab
