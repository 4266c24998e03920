#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "atomlab/atoms.hpp"
#include "atomlab/automata.hpp"

namespace atomlab {

struct CensusOptions {
  int n = 3;
  int sigma = 2;
  std::optional<std::uint64_t> samples;  // absent: exhaustive sweep
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultClosureCap;
  Execution exec = Execution::serial;
};

struct ClassCounts {
  std::uint64_t fts = 0, sts = 0, mal = 0, mna = 0, mcr = 0;

  bool operator==(const ClassCounts&) const = default;
};

struct CensusReport {
  CensusOptions options;
  std::uint64_t instances = 0;  // minimal DFAs processed, repeats included
  std::uint64_t canonical = 0;  // distinct up to state renaming
  ClassCounts raw;
  ClassCounts canonical_counts;
  std::uint64_t disagreements = 0;         // decider mismatches (should stay 0)
  std::vector<std::string> violations;     // first few chain violations
  std::optional<Dfa> mna_not_mal;          // earliest instance with many atoms yet not maximal
};

// Sweeps minimal DFAs on n states over sigma letters (initial state 1,
// nonempty proper final sets), running both maximality deciders on each one
// and classifying it. Exhaustive by default; samples draws random instances.
CensusReport run_census(const CensusOptions& opts);

// State-renaming canonical form: relabel by breadth-first discovery from the
// initial state, then serialize. Equal keys mean isomorphic DFAs.
std::string canonical_key(const Dfa& d);

// Uniform minimal DFA by rejection: letters drawn from all of T_n, final set
// a nonempty proper subset.
Dfa random_minimal_dfa(int n, int sigma, std::mt19937_64& rng);

}  // namespace atomlab
