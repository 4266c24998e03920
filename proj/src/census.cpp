#include "atomlab/census.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "atomlab/combinatorics.hpp"
#include "atomlab/errors.hpp"

namespace atomlab {

namespace {

constexpr std::uint64_t kMaxExhaustive = 20'000'000;

std::vector<std::string> letter_names(int sigma) {
  if (sigma < 1 || sigma > 26) throw std::invalid_argument("census: sigma outside 1..26");
  std::vector<std::string> out;
  for (int i = 0; i < sigma; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

Transformation decode_transformation(int n, std::uint64_t code) {
  std::vector<int> row(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    row[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(n)) + 1;
    code /= static_cast<std::uint64_t>(n);
  }
  return Transformation(n, row);
}

Dfa decode_instance(int n, int sigma, std::uint64_t index) {
  std::uint64_t final_span = (std::uint64_t{1} << n) - 2;
  std::uint64_t fmask = index % final_span + 1;  // nonempty proper subsets
  index /= final_span;
  std::uint64_t tcount = 1;
  for (int i = 0; i < n; ++i) tcount *= static_cast<std::uint64_t>(n);
  std::vector<Transformation> delta;
  for (int s = 0; s < sigma; ++s) {
    delta.push_back(decode_transformation(n, index % tcount));
    index /= tcount;
  }
  return Dfa(n, letter_names(sigma), std::move(delta), 1,
             StateSet(n, static_cast<std::uint16_t>(fmask)));
}

struct Accum {
  std::uint64_t instances = 0;
  ClassCounts raw;
  std::map<std::string, ClassFlags> canonical;
  std::uint64_t disagreements = 0;
  std::vector<std::string> violations;
  std::optional<std::pair<std::uint64_t, Dfa>> mna_not_mal;  // keyed by instance index

  void merge(Accum&& other) {
    instances += other.instances;
    raw.fts += other.raw.fts;
    raw.sts += other.raw.sts;
    raw.mal += other.raw.mal;
    raw.mna += other.raw.mna;
    raw.mcr += other.raw.mcr;
    canonical.merge(other.canonical);
    disagreements += other.disagreements;
    for (auto& v : other.violations)
      if (violations.size() < 10) violations.push_back(std::move(v));
    if (other.mna_not_mal &&
        (!mna_not_mal || other.mna_not_mal->first < mna_not_mal->first))
      mna_not_mal = std::move(other.mna_not_mal);
  }
};

// Runs both deciders and the classifier on one minimal DFA.
void process_instance(const Dfa& d, std::uint64_t index, std::uint64_t cap, Accum& acc) {
  Semigroup t = transition_semigroup(d, cap);
  MaximalityVerdict verdict = is_maximally_atomic_semantic(d);
  bool algebraic = d.n == 2 ? t.size() == 4
                            : is_set_transitive(permutation_subgroup(t)) &&
                                  contains_rank(t, d.n - 1);
  ClassFlags f = compute_class_flags(d, t, verdict);

  ++acc.instances;
  if (algebraic != verdict.maximal) {
    ++acc.disagreements;
    if (acc.violations.size() < 10)
      acc.violations.push_back("deciders disagree on instance " + std::to_string(index));
  }
  for (const auto& v : chain_violations(f))
    if (acc.violations.size() < 10)
      acc.violations.push_back(v + " on instance " + std::to_string(index));
  acc.raw.fts += f.fts;
  acc.raw.sts += f.sts;
  acc.raw.mal += f.mal;
  acc.raw.mna += f.mna;
  acc.raw.mcr += f.mcr;
  acc.canonical.emplace(canonical_key(d), f);
  if (f.mna && !f.mal && (!acc.mna_not_mal || index < acc.mna_not_mal->first))
    acc.mna_not_mal = {index, d};
}

void sweep_exhaustive_serial(const CensusOptions& opts, std::uint64_t total, Accum& acc) {
  for (std::uint64_t i = 0; i < total; ++i) {
    Dfa d = decode_instance(opts.n, opts.sigma, i);
    if (is_minimal(d)) process_instance(d, i, opts.cap, acc);
  }
}

void sweep_exhaustive_parallel(const CensusOptions& opts, std::uint64_t total, Accum& acc) {
  std::exception_ptr err;
#pragma omp parallel
  {
    Accum local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::uint64_t i = 0; i < total; ++i) {
      try {
        Dfa d = decode_instance(opts.n, opts.sigma, i);
        if (is_minimal(d)) process_instance(d, i, opts.cap, local);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
#pragma omp critical
    acc.merge(std::move(local));
  }
  if (err) std::rethrow_exception(err);
}

void sweep_samples_serial(const CensusOptions& opts, std::uint64_t samples, Accum& acc) {
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::seed_seq ss{opts.seed, i};
    std::mt19937_64 rng(ss);
    Dfa d = random_minimal_dfa(opts.n, opts.sigma, rng);
    process_instance(d, i, opts.cap, acc);
  }
}

void sweep_samples_parallel(const CensusOptions& opts, std::uint64_t samples, Accum& acc) {
  std::exception_ptr err;
#pragma omp parallel
  {
    Accum local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::uint64_t i = 0; i < samples; ++i) {
      try {
        std::seed_seq ss{opts.seed, i};
        std::mt19937_64 rng(ss);
        Dfa d = random_minimal_dfa(opts.n, opts.sigma, rng);
        process_instance(d, i, opts.cap, local);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
#pragma omp critical
    acc.merge(std::move(local));
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

std::string canonical_key(const Dfa& d) {
  // BFS relabel; minimality is not assumed, but every state must be reachable
  // for the key to cover the whole DFA, which holds for census instances.
  std::vector<int> id(static_cast<std::size_t>(d.n) + 1, 0);  // old -> new, 1-based
  std::vector<int> origin;
  std::deque<int> work;
  auto visit = [&](int q) {
    if (id[static_cast<std::size_t>(q)]) return;
    origin.push_back(q);
    id[static_cast<std::size_t>(q)] = static_cast<int>(origin.size());
    work.push_back(q);
  };
  visit(d.initial);
  while (!work.empty()) {
    int q = work.front();
    work.pop_front();
    for (const auto& t : d.delta) visit(t.apply(q));
  }
  std::string key;
  key += static_cast<char>(origin.size());
  for (const auto& t : d.delta) {
    for (int q : origin) key += static_cast<char>(id[static_cast<std::size_t>(t.apply(q))]);
  }
  for (int q : origin) key += d.finals.contains(q) ? '1' : '0';
  return key;
}

Dfa random_minimal_dfa(int n, int sigma, std::mt19937_64& rng) {
  check_degree(n);
  if (n < 2) throw std::invalid_argument("random_minimal_dfa: n >= 2");
  std::uniform_int_distribution<int> state(1, n);
  std::uniform_int_distribution<std::uint32_t> fmask(1, (1u << n) - 2);
  std::vector<std::string> names = letter_names(sigma);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Transformation> delta;
    for (int s = 0; s < sigma; ++s) {
      std::vector<int> row(static_cast<std::size_t>(n));
      for (auto& v : row) v = state(rng);
      delta.emplace_back(n, row);
    }
    Dfa d(n, names, std::move(delta), 1, StateSet(n, static_cast<std::uint16_t>(fmask(rng))));
    if (is_minimal(d)) return d;
  }
  throw internal_error("random_minimal_dfa: rejection sampling failed to land");
}

CensusReport run_census(const CensusOptions& opts) {
  if (opts.n < 2) throw std::invalid_argument("census: n >= 2");
  check_degree(opts.n);

  CensusReport report;
  report.options = opts;
  Accum acc;

  if (opts.samples) {
    if (opts.exec == Execution::parallel)
      sweep_samples_parallel(opts, *opts.samples, acc);
    else
      sweep_samples_serial(opts, *opts.samples, acc);
  } else {
    unsigned __int128 tcount = self_power(opts.n);
    unsigned __int128 space = (std::uint64_t{1} << opts.n) - 2;
    for (int s = 0; s < opts.sigma; ++s) space *= tcount;
    if (space > kMaxExhaustive)
      throw capacity_error("exhaustive census space too large; use samples", kMaxExhaustive);
    std::uint64_t total = static_cast<std::uint64_t>(space);
    if (opts.exec == Execution::parallel)
      sweep_exhaustive_parallel(opts, total, acc);
    else
      sweep_exhaustive_serial(opts, total, acc);
  }

  report.instances = acc.instances;
  report.canonical = acc.canonical.size();
  report.raw = acc.raw;
  for (const auto& [key, f] : acc.canonical) {
    report.canonical_counts.fts += f.fts;
    report.canonical_counts.sts += f.sts;
    report.canonical_counts.mal += f.mal;
    report.canonical_counts.mna += f.mna;
    report.canonical_counts.mcr += f.mcr;
  }
  report.disagreements = acc.disagreements;
  report.violations = std::move(acc.violations);
  if (acc.mna_not_mal) report.mna_not_mal = std::move(acc.mna_not_mal->second);
  return report;
}

}  // namespace atomlab
