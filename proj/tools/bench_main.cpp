#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "atomlab/atoms.hpp"
#include "atomlab/census.hpp"
#include "atomlab/ingest.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <typename Fn>
double timed(Fn&& fn) {
  double t0 = now_seconds();
  fn();
  return now_seconds() - t0;
}

void report(const char* label, double serial, double parallel, bool match) {
  std::cout << std::left << std::setw(28) << label << std::fixed << std::setprecision(3)
            << "serial " << std::setw(8) << serial << "parallel " << std::setw(8) << parallel
            << "speedup " << std::setprecision(2) << (parallel > 0 ? serial / parallel : 0.0)
            << "x  match " << (match ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int n = 7;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--n" && i + 1 < argc) n = std::atoi(argv[++i]);
  }
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; parallel paths run serially\n";
#endif

  {
    atomlab::Dfa d = atomlab::witness(n);
    atomlab::AtomicPoset poset = atomlab::atoms_of(d);
    std::vector<int> serial_result, parallel_result;
    double ts = timed([&] {
      serial_result = atomlab::atom_complexities(d, poset, atomlab::Execution::serial);
    });
    double tp = timed([&] {
      parallel_result = atomlab::atom_complexities(d, poset, atomlab::Execution::parallel);
    });
    std::string label = "atom sweep, witness(" + std::to_string(n) + ")";
    report(label.c_str(), ts, tp, serial_result == parallel_result);
  }

  {
    atomlab::CensusOptions opts;
    opts.n = 3;
    opts.sigma = 2;
    atomlab::CensusReport rs, rp;
    opts.exec = atomlab::Execution::serial;
    double ts = timed([&] { rs = atomlab::run_census(opts); });
    opts.exec = atomlab::Execution::parallel;
    double tp = timed([&] { rp = atomlab::run_census(opts); });
    bool match = rs.instances == rp.instances && rs.canonical == rp.canonical &&
                 rs.raw == rp.raw && rs.canonical_counts == rp.canonical_counts &&
                 rs.disagreements == rp.disagreements;
    report("census n=3 sigma=2", ts, tp, match);
  }

  return 0;
}
