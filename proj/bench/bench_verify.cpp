// Serial reference vs OpenMP kernel for the verifier's range sweeps.
// Usage: mcgdim_bench [jobs] [n_max] [branch_max]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "mcgdim/verifier.hpp"

using namespace mcgdim;

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(10) << serial << std::setw(10) << parallel << std::setw(9)
            << std::setprecision(2) << serial / parallel << "x" << (same ? "" : "  MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  const int n_max = argc > 2 ? std::atoi(argv[2]) : 400;
  const long long branch_max = argc > 3 ? std::atoll(argv[3]) : 10'000'000;
  std::cout << "jobs=" << jobs << " n_max=" << n_max << " branch_max=" << branch_max << '\n';
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(10) << "serial"
            << std::setw(10) << "omp" << std::setw(10) << "speedup" << '\n';

  for (int g : {0, 1, 2}) {
    const int lo = g == 0 ? 7 : g == 1 ? 3 : 1;
    std::vector<VerificationRecord> a, b;
    const double s = seconds([&] { a = verify_range_serial(g, lo, n_max, Mode::strict); });
    const double p = seconds([&] { b = verify_range(g, lo, n_max, Mode::strict, jobs); });
    report("verify_range g=" + std::to_string(g), s, p, a == b);
  }
  for (const auto& branch : genus0_branches()) {
    BranchReport a, b;
    const double s = seconds([&] { a = check_branch_serial(branch, branch.threshold, branch_max); });
    const double p = seconds([&] { b = check_branch(branch, branch.threshold, branch_max, jobs); });
    report("branch " + branch.id, s, p,
           a.witness_failures == b.witness_failures && a.monotone == b.monotone);
  }
  return 0;
}
