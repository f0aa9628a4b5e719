// Serial reference against the OpenMP path on the exhaustive kernels.
#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "eulerian/parallel.hpp"
#include "eulerian/polynomials.hpp"

namespace {

using namespace eulerian;

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

struct Kernel {
  std::string name;
  std::function<std::string(Execution)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel timing of the enumeration kernels"};
  int n = 9, reps = 3;
  app.add_option("--n", n, "Permutation size")->check(CLI::Range(3, 10));
  app.add_option("--reps", reps, "Repetitions; the best time is reported")->check(CLI::Range(1, 100));
  CLI11_PARSE(app, argc, argv);

  Budget budget;
  budget.max_n = std::max(budget.max_n, n);
  const std::vector<Kernel> kernels{
      {"excedance histogram",
       [&](Execution ex) {
         return to_string(class_polynomial(n, ClassTag::Kind::All, [](const Permutation& p) {
           int e = 0;
           for (int k = 1; k <= p.size(); ++k) e += p(k) > k;
           return e;
         }, ex, budget));
       }},
      {"eulerian r=2 by enumeration", [&](Execution ex) { return to_string(eulerian_by_enumeration(n, 2, {}, ex, budget)); }},
      // abar_polynomial memoizes, so time the two-variable sweep it is built on.
      {"fixed points x excedances",
       [&](Execution ex) {
         return to_string(class_polynomial2(n, ClassTag::Kind::All, [](const Permutation& p) {
           auto e = excedance_vector(p);
           return std::pair<int, int>(positive_count(fixed_point_vector(p)), positive_count(delta(e)));
         }, ex, budget));
       }},
      {"roselle on derangements",
       [&](Execution ex) { return to_string(roselle_polynomial(n, RoselleVia::ExcedanceOnDerangements, ex, budget)); }},
  };

  std::printf("n = %d, %d OpenMP threads, best of %d\n", n, omp_get_max_threads(), reps);
  std::printf("%-30s %10s %10s %8s  %s\n", "kernel", "serial s", "parallel s", "speedup", "results");
  int status = 0;
  for (const auto& k : kernels) {
    std::string serial, parallel;
    double ts = best_of(reps, [&] { serial = k.run(Execution::Serial); });
    double tp = best_of(reps, [&] { parallel = k.run(Execution::Parallel); });
    bool same = serial == parallel;
    status |= !same;
    std::printf("%-30s %10.4f %10.4f %8.2f  %s\n", k.name.c_str(), ts, tp, ts / tp, same ? "equal" : "DIFFER");
  }
  return status;
}
