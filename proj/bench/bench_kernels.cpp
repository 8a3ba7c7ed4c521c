// Timing comparison of the OpenMP state-sum kernel against the serial
// reference, plus the shadow coloring enumeration.
#include <chrono>
#include <iostream>
#include <random>

#include "skeinlab/diagram_gen.hpp"
#include "skeinlab/shadow.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace skeinlab;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int crossings = argc > 1 ? std::atoi(argv[1]) : 14;
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (no OpenMP)\n";
#endif
  std::mt19937_64 rng(5);
  diagram::Diagram d = diagram::gen::random_diagram(rng, 2, crossings);
  std::cout << "diagram: " << crossings << " crossings, genus 2, "
            << (1ull << crossings) << " states\n";

  RationalFunc serial, parallel;
  double t_serial = time_ms([&] { serial = diagram::bracket_reference(d); });
  double t_parallel = time_ms([&] { parallel = diagram::bracket(d); });
  std::cout << "bracket serial reference: " << t_serial << " ms\n";
  std::cout << "bracket OpenMP kernel:    " << t_parallel << " ms  (speedup "
            << t_serial / t_parallel << "x)\n";
  std::cout << "results agree: " << (serial == parallel ? "yes" : "NO") << "\n";

  // coloring enumeration on the splitting shadow of the all-positive state
  diagram::Splitting sp = diagram::resolve(d, (1ull << crossings) - 1);
  shadow::Shadow xs = shadow::make_xs_shadow(sp);
  RationalFunc sq;
  double t_shadow = time_ms([&] { sq = shadow::shadow_eval_q(xs); });
  std::cout << "shadow state sum:         " << t_shadow << " ms, "
            << (sq == diagram::splitting_bracket(sp) ? "matches" : "MISMATCH") << "\n";
  return serial == parallel ? 0 : 1;
}
