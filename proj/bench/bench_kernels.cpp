// Serial reference vs OpenMP kernels on the largest builtin categories.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "catnet/elements.hpp"
#include "catnet/kernels.hpp"
#include "catnet/music.hpp"

namespace {

double seconds(const std::function<void()>& body, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) body();
  const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  return d.count() / reps;
}

void row(const std::string& name, const catnet::FiniteCategory& c, const catnet::Functor& proj,
         int reps) {
  using namespace catnet;
  std::size_t n_serial = 0, n_parallel = 0;
  const double a_serial =
      seconds([&] { n_serial = kernels::serial::associativity(c).size(); }, reps);
  const double a_parallel = seconds([&] { n_parallel = kernels::associativity(c).size(); }, reps);
  const double f_serial = seconds([&] { kernels::serial::functor_composition(proj); }, reps);
  const double f_parallel = seconds([&] { kernels::functor_composition(proj); }, reps);
  std::printf("%-18s %6zu %9.4f %9.4f %9.4f %9.4f %s\n", name.c_str(), c.morphism_count(),
              a_serial, a_parallel, f_serial, f_parallel,
              n_serial == n_parallel ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), reps);
  std::printf("%-18s %6s %9s %9s %9s %9s\n", "category", "mors", "assoc/s", "assoc/p",
              "functor/s", "functor/p");
  auto ti = catnet::elements_of_set_functor(catnet::music::builtin_ti_group().action);
  row("elements T/I", *ti.cat, ti.proj, reps);
  auto plr = catnet::elements_of_set_functor(catnet::music::builtin_plr().action);
  row("elements PLR", *plr.cat, plr.proj, reps);
  auto cube = catnet::elements_of_rel_functor(catnet::music::builtin_cube_dance());
  row("elements Cube", *cube.cat, cube.proj, reps);
  return 0;
}
