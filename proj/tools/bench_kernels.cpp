// Serial vs OpenMP timings for the character-ring kernels.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>

#include "affchar/demazure.hpp"
#include "affchar/kacweyl.hpp"
#include "affchar/kernels.hpp"

namespace {

using affchar::kernels::Mode;

template <class F>
double time_ms(F&& f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

template <class T>
void bench(const std::string& name, const std::function<T()>& f, int reps) {
  std::optional<T> serial_result, parallel_result;
  affchar::kernels::set_mode(Mode::Serial);
  const double s = time_ms([&] { serial_result = f(); }, reps);
  affchar::kernels::set_mode(Mode::Parallel);
  const double p = time_ms([&] { parallel_result = f(); }, reps);
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(1) << std::setw(10)
            << s << std::setw(10) << p << std::setw(8) << std::setprecision(2) << s / p << "x"
            << (serial_result == parallel_result ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel benchmarks"};
  int reps = 3;
  int depth = 6;
  app.add_option("--reps", reps, "Repetitions (best time is reported)")->capture_default_str();
  app.add_option("--depth", depth, "Depth of the Weyl-Kac benchmarks")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::cout << "parallel kernels available: " << (affchar::kernels::parallel_available() ? "yes" : "no") << "\n";
  std::cout << std::left << std::setw(34) << "benchmark" << std::right << std::setw(10) << "serial ms" << std::setw(10)
            << "omp ms" << std::setw(9) << "speedup" << "\n";

  const auto d4 = affchar::build_root_system('D', 4);
  const auto a3 = affchar::build_root_system('A', 3);
  const auto theta = affchar::Coweight::from_ints(d4.comarks());

  bench<affchar::QCharacter>("demazure D4 lambda=2theta", [&] {
    return affchar::demazure_character(d4, affchar::Rational(2) * theta, 1).character;
  }, reps);
  bench<affchar::QCharacter>("demazure A3 lambda=(2,1,2)", [&] {
    return affchar::demazure_character(a3, a3.coweight_from_fundamental(std::vector<std::int64_t>{2, 1, 2}), 1).character;
  }, reps);
  const auto p = affchar::inverse_denominator(d4, depth);
  bench<affchar::QCharacter>("weyl-kac D4 basic, depth " + std::to_string(depth), [&] {
    return affchar::weyl_kac_character(d4, {1, affchar::Weight{}}, depth, p);
  }, reps);
  const auto num = affchar::weyl_kac_numerator(d4, {1, affchar::Weight{}}, depth);
  bench<affchar::QCharacter>("convolve D4 numerator x P", [&] { return affchar::qchar_mul(num, p); }, reps);
  return 0;
}
