// Compares the serial direct-sum reference transform against the mixed-radix
// OpenMP path on a few instance sizes, and reports their agreement.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "lcasis/fiber.hpp"
#include "lcasis/transform.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

lcasis::Signal random_signal(std::mt19937_64& rng, const lcasis::GroupSpec& g) {
  std::normal_distribution<double> dist;
  lcasis::Signal s;
  s.group = g;
  s.values.resize(static_cast<std::size_t>(g.order()));
  for (auto& v : s.values) v = lcasis::cd{dist(rng), dist(rng)};
  return s;
}

void bench_case(const std::vector<int>& moduli, const std::vector<int>& gen) {
  const lcasis::GroupSpec g = lcasis::make_group(moduli);
  const lcasis::LatticeSubgroup h =
      lcasis::subgroup_from_generators(g, {lcasis::GroupElement{gen}});
  const lcasis::HaarSystem haar = lcasis::haar_system(g, h);

  std::mt19937_64 rng(7);
  const lcasis::Signal f = random_signal(rng, g);

  const int reps = 5;
  auto t0 = Clock::now();
  lcasis::DualSignal fast;
  for (int i = 0; i < reps; ++i) fast = lcasis::fourier(f, haar);
  const double fast_s = seconds_since(t0) / reps;

  t0 = Clock::now();
  const lcasis::DualSignal ref = lcasis::fourier_reference(f, haar);
  const double ref_s = seconds_since(t0);

  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < ref.values.size(); ++i) {
    err += std::norm(fast.values[i] - ref.values[i]);
    scale += std::norm(ref.values[i]);
  }
  err = std::sqrt(err / std::max(scale, 1e-300));

  std::string name;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    name += (i ? "x" : "") + std::to_string(moduli[i]);
  }
  std::printf("%-12s reference %10.3f ms   mixed-radix %10.3f ms   speedup %7.1fx   rel.err %.2e\n",
              name.c_str(), ref_s * 1e3, fast_s * 1e3, ref_s / fast_s, err);
}

}  // namespace

int main() {
  std::printf("forward transform, serial reference vs OpenMP mixed-radix\n");
  bench_case({256}, {16});
  bench_case({1024}, {32});
  bench_case({4096}, {64});
  bench_case({64, 64}, {8, 8});
  bench_case({12, 60}, {3, 5});
  return 0;
}
