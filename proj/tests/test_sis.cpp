#include <doctest.h>

#include <random>

#include "lcasis/frames.hpp"
#include "lcasis/oracle.hpp"
#include "lcasis/sis.hpp"
#include "test_support.hpp"

using namespace lcasis;

namespace {

Signal zero_signal(const GroupSpec& g) {
  Signal z;
  z.group = g;
  z.values.assign(static_cast<std::size_t>(g.order()), cd{0.0, 0.0});
  return z;
}

std::vector<Signal> random_generators(std::mt19937_64& rng, const GroupSpec& g,
                                      int max_count) {
  std::vector<Signal> gens;
  const int count = 1 + static_cast<int>(rng() % max_count);
  for (int i = 0; i < count; ++i) gens.push_back(testsup::random_signal(rng, g));
  return gens;
}

}  // namespace

TEST_CASE("range_function worked examples") {
  const testsup::Instance inst = testsup::z4_instance();

  SUBCASE("principal delta space") {
    const RangeFunction range =
        range_function({testsup::delta_signal(inst.group, 0)}, inst.ctx);
    CHECK(range.rank == std::vector<int>{1, 1});
    const Eigen::Vector2cd expected(cd{M_SQRT1_2, 0.0}, cd{M_SQRT1_2, 0.0});
    for (int r = 0; r < 2; ++r) {
      CHECK((range.basis[r] - expected).norm() < 1e-14);
    }
  }
  SUBCASE("zero generator gives the zero space") {
    const RangeFunction range = range_function({zero_signal(inst.group)}, inst.ctx);
    CHECK(range.rank == std::vector<int>{0, 0});
    CHECK(range.basis[0].cols() == 0);
  }
  SUBCASE("spectrum-gapped generator") {
    const Signal chirp = testsup::make_signal(
        inst.group, {cd{1, 0}, cd{0, 1}, cd{-1, 0}, cd{0, -1}});
    const RangeFunction range = range_function({chirp}, inst.ctx);
    CHECK(range.rank == std::vector<int>{0, 1});
  }
  SUBCASE("empty generator list is rejected") {
    CHECK_THROWS_AS(range_function({}, inst.ctx), std::invalid_argument);
  }
}

TEST_CASE("contains worked examples") {
  const testsup::Instance inst = testsup::z4_instance();
  const SISpace v =
      make_space({testsup::delta_signal(inst.group, 0)}, inst.ctx);

  CHECK(contains(v, testsup::delta_signal(inst.group, 2), 1e-10));
  CHECK(!contains(v, testsup::delta_signal(inst.group, 1), 1e-10));
  CHECK(contains(v, zero_signal(inst.group), 1e-10));
}

TEST_CASE("project worked examples") {
  const testsup::Instance inst = testsup::z4_instance();
  const SISpace v =
      make_space({testsup::delta_signal(inst.group, 0)}, inst.ctx);

  SUBCASE("members are fixed") {
    const Signal member = testsup::delta_signal(inst.group, 2);
    const Signal p = project(v, member);
    CHECK(testsup::signal_dist(p, member, inst.ctx.haar) < 1e-13);
  }
  SUBCASE("orthogonal probe projects to zero") {
    const Signal p = project(v, testsup::delta_signal(inst.group, 1));
    CHECK(norm(p, inst.ctx.haar) < 1e-13);
  }
  SUBCASE("full space projects identically") {
    std::vector<Signal> all;
    for (int i = 0; i < 4; ++i) all.push_back(testsup::delta_signal(inst.group, i));
    const SISpace full = make_space(all, inst.ctx);
    std::mt19937_64 rng(51);
    const Signal f = testsup::random_signal(rng, inst.group);
    CHECK(testsup::signal_dist(project(full, f), f, inst.ctx.haar) <=
          1e-12 * norm(f, inst.ctx.haar));
  }
}

TEST_CASE("dimension function and spectrum worked examples") {
  const testsup::Instance inst = testsup::z4_instance();

  const SISpace v = make_space({testsup::delta_signal(inst.group, 0)}, inst.ctx);
  CHECK(dimension_function(v) == std::vector<int>{1, 1});
  CHECK(spectrum(v) == std::vector<int>{0, 1});

  const SISpace zero = make_space({zero_signal(inst.group)}, inst.ctx);
  CHECK(dimension_function(zero) == std::vector<int>{0, 0});
  CHECK(spectrum(zero).empty());

  const Signal chirp = testsup::make_signal(
      inst.group, {cd{1, 0}, cd{0, 1}, cd{-1, 0}, cd{0, -1}});
  const SISpace w = make_space({chirp}, inst.ctx);
  CHECK(dimension_function(w) == std::vector<int>{0, 1});
  CHECK(spectrum(w) == std::vector<int>{1});
}

TEST_CASE("decompose worked examples") {
  const testsup::Instance inst = testsup::z4_instance();

  SUBCASE("principal delta space gives one Parseval generator") {
    const SISpace v =
        make_space({testsup::delta_signal(inst.group, 0)}, inst.ctx);
    const std::vector<Signal> comps = decompose(v);
    REQUIRE(comps.size() == 1);
    const std::vector<double> p = periodization(comps[0], inst.ctx);
    CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(1.0).epsilon(1e-12));

    // Time-domain cross-check: translates of the component are orthonormal.
    const auto gram = oracle::gram_time({comps[0]}, inst.lattice, inst.ctx.haar);
    CHECK(std::abs(gram.at(0, 0) - cd{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(gram.at(0, 1)) < 1e-12);
  }
  SUBCASE("zero space decomposes into nothing") {
    const SISpace zero = make_space({zero_signal(inst.group)}, inst.ctx);
    CHECK(decompose(zero).empty());
  }
  SUBCASE("full space gives two components with full spectra") {
    const SISpace full = make_space({testsup::delta_signal(inst.group, 0),
                                     testsup::delta_signal(inst.group, 1)},
                                    inst.ctx);
    const std::vector<Signal> comps = decompose(full);
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
      const SISpace cs = make_space({c}, inst.ctx);
      CHECK(spectrum(cs) == std::vector<int>{0, 1});
    }
    // Distinct components generate orthogonal spaces: check all translate
    // pairs in the time domain.
    for (const auto& h : inst.lattice.elements) {
      for (const auto& hp : inst.lattice.elements) {
        const cd ip = inner_product(oracle::translate(comps[0], h),
                                    oracle::translate(comps[1], hp),
                                    inst.ctx.haar);
        CHECK(std::abs(ip) < 1e-12);
      }
    }
  }
}

TEST_CASE("projection agrees with the time-domain oracle") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 96);
    const std::vector<Signal> gens = random_generators(rng, inst.group, 3);
    const SISpace v = make_space(gens, inst.ctx);
    const Signal f = testsup::random_signal(rng, inst.group);

    const Signal p_fiber = project(v, f);
    const Signal p_time =
        oracle::project_time(gens, inst.lattice, inst.ctx.haar, f);
    CHECK(testsup::signal_dist(p_fiber, p_time, inst.ctx.haar) <=
          1e-9 * norm(f, inst.ctx.haar));
  }
}

TEST_CASE("projection is idempotent, self-adjoint and shift-invariant") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 96);
    const SISpace v = make_space(random_generators(rng, inst.group, 3), inst.ctx);
    const Signal f = testsup::random_signal(rng, inst.group);
    const Signal g = testsup::random_signal(rng, inst.group);
    const double scale = norm(f, inst.ctx.haar) * norm(g, inst.ctx.haar);

    const Signal pf = project(v, f);
    const Signal ppf = project(v, pf);
    CHECK(testsup::signal_dist(ppf, pf, inst.ctx.haar) <=
          1e-10 * norm(f, inst.ctx.haar));

    const cd lhs = inner_product(pf, g, inst.ctx.haar);
    const cd rhs = inner_product(f, project(v, g), inst.ctx.haar);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + scale));

    for (const auto& h : inst.lattice.elements) {
      const Signal a = project(v, oracle::translate(f, h));
      const Signal b = oracle::translate(pf, h);
      CHECK(testsup::signal_dist(a, b, inst.ctx.haar) <=
            1e-10 * (1.0 + norm(f, inst.ctx.haar)));
    }
  }
}

TEST_CASE("rank identity against the translate matrix") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 80);
    const std::vector<Signal> gens = random_generators(rng, inst.group, 3);
    const SISpace v = make_space(gens, inst.ctx);

    int fiber_rank = 0;
    for (int r : v.range.rank) fiber_rank += r;

    const auto eigs = oracle::eigenvalues(
        oracle::gram_time(gens, inst.lattice, inst.ctx.haar));
    const double top = std::max(eigs.back(), 0.0);
    int time_rank = 0;
    for (double e : eigs) {
      if (e > 1e-10 * top) ++time_rank;
    }
    CHECK(fiber_rank == time_rank);
  }
}

TEST_CASE("membership test agrees with the oracle on constructed probes") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 15; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 80);
    const std::vector<Signal> gens = random_generators(rng, inst.group, 2);
    const SISpace v = make_space(gens, inst.ctx);

    // A guaranteed member: a random combination of translates.
    std::normal_distribution<double> dist;
    Signal member = zero_signal(inst.group);
    for (const auto& g : gens) {
      for (const auto& h : inst.lattice.elements) {
        if (rng() % 2 == 0) continue;
        const Signal t = oracle::translate(g, h);
        const cd c{dist(rng), dist(rng)};
        for (std::size_t i = 0; i < member.values.size(); ++i) {
          member.values[i] += c * t.values[i];
        }
      }
    }
    const Signal outlier = testsup::random_signal(rng, inst.group);

    for (const Signal* probe :
         std::initializer_list<const Signal*>{&member, &outlier}) {
      const bool fiber_in = contains(v, *probe, 1e-8);
      const Signal resid_sig =
          oracle::project_time(gens, inst.lattice, inst.ctx.haar, *probe);
      const double resid =
          testsup::signal_dist(resid_sig, *probe, inst.ctx.haar);
      const bool time_in = resid <= 1e-8 * std::max(norm(*probe, inst.ctx.haar),
                                                    1e-300);
      CHECK(fiber_in == time_in);
    }
  }
}

TEST_CASE("decompose contract on random spaces") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 10; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 64);
    const SISpace v = make_space(random_generators(rng, inst.group, 3), inst.ctx);
    const std::vector<Signal> comps = decompose(v);

    // Fibers of each component have norm 0 or 1; spectra are nested.
    std::vector<std::vector<int>> spectra;
    for (const auto& c : comps) {
      const FiberField field = fiberize(c, inst.ctx);
      std::vector<int> live;
      for (int r = 0; r < inst.ctx.omega_count(); ++r) {
        const double n = field.matrix.row(r).norm();
        CHECK((n < 1e-10 || std::abs(n - 1.0) < 1e-10));
        if (n > 0.5) live.push_back(r);
      }
      spectra.push_back(std::move(live));
    }
    for (std::size_t i = 1; i < spectra.size(); ++i) {
      for (int w : spectra[i]) {
        CHECK(std::find(spectra[i - 1].begin(), spectra[i - 1].end(), w) !=
              spectra[i - 1].end());
      }
    }

    // The {0,1} fiber-norm sums reproduce the dimension function.
    for (int r = 0; r < inst.ctx.omega_count(); ++r) {
      int total = 0;
      for (const auto& s : spectra) {
        total += std::find(s.begin(), s.end(), r) != s.end() ? 1 : 0;
      }
      CHECK(total == v.range.rank[static_cast<std::size_t>(r)]);
    }

    // Pairwise orthogonality across translate pairs of distinct components.
    for (std::size_t a = 0; a < comps.size(); ++a) {
      for (std::size_t b = a + 1; b < comps.size(); ++b) {
        double worst = 0.0;
        for (const auto& h : inst.lattice.elements) {
          const Signal ta = oracle::translate(comps[a], h);
          for (const auto& hp : inst.lattice.elements) {
            const Signal tb = oracle::translate(comps[b], hp);
            worst = std::max(worst,
                             std::abs(inner_product(ta, tb, inst.ctx.haar)));
          }
        }
        CHECK(worst <= 1e-10);
      }
    }

    // Every component stays inside the original space.
    for (const auto& c : comps) CHECK(contains(v, c, 1e-8));
  }
}

TEST_CASE("degenerate lattices: trivial subgroup and full subgroup") {
  std::mt19937_64 rng(59);

  SUBCASE("H = {0}: one fiber of width |G|") {
    const testsup::Instance inst = testsup::make_instance({6}, {});
    CHECK(inst.ctx.omega_count() == 1);
    CHECK(inst.ctx.delta_count() == 6);
    const Signal f = testsup::random_signal(rng, inst.group);
    const SISpace v = make_space({f}, inst.ctx);
    CHECK(dimension_function(v) == std::vector<int>{1});
    // Translation by 0 is the only shift, so the span is just multiples of f.
    const Signal p = project(v, testsup::random_signal(rng, inst.group));
    const Signal q =
        oracle::project_time({f}, inst.lattice, inst.ctx.haar, p);
    CHECK(testsup::signal_dist(p, q, inst.ctx.haar) <=
          1e-10 * (1.0 + norm(p, inst.ctx.haar)));
  }
  SUBCASE("H = G: |G| fibers of width 1") {
    const testsup::Instance inst = testsup::make_instance({6}, {{1}});
    CHECK(inst.ctx.omega_count() == 6);
    CHECK(inst.ctx.delta_count() == 1);
    const Signal f = testsup::random_signal(rng, inst.group);
    const std::vector<Signal> comps = decompose(make_space({f}, inst.ctx));
    REQUIRE(comps.size() == 1);
    // Full translation invariance: the single component spans everything the
    // generator touches, with Parseval translates.
    const auto report = certify(make_fiber_system(comps, inst.ctx));
    CHECK(report.is_parseval);
  }
  SUBCASE("trivial group") {
    const testsup::Instance inst = testsup::make_instance({1}, {});
    const Signal one = testsup::make_signal(inst.group, {cd{2.0, 0.0}});
    const FiberField field = fiberize(one, inst.ctx);
    CHECK(field.matrix.rows() == 1);
    CHECK(field.matrix.cols() == 1);
    CHECK(std::abs(field_norm(field, inst.ctx) - norm(one, inst.ctx.haar)) <
          1e-15);
  }
}

TEST_CASE("range function bases are orthonormal with bounded rank") {
  std::mt19937_64 rng(58);
  for (int trial = 0; trial < 15; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 96);
    const std::vector<Signal> gens = random_generators(rng, inst.group, 3);
    const RangeFunction range = range_function(gens, inst.ctx);
    for (std::size_t r = 0; r < range.rank.size(); ++r) {
      CHECK(range.rank[r] >= 0);
      CHECK(range.rank[r] <= std::min<int>(inst.ctx.delta_count(),
                                           static_cast<int>(gens.size())));
      const Eigen::MatrixXcd& b = range.basis[r];
      const Eigen::MatrixXcd gram = b.adjoint() * b;
      CHECK((gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()))
                .norm() <= 1e-10);
    }
  }
}

TEST_CASE("equal translate spans give equal range functions") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 64);
    const std::vector<Signal> gens = random_generators(rng, inst.group, 2);

    // Recombine: invertible mixing plus a translate keeps the span.
    std::vector<Signal> alt;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Signal s = oracle::translate(
          gens[i],
          inst.lattice.elements[rng() % inst.lattice.elements.size()]);
      const Signal& other = gens[(i + 1) % gens.size()];
      for (std::size_t k = 0; k < s.values.size(); ++k) {
        s.values[k] = 2.0 * s.values[k] + 0.5 * other.values[k];
      }
      alt.push_back(std::move(s));
    }

    const RangeFunction ra = range_function(gens, inst.ctx);
    const RangeFunction rb = range_function(alt, inst.ctx);
    REQUIRE(ra.rank.size() == rb.rank.size());
    for (std::size_t r = 0; r < ra.rank.size(); ++r) {
      CHECK(ra.rank[r] == rb.rank[r]);
      // Compare the orthogonal projectors; this bounds all principal angles.
      const Eigen::MatrixXcd pa = ra.basis[r] * ra.basis[r].adjoint();
      const Eigen::MatrixXcd pb = rb.basis[r] * rb.basis[r].adjoint();
      CHECK((pa - pb).norm() <= 1e-8);
    }
  }
}
