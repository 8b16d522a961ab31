#include <doctest.h>

#include <random>

#include "lcasis/fiber.hpp"
#include "lcasis/json_io.hpp"
#include "lcasis/oracle.hpp"
#include "test_support.hpp"

using namespace lcasis;

TEST_CASE("fiberize worked examples on the Z_4 instance") {
  const testsup::Instance inst = testsup::z4_instance();

  SUBCASE("delta has flat fibers") {
    const FiberField field =
        fiberize(testsup::delta_signal(inst.group, 0), inst.ctx);
    REQUIRE(field.matrix.rows() == 2);
    REQUIRE(field.matrix.cols() == 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        CHECK(std::abs(field.matrix(r, c) - cd{0.5, 0.0}) < 1e-15);
      }
    }
  }
  SUBCASE("zero signal") {
    Signal z;
    z.group = inst.group;
    z.values.assign(4, cd{0.0, 0.0});
    CHECK(fiberize(z, inst.ctx).matrix.norm() == 0.0);
  }
  SUBCASE("pure frequency lands in one fiber") {
    const Signal f = testsup::make_signal(
        inst.group, {cd{1, 0}, cd{0, 1}, cd{-1, 0}, cd{0, -1}});
    const FiberField field = fiberize(f, inst.ctx);
    CHECK(field.matrix.row(0).norm() < 1e-15);
    CHECK(std::abs(field.matrix(1, 0) - cd{2.0, 0.0}) < 1e-15);
    CHECK(std::abs(field.matrix(1, 1)) < 1e-15);
  }
  SUBCASE("context mismatch") {
    const GroupSpec z6 = make_group({6});
    CHECK_THROWS_AS(fiberize(testsup::delta_signal(z6, 0), inst.ctx),
                    std::invalid_argument);
  }
}

TEST_CASE("defiberize worked examples") {
  const testsup::Instance inst = testsup::z4_instance();

  SUBCASE("zero matrix") {
    FiberField field;
    field.section = inst.ctx.omega;
    field.delta = inst.ctx.delta;
    field.matrix = Eigen::MatrixXcd::Zero(2, 2);
    const Signal z = defiberize(field, inst.ctx);
    for (const cd& v : z.values) CHECK(std::abs(v) == 0.0);
  }
  SUBCASE("round trip of the delta") {
    const Signal d0 = testsup::delta_signal(inst.group, 0);
    const Signal back = defiberize(fiberize(d0, inst.ctx), inst.ctx);
    CHECK(testsup::signal_dist(back, d0, inst.ctx.haar) < 1e-15);
  }
  SUBCASE("explicit boxcar fibers") {
    FiberField field;
    field.section = inst.ctx.omega;
    field.delta = inst.ctx.delta;
    field.matrix.resize(2, 2);
    field.matrix << cd{1.0, 0.0}, cd{0.0, 0.0}, cd{0.5, -0.5}, cd{0.5, 0.5};
    const Signal box = defiberize(field, inst.ctx);
    const Signal expected = testsup::make_signal(
        inst.group, {cd{1, 0}, cd{1, 0}, cd{0, 0}, cd{0, 0}});
    CHECK(testsup::signal_dist(box, expected, inst.ctx.haar) < 1e-14);
  }
  SUBCASE("shape mismatch") {
    FiberField field;
    field.section = inst.ctx.omega;
    field.delta = inst.ctx.delta;
    field.matrix = Eigen::MatrixXcd::Zero(3, 2);
    CHECK_THROWS_AS(defiberize(field, inst.ctx), std::invalid_argument);
  }
}

TEST_CASE("translate_fibers") {
  const testsup::Instance inst = testsup::z4_instance();
  const Signal d0 = testsup::delta_signal(inst.group, 0);
  const FiberField field = fiberize(d0, inst.ctx);

  SUBCASE("identity at h = 0") {
    const FiberField same =
        translate_fibers(field, GroupElement{{0}}, inst.ctx);
    CHECK((same.matrix - field.matrix).norm() == 0.0);
  }
  SUBCASE("h = 2 modulates the odd fiber and matches fiberize(delta_2)") {
    const FiberField shifted =
        translate_fibers(field, GroupElement{{2}}, inst.ctx);
    CHECK(std::abs(shifted.matrix(0, 0) - cd{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(shifted.matrix(0, 1) - cd{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(shifted.matrix(1, 0) - cd{-0.5, 0.0}) < 1e-15);
    CHECK(std::abs(shifted.matrix(1, 1) - cd{-0.5, 0.0}) < 1e-15);

    const FiberField d2 =
        fiberize(testsup::delta_signal(inst.group, 2), inst.ctx);
    CHECK((shifted.matrix - d2.matrix).norm() < 1e-15);
  }
  SUBCASE("group action: h then -h is the identity") {
    const FiberField there =
        translate_fibers(field, GroupElement{{2}}, inst.ctx);
    const FiberField back =
        translate_fibers(there, GroupElement{{2}}, inst.ctx);  // -2 = 2 in H
    CHECK((back.matrix - field.matrix).norm() < 1e-15);
  }
  SUBCASE("h outside H is rejected") {
    CHECK_THROWS_AS(translate_fibers(field, GroupElement{{1}}, inst.ctx),
                    std::invalid_argument);
  }
}

TEST_CASE("periodization worked examples") {
  const testsup::Instance inst = testsup::z4_instance();
  const std::vector<double> flat =
      periodization(testsup::delta_signal(inst.group, 0), inst.ctx);
  REQUIRE(flat.size() == 2);
  CHECK(flat[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(flat[1] == doctest::Approx(0.5).epsilon(1e-14));

  Signal z;
  z.group = inst.group;
  z.values.assign(4, cd{0.0, 0.0});
  for (double v : periodization(z, inst.ctx)) CHECK(v == 0.0);

  const Signal chirp = testsup::make_signal(
      inst.group, {cd{1, 0}, cd{0, 1}, cd{-1, 0}, cd{0, -1}});
  const std::vector<double> p = periodization(chirp, inst.ctx);
  CHECK(p[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("isometry and bijection on random instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 400);
    const Signal f = testsup::random_signal(rng, inst.group);
    const double nf = norm(f, inst.ctx.haar);

    const FiberField field = fiberize(f, inst.ctx);
    CHECK(std::abs(field_norm(field, inst.ctx) - nf) <= 1e-12 * nf);

    const Signal back = defiberize(field, inst.ctx);
    CHECK(testsup::signal_dist(back, f, inst.ctx.haar) <= 1e-12 * nf);

    // fiberize(defiberize(.)) is the identity on fields as well.
    const FiberField again = fiberize(back, inst.ctx);
    CHECK((again.matrix - field.matrix).norm() <= 1e-12 * field.matrix.norm());
  }
}

TEST_CASE("intertwining with time translation") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 300);
    const Signal f = testsup::random_signal(rng, inst.group);
    const FiberField field = fiberize(f, inst.ctx);
    for (const auto& h : inst.lattice.elements) {
      const FiberField lhs = fiberize(oracle::translate(f, h), inst.ctx);
      const FiberField rhs = translate_fibers(field, h, inst.ctx);
      CHECK((lhs.matrix - rhs.matrix).norm() <=
            1e-12 * (1.0 + field.matrix.norm()));
    }
  }
}

TEST_CASE("fiber field JSON export golden") {
  const testsup::Instance inst = testsup::z4_instance();
  const FiberField field =
      fiberize(testsup::delta_signal(inst.group, 0), inst.ctx);
  const io::json j = io::fiber_field_to_json(field);
  CHECK(j.dump() ==
        R"({"delta":[[0],[2]],"format_version":1,"matrix":[[[0.5,0.0],[0.5,0.0]],[[0.5,0.0],[0.5,0.0]]],"section":[[0],[1]]})");
}

TEST_CASE("periodization mass equals the squared norm") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const testsup::Instance inst = testsup::random_instance(rng, 300);
    const Signal f = testsup::random_signal(rng, inst.group);
    const std::vector<double> p = periodization(f, inst.ctx);
    double mass = 0.0;
    for (double v : p) mass += v;
    mass *= inst.ctx.haar.w_Gamma.to_double();
    const double n2 = norm(f, inst.ctx.haar) * norm(f, inst.ctx.haar);
    CHECK(std::abs(mass - n2) <= 1e-12 * (1.0 + n2));
  }
}
