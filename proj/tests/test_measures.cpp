#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "gravcat/channels.hpp"
#include "gravcat/measures.hpp"
#include "gravcat/model.hpp"
#include "gravcat/oracles.hpp"
#include "support.hpp"

using namespace gravcat;

namespace {

DensityMatrix bell() { return DensityMatrix::projector(testing::bell_phi_plus()); }

DensityMatrix mixed() { return DensityMatrix::maximally_mixed(); }

DensityMatrix werner(double p) {
  return DensityMatrix(p * bell().matrix() + (1.0 - p) * mixed().matrix());
}

// Steerability of thermal(1, 1, 0.1), from the conditional-entropy oracle.
constexpr double kThermalSteerability = 0.33129768604299592;

} // namespace

TEST_CASE("bloch coefficients") {
  const XStateCoefficients zero = bloch_x(mixed());
  for (double c : {zero.a3, zero.b3, zero.c11, zero.c22, zero.c33}) CHECK(c == 0.0);

  const XStateCoefficients b = bloch_x(bell());
  CHECK(b.a3 == doctest::Approx(0.0));
  CHECK(b.b3 == doctest::Approx(0.0));
  CHECK(b.c11 == doctest::Approx(1.0));
  CHECK(b.c22 == doctest::Approx(-1.0));
  CHECK(b.c33 == doctest::Approx(1.0));

  for (int n = 0; n < 100; ++n) {
    const DensityMatrix rho = testing::random_x_state();
    const XStateCoefficients x = bloch_x(rho);
    const oracle::BlochData d = oracle::bloch_by_contraction(rho.matrix());
    CHECK(std::abs(x.a3 - d.a[2]) <= 1e-12);
    CHECK(std::abs(x.b3 - d.b[2]) <= 1e-12);
    CHECK(std::abs(x.c11 - d.c[0][0]) <= 1e-12);
    CHECK(std::abs(x.c22 - d.c[1][1]) <= 1e-12);
    CHECK(std::abs(x.c33 - d.c[2][2]) <= 1e-12);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(std::abs(d.a[i]) <= 1e-15);
      CHECK(std::abs(d.b[i]) <= 1e-15);
    }
    // The identity behind the CHSH closed form.
    const double r14 = rho(0, 3).real(), r23 = rho(1, 2).real();
    CHECK(std::abs(8.0 * (r14 * r14 + r23 * r23) - (x.c11 * x.c11 + x.c22 * x.c22)) <= 1e-14);
  }
}

TEST_CASE("entanglement witness") {
  CHECK(entanglement_witness(bell(), bell()) == doctest::Approx(0.5));
  CHECK(entanglement_witness(mixed(), bell()) == doctest::Approx(-0.25));
  CHECK(entanglement_witness(mixed(), testing::random_x_state()) == doctest::Approx(-0.25));

  for (int n = 0; n < 200; ++n) {
    const ModelParams p{testing::uniform(0.2, 5.0), testing::uniform(0.2, 5.0), testing::uniform(0.05, 3.0)};
    const DensityMatrix rho = thermal_state(p);
    const FieldParams f{1.0, testing::uniform(0.0, 1.0), testing::uniform(-1.0, 1.0), testing::uniform(0.0, 10.0)};
    const double phase = 4.0 * f.stochastic_sign * f.coupling * f.time;
    const double direct = entanglement_witness(evolve_constant_field(rho, f), rho);
    CHECK(std::abs(ew_closed_form(p, phase) - direct) <= 1e-12);
  }
}

TEST_CASE("closed-form witness") {
  for (int n = 0; n < 50; ++n) {
    const ModelParams p{testing::uniform(0.2, 5.0), testing::uniform(-5.0, 5.0), testing::uniform(0.05, 3.0)};
    const double at_zero = ew_closed_form(p, 0.0);
    CHECK(std::abs(at_zero - (purity(thermal_state(p)) - 0.5)) <= 1e-12);
    const double phase = testing::uniform(-10.0, 10.0);
    CHECK(std::abs(ew_closed_form(p, phase) - ew_closed_form(p, phase + 2.0 * std::numbers::pi)) <= 1e-12);
  }
  CHECK(ew_closed_form({0.0, 0.0, 1.0}, 1.0) == doctest::Approx(-0.25));
}

TEST_CASE("steering value") {
  CHECK(steering_value({}) == doctest::Approx(0.0));
  CHECK(steering_value(bloch_x(bell())) == doctest::Approx(6.0));
  CHECK(steerability(bell()) == doctest::Approx(1.0));
  CHECK(steerability(mixed()) == 0.0);

  const double st = steerability(thermal_state({1.0, 1.0, 0.1}));
  CHECK(st > 0.0);
  CHECK(st < 1.0);
  CHECK(std::abs(st - kThermalSteerability) <= 1e-12);
}

TEST_CASE("steering value equals the conditional-entropy form") {
  for (int n = 0; n < 200; ++n) {
    const DensityMatrix rho = testing::random_x_state();
    const XStateCoefficients x = bloch_x(rho);
    const double value = steering_value(x);
    CHECK(std::abs(value - oracle::steering_by_conditional_entropy(rho.matrix())) <= 1e-10);
    CHECK(value >= -1e-10);
    CHECK(value <= 6.0 + 1e-10);

    XStateCoefficients flipped = x;
    flipped.c11 = -x.c11;
    flipped.c22 = -x.c22;
    CHECK(std::abs(steering_value(flipped) - value) <= 1e-12);
  }
}

TEST_CASE("CHSH and Bell non-locality") {
  CHECK(chsh_value(bell()) == doctest::Approx(2.0 * std::numbers::sqrt2));
  CHECK(bell_nonlocality(bell()) == doctest::Approx(1.0));
  CHECK(chsh_value(mixed()) == 0.0);
  CHECK(bell_nonlocality(mixed()) == 0.0);

  for (int n = 0; n < 200; ++n) {
    const DensityMatrix rho = testing::random_x_state();
    CHECK(std::abs(chsh_value(rho) - oracle::chsh_by_horodecki(rho.matrix())) <= 1e-10);
  }
}

TEST_CASE("Werner states violate CHSH above p = 1/sqrt2") {
  const double threshold = 1.0 / std::numbers::sqrt2;
  for (double p : {0.3, 0.6, threshold - 1e-6}) {
    CHECK(bell_nonlocality(werner(p)) == 0.0);
    CHECK(oracle::chsh_by_horodecki(werner(p).matrix()) <= 2.0);
  }
  for (double p : {threshold + 1e-6, 0.8, 1.0}) {
    CHECK(bell_nonlocality(werner(p)) > 0.0);
    CHECK(oracle::chsh_by_horodecki(werner(p).matrix()) > 2.0);
  }
}

TEST_CASE("concurrence") {
  CHECK(concurrence(bell()) == doctest::Approx(1.0));
  CHECK(concurrence(mixed()) == 0.0);
  CHECK(std::abs(concurrence(thermal_state({1.0, 1.0, 0.01})) - 1.0 / std::numbers::sqrt2) <= 1e-4);

  for (int n = 0; n < 200; ++n) {
    const DensityMatrix rho = testing::random_x_state();
    CHECK(std::abs(concurrence(rho) - oracle::concurrence_by_wootters(rho.matrix())) <= 1e-10);
  }
}

TEST_CASE("purity") {
  CHECK(purity(bell()) == doctest::Approx(1.0));
  CHECK(purity(DensityMatrix::projector({0.5, complex(0.0, 0.5), -0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(purity(mixed()) == doctest::Approx(0.25));
  const ModelParams p{1.0, 1.0, 0.1};
  CHECK(std::abs(purity(thermal_state(p)) - oracle::thermal_purity_by_spectrum(p)) <= 1e-12);
}

TEST_CASE("measure_all") {
  const MeasureRecord b = measure_all(bell(), bell());
  CHECK(b.st == doctest::Approx(1.0));
  CHECK(b.bn == doctest::Approx(1.0));
  CHECK(b.cn == doctest::Approx(1.0));
  CHECK(b.pr == doctest::Approx(1.0));
  CHECK(b.ew == doctest::Approx(0.5));

  const MeasureRecord m = measure_all(mixed(), bell());
  CHECK(m.st == 0.0);
  CHECK(m.bn == 0.0);
  CHECK(m.cn == 0.0);
  CHECK(m.pr == doctest::Approx(0.25));
  CHECK(m.ew == doctest::Approx(-0.25));

  const DensityMatrix rho = thermal_state({1.0, 1.0, 0.1});
  const DensityMatrix state = dephase_pl(rho, {1e-4, 2.1, 300.0});
  const MeasureRecord r = measure_all(state, rho);
  CHECK(r.st == steerability(state));
  CHECK(r.bn == bell_nonlocality(state));
  CHECK(r.cn == concurrence(state));
  CHECK(r.pr == purity(state));
  CHECK(r.ew == entanglement_witness(state, rho));
}

TEST_CASE("dephased thermal states over a random grid") {
  for (int n = 0; n < 300; ++n) {
    const DensityMatrix rho =
        thermal_state({testing::uniform(0.5, 5.0), testing::uniform(0.5, 5.0), testing::uniform(0.05, 2.0)});

    MeasureRecord previous{1.0, 1.0, 1.0, 1.0, 0.0};
    for (double tau : {0.0, 1e-2, 1.0, 10.0, 1e2, 1e3, 1e4, 3e4, 1e5}) {
      const DensityMatrix state = dephase_pl(rho, {1e-4, 2.1, tau});
      const MeasureRecord r = measure_all(state, rho);

      if (r.cn == 0.0) CHECK(r.bn <= 1e-10);
      CHECK(r.st >= 0.0);
      CHECK(r.st <= 1.0 + 1e-10);
      CHECK(r.bn >= 0.0);
      CHECK(r.bn <= 1.0 + 1e-10);
      CHECK(r.cn >= 0.0);
      CHECK(r.cn <= 1.0 + 1e-10);
      CHECK(r.pr >= 0.25 - 1e-12);
      CHECK(r.pr <= 1.0 + 1e-12);

      CHECK(r.st <= previous.st + 1e-10);
      CHECK(r.bn <= previous.bn + 1e-10);
      CHECK(r.cn <= previous.cn + 1e-10);
      CHECK(r.pr <= previous.pr + 1e-10);
      previous = r;
    }
  }
}

TEST_CASE("concurrence rejects negative populations beyond roundoff") {
  // A Hermitian, unit-trace matrix with a negative population is not a valid
  // state, so build it with loose tolerances.
  const Matrix4 m = Matrix4::diagonal({0.6, 0.5, -1e-9, -0.1 + 1e-9});
  const DensityMatrix bad(m, {1e-12, 1e-12, 1.0});
  CHECK_THROWS_AS(concurrence(bad), NumericError);
}
