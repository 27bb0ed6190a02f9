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

const DensityMatrix& reference_state() {
  static const DensityMatrix rho = thermal_state({1.0, 1.0, 0.1});
  return rho;
}

DensityMatrix random_thermal() {
  return thermal_state({testing::uniform(0.2, 5.0), testing::uniform(0.2, 5.0), testing::uniform(0.05, 3.0)});
}

void check_diagonal_unchanged(const DensityMatrix& a, const DensityMatrix& b) {
  for (std::size_t i = 0; i < 4; ++i) CHECK(a(i, i) == b(i, i));
}

} // namespace

TEST_CASE("stochastic unitary") {
  CHECK(max_abs_diff(stochastic_unitary({1.3, 0.4, 0.7, 0.0}), Matrix4::identity()) == 0.0);

  const double e = 0.8, t = 1.7;
  const Matrix4 decoupled = stochastic_unitary({e, 0.0, 0.5, t});
  CHECK(max_abs_diff(decoupled, std::polar(1.0, -2.0 * e * t) * Matrix4::identity()) <= 1e-15);

  for (int n = 0; n < 50; ++n) {
    const FieldParams f{testing::uniform(-2.0, 2.0), testing::uniform(0.0, 2.0), testing::uniform(-1.0, 1.0),
                        testing::uniform(0.0, 20.0)};
    const Matrix4 u = stochastic_unitary(f);
    CHECK(max_abs_diff(u * u.adjoint(), Matrix4::identity()) <= 1e-12);
  }
}

TEST_CASE("constant field examples") {
  const DensityMatrix& rho = reference_state();
  CHECK(evolve_constant_field(rho, {1.0, 0.5, 1.0, 0.0}) == rho);

  const double period = std::numbers::pi / (2.0 * 1.0 * 0.5);
  CHECK(max_abs_diff(evolve_constant_field(rho, {1.0, 0.5, 1.0, period}).matrix(), rho.matrix()) <= 1e-12);

  for (double t : {0.3, 2.0, 17.0}) CHECK(evolve_constant_field(rho, {1.0, 0.5, 0.0, t}) == rho);
}

TEST_CASE("constant field equals conjugation by the stochastic unitary") {
  for (int n = 0; n < 100; ++n) {
    const DensityMatrix rho = random_thermal();
    const FieldParams f{testing::uniform(-2.0, 2.0), testing::uniform(0.0, 2.0), testing::uniform(-1.0, 1.0),
                        testing::uniform(0.0, 20.0)};
    const DensityMatrix direct = conjugate_map(stochastic_unitary(f), rho);
    const DensityMatrix closed = evolve_constant_field(rho, f);
    CHECK(max_abs_diff(direct.matrix(), closed.matrix()) <= 1e-12);
    check_diagonal_unchanged(rho, closed);
    CHECK(closed(1, 2) == rho(1, 2));
    CHECK(std::abs(purity(closed) - purity(rho)) <= 1e-15);
  }
}

TEST_CASE("constant field does not depend on E") {
  const DensityMatrix& rho = reference_state();
  for (int n = 0; n < 50; ++n) {
    FieldParams a{testing::uniform(-5.0, 5.0), 0.5, testing::uniform(-1.0, 1.0), testing::uniform(0.0, 10.0)};
    FieldParams b = a;
    b.energy = testing::uniform(-5.0, 5.0);
    CHECK(max_abs_diff(evolve_constant_field(rho, a).matrix(), evolve_constant_field(rho, b).matrix()) <= 1e-12);
    CHECK(max_abs_diff(conjugate_map(stochastic_unitary(a), rho).matrix(),
                       conjugate_map(stochastic_unitary(b), rho).matrix()) <= 1e-12);
  }
}

TEST_CASE("constant field is symmetric in the sign of delta") {
  const DensityMatrix& rho = reference_state();
  for (int n = 0; n < 50; ++n) {
    const double delta = testing::uniform(0.0, 1.0);
    const double t = testing::uniform(0.0, 10.0);
    const DensityMatrix plus = evolve_constant_field(rho, {1.0, 0.5, delta, t});
    const DensityMatrix minus = evolve_constant_field(rho, {1.0, 0.5, -delta, t});
    CHECK(std::abs(plus(0, 3)) == std::abs(minus(0, 3)));
    CHECK(entanglement_witness(plus, rho) == doctest::Approx(entanglement_witness(minus, rho)).epsilon(1e-14));
  }
}

TEST_CASE("field parameters are validated") {
  const DensityMatrix& rho = reference_state();
  CHECK_THROWS_AS(evolve_constant_field(rho, {1.0, 0.5, 1.0, -1.0}), ParameterError);
  CHECK_THROWS_AS(evolve_constant_field(rho, {1.0, -0.5, 1.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(evolve_constant_field(rho, {1.0, 0.5, 1.5, 1.0}), ParameterError);
  CHECK_THROWS_AS(evolve_decaying_field(rho, {1.0, 0.0, 1.0, 1.0}, {0.5, -0.1}), ParameterError);

  Matrix4 m = DensityMatrix::maximally_mixed().matrix();
  m(0, 1) = m(1, 0) = 0.1;
  const DensityMatrix not_x(m);
  CHECK_THROWS_AS(evolve_constant_field(not_x, {1.0, 0.5, 1.0, 1.0}), StateError);
  CHECK_THROWS_AS(dephase_pl(not_x, {1e-4, 2.1, 1.0}), StateError);
  CHECK_THROWS_AS(qwm_reverse(not_x, {0.5}), StateError);
}

TEST_CASE("decaying field") {
  const DensityMatrix& rho = reference_state();
  for (double t : {0.0, 0.7, 3.0, 11.0}) {
    const FieldParams f{1.0, 0.0, 1.0, t};
    const DensityMatrix no_decay = evolve_decaying_field(rho, f, {0.5, 0.0});
    CHECK(no_decay == evolve_constant_field(rho, {1.0, 0.5, 1.0, t}));
  }
  CHECK(evolve_decaying_field(rho, {1.0, 0.0, 1.0, 0.0}, {0.5, 0.3}) == rho);

  // Literal substitution: the phase 4 delta mu e^{-chi t} t dies out.
  const FieldParams late{1.0, 0.0, 1.0, 200.0};
  CHECK(std::abs(decaying_phase(late, {0.5, 0.3})) < 1e-20);
  CHECK(max_abs_diff(evolve_decaying_field(rho, late, {0.5, 0.3}).matrix(), rho.matrix()) <= 1e-15);

  // The integrated variant saturates instead.
  CHECK(decaying_phase(late, {0.5, 0.3}, DecayMode::integrated) == doctest::Approx(4.0 * 0.5 / 0.3));
  CHECK(decaying_phase({1.0, 0.0, 1.0, 2.0}, {0.5, 0.0}, DecayMode::integrated) == doctest::Approx(4.0));
}

TEST_CASE("beta function examples") {
  for (double g : {1e-4, 0.3, 2.0})
    for (double alpha : {1.1, 2.0, 2.1, 4.0}) CHECK(beta_pl({g, alpha, 0.0}) == 0.0);
  CHECK(beta_pl({1.0, 3.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(beta_pl({1.0, 2.0, 3.0}) == doctest::Approx(3.0 - std::log(4.0)).epsilon(1e-14));
  CHECK_THROWS_AS(beta_pl({1e-4, 1.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(beta_pl({0.0, 2.1, 1.0}), ParameterError);
  CHECK_THROWS_AS(beta_pl({1e-4, 2.1, -1.0}), ParameterError);
}

TEST_CASE("beta function against the double integral") {
  for (double g : {1e-4, 1e-2, 1.0})
    for (double alpha : {1.5, 2.1, 3.0})
      for (double tau : {0.1, 10.0, 1e4}) {
        const double numeric = oracle::beta_by_quadrature(g, alpha, tau);
        CHECK(std::abs(beta_pl({g, alpha, tau}) - numeric) <= 1e-6 * numeric);
      }
}

TEST_CASE("beta function is continuous at alpha = 2") {
  for (double g : {1e-4, 1e-2, 1.0})
    for (double tau : {0.1, 10.0, 1e4}) {
      const double limit = beta_pl({g, 2.0, tau});
      CHECK(limit == doctest::Approx((g * tau - std::log1p(g * tau)) / g).epsilon(1e-12));
      for (double alpha : {2.0 - 1e-6, 2.0 + 1e-6}) {
        CHECK(std::abs(beta_pl({g, alpha, tau}) - limit) <= 1e-5 * limit);
      }
    }
}

TEST_CASE("beta function is non-negative and non-decreasing") {
  for (double g : {1e-4, 1e-2, 1.0})
    for (double alpha : {1.2, 2.0, 2.1, 3.5}) {
      double previous = 0.0;
      for (double tau = 1e-3; tau < 1e6; tau *= 1.3) {
        const double b = beta_pl({g, alpha, tau});
        CHECK(b >= previous);
        previous = b;
      }
    }
}

TEST_CASE("power-law dephasing") {
  const DensityMatrix& rho = reference_state();
  CHECK(dephase_pl(rho, {1e-4, 2.1, 0.0}) == rho);

  const DensityMatrix late = dephase_pl(rho, {1e-4, 2.5, 1e7});
  check_diagonal_unchanged(rho, late);
  CHECK(late(0, 3) == complex(0.0));
  CHECK(late(1, 2) == rho(1, 2));

  double previous_factor = 1.0;
  double previous_purity = purity(rho);
  for (double tau = 1e-2; tau <= 1e5; tau *= 1.5) {
    const NoiseParams n{1e-4, 2.1, tau};
    const double factor = pl_coherence_factor(n);
    CHECK(factor <= previous_factor);
    CHECK(factor == doctest::Approx(std::exp(-8.0 * beta_pl(n))));

    const DensityMatrix out = dephase_pl(rho, n);
    CHECK(out(0, 3).real() == doctest::Approx(rho(0, 3).real() * factor));
    CHECK(purity(out) <= previous_purity + 1e-12);
    previous_factor = factor;
    previous_purity = purity(out);
  }
}

TEST_CASE("weak-measurement reversal") {
  const DensityMatrix& rho = reference_state();
  CHECK(max_abs_diff(qwm_reverse(rho, {0.0}).matrix(), rho.matrix()) <= 1e-15);
  CHECK(qwm_reverse(rho, {1.0}).matrix() == Matrix4::diagonal({1.0, 0.0, 0.0, 0.0}));
  CHECK_THROWS_AS(qwm_reverse(rho, {1.5}), ParameterError);
  CHECK_THROWS_AS(qwm_reverse(DensityMatrix::projector({0.0, 0.0, 0.0, 1.0}), {1.0}), StateAnnihilatedError);

  for (int n = 0; n < 100; ++n) {
    const DensityMatrix state = n % 2 == 0 ? random_thermal() : testing::random_x_state();
    const ReversalParams rp{n % 10 == 0 ? 0.6 : testing::uniform(0.0, 0.99)};
    const Matrix2 q = reversal_operator(rp);
    const DensityMatrix direct = conjugate_map(kron(q, q), state, Renormalize::yes);
    const DensityMatrix closed = qwm_reverse(state, rp);
    CHECK(max_abs_diff(direct.matrix(), closed.matrix()) <= 1e-12);
    CHECK(is_x_shaped(closed.matrix()));
  }
}

TEST_CASE("all maps return valid states") {
  for (int n = 0; n < 100; ++n) {
    const DensityMatrix rho = random_thermal();
    const double tau = std::pow(10.0, testing::uniform(-2.0, 6.0));
    // The DensityMatrix constructor validates, so reaching here is the check.
    CHECK_NOTHROW(evolve_constant_field(rho, {1.0, 0.5, 1.0, testing::uniform(0.0, 50.0)}));
    CHECK_NOTHROW(evolve_decaying_field(rho, {1.0, 0.0, -1.0, testing::uniform(0.0, 50.0)}, {0.5, 0.2}));
    CHECK_NOTHROW(dephase_pl(rho, {1e-4, 2.1, tau}));
    CHECK_NOTHROW(qwm_reverse(rho, {testing::uniform(0.0, 1.0)}));
  }
}
