#include <doctest.h>

#include <cmath>
#include <random>

#include "eulerfan/subsolution.hpp"

using namespace eulerfan;
using namespace eulerfan::subsolution;

namespace {

const GasModel kGas(1.5);

riemann1d::RiemannData window_data(double frac, double p_plus = 2.0,
                                   double u_minus = 0.0) {
  const double upper = smallness_upper(kGas, 1.0, p_plus);
  return {kGas,
          {1.0, u_minus, std::sqrt(frac * upper), 1.0},
          {1.0, 0.0, 0.0, p_plus}};
}

// Residuals of the reduced interface relations the closed forms must solve
// (mass and y-momentum at the two left interfaces, both energy balances and
// the right pressure balance), normalized by pressure scale.
double simplified_system_residual(const FanSubsolution& s) {
  const double cv = s.gas.c_v();
  const double rm = s.left.rho, vm = s.left.v, pm = s.left.p;
  const double pp = s.right.p;
  const double r1 = s.region[0].rho, r2 = s.region[1].rho;
  const double b = s.region[0].beta;
  const double p1 = s.region[0].p, p2 = s.region[1].p;
  const double e1 = s.eps1, e2 = s.eps2, t1 = s.eps_tilde1, t2 = s.eps_tilde2;
  const double mu0 = s.mu0, mu1 = s.mu1;
  double worst = 0.0;
  const auto upd = [&](double res) { worst = std::max(worst, std::abs(res)); };
  upd(mu0 * (rm - r1) - (rm * vm - r1 * b));
  upd(mu0 * (rm * vm - r1 * b) -
      (rm * vm * vm - r1 * (b * b + e1) + pm - p1));
  upd(mu0 * (0.5 * rm * vm * vm + cv * pm - 0.5 * r1 * (b * b + e1 + t1) -
             cv * p1) -
      ((0.5 * rm * vm * vm + (cv + 1) * pm) * vm -
       (0.5 * r1 * (b * b + e1 + t1) + (cv + 1) * p1) * b));
  upd(mu1 * (r1 - r2) - r1 * b);
  upd(mu1 * r1 * b - (r1 * (b * b + e1) - r2 * e2 + p1 - p2));
  upd(mu1 * (0.5 * r1 * (b * b + e1 + t1) + cv * p1 -
             0.5 * r2 * (e2 + t2) - cv * p2) -
      (0.5 * r1 * (b * b + e1 + t1) + (cv + 1) * p1) * b);
  upd(r2 * e2 + p2 - pp);
  return worst / std::max({pm, pp, rm * vm * vm, 1.0});
}

}  // namespace

TEST_CASE("pivot density") {
  riemann1d::RiemannData d{kGas, {1, 0, std::sqrt(0.5), 1}, {1, 0, 0, 2}};
  CHECK(rho_pivot(d) == doctest::Approx(2.0).epsilon(1e-14));
  d.left.v = 0.0;
  CHECK(rho_pivot(d) == doctest::Approx(1.0).epsilon(1e-14));
  d.left.v = std::sqrt(0.3249);
  CHECK(rho_pivot(d) == doctest::Approx(1.0 / 0.6751).epsilon(1e-12));
  d.left.v = 2.0;  // rho v^2 = 4 > p_+ - p_-
  CHECK_THROWS_AS(rho_pivot(d), domain_error);
  CHECK_THROWS_AS(rho_pivot({kGas, {1, 0, 0, 2}, {1, 0, 0, 1}}), domain_error);
}

TEST_CASE("window upper bound and the pure-shock identity") {
  CHECK(smallness_upper(kGas, 1, 2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(smallness_upper(kGas, 1, 1 + 1e-9) < 1e-15);
  // sqrt(upper/rho_-) is the 1-shock curve value at p_+
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> logu(-1.5, 1.5);
  std::uniform_real_distribution<double> cvd(0.51, 5.0);
  for (int i = 0; i < 300; ++i) {
    const GasModel g(cvd(rng));
    const double pm = std::exp(logu(rng));
    const double pp = pm * (1.0 + std::exp(logu(rng)));
    const double rho = std::exp(logu(rng));
    const double lhs = std::sqrt(smallness_upper(g, pm, pp) / rho);
    const double rhs = riemann1d::shock_branch(g, rho, pm, pp);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
  CHECK_THROWS_AS(smallness_upper(kGas, 2, 1), domain_error);
}

TEST_CASE("interior beta vanishes at the pivot and stays below v_-") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u01(0.05, 0.95);
  for (int i = 0; i < 100; ++i) {
    const auto d = window_data(u01(rng));
    const double pivot = rho_pivot(d);
    const double rho2 = pivot * (1.0 + 3.0 * u01(rng));
    CHECK(std::abs(interior_beta(d, pivot, rho2)) < 1e-10);
    const double rho1 = d.left.rho + (pivot - d.left.rho) * u01(rng);
    const double beta = interior_beta(d, rho1, rho2);
    CHECK(beta > 0.0);
    CHECK(beta < d.left.v);
    // speed order holds for every admissible density pair
    const FanSubsolution s = construct(d, {rho1, rho2});
    CHECK(s.mu0 < s.mu1);
    CHECK(s.mu1 < 0.0);
  }
}

TEST_CASE("beta tends to zero as rho1 approaches the pivot") {
  const auto d = window_data(0.95);
  const double pivot = rho_pivot(d);
  const double rho2 = pivot * 1.25;
  double prev = interior_beta(d, pivot - 1e-2 * (pivot - 1.0), rho2);
  for (double h = 1e-3; h > 1e-9; h *= 0.1) {
    const double cur = interior_beta(d, pivot - h * (pivot - 1.0), rho2);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(prev < 1e-4);
}

TEST_CASE("construct: reference data point solves the reduced system") {
  riemann1d::RiemannData d{kGas, {1, 0, 0.57, 1}, {1, 0, 0, 2}};
  const double pivot = rho_pivot(d);
  CHECK(pivot == doctest::Approx(1.4812620352540365).epsilon(1e-12));
  const FanSubsolution s =
      construct(d, {pivot - 0.01, pivot + 0.01});
  CHECK(simplified_system_residual(s) < 1e-10);
  CHECK(s.region[0].beta > 0.0);
  CHECK(s.mu0 < s.mu1);
  CHECK(s.mu1 < 0.0);
  CHECK(s.mu2 == 0.0);
}

TEST_CASE("construct: entropy equalities across both interior regions") {
  const auto d = window_data(0.9);
  const double pivot = rho_pivot(d);
  const FanSubsolution s =
      construct(d, {0.5 * (1.0 + pivot), pivot * 1.5});
  const double s_minus = entropy(kGas, d.left);
  for (int i = 0; i < 2; ++i) {
    const double si =
        entropy(kGas, {s.region[i].rho, 0, 0, s.region[i].p});
    CHECK(std::abs(si - s_minus) < 1e-12);
  }
}

TEST_CASE("construct rejects bad parameters and frames") {
  const auto d = window_data(0.9);
  const double pivot = rho_pivot(d);
  CHECK_THROWS_AS(construct(d, {0.5, pivot * 1.2}), domain_error);
  CHECK_THROWS_AS(construct(d, {pivot * 1.01, pivot * 1.2}), domain_error);
  CHECK_THROWS_AS(construct(d, {1.1, pivot * 0.99}), domain_error);
  riemann1d::RiemannData unnormalized = d;
  unnormalized.right.v = 0.3;
  CHECK_THROWS_AS(
      construct(unnormalized, {0.5 * (1 + pivot), pivot * 1.5}),
      domain_error);
}

TEST_CASE("find: succeeds near the window edge with positive margins") {
  const auto r = find(window_data(0.99, 2.0, 0.3));
  CHECK(r.report.pass);
  CHECK(r.h > 0.0);
  CHECK(r.sub.eps1 > 0.0);
  CHECK(r.sub.eps2 > 0.0);
  CHECK(r.sub.eps_tilde1 > 0.0);
  CHECK(r.sub.eps_tilde2 > 0.0);
  CHECK(r.report.max_equation_residual() < 1e-9);
  for (const auto& c : r.report.conditions) {
    if (c.kind == verifier::ConditionKind::strict_inequality) {
      CHECK(c.value > 0.0);
    }
  }
  CHECK(simplified_system_residual(r.sub) < 1e-10);
}

TEST_CASE("find: zero normal velocity has no window") {
  CHECK_THROWS_AS(find({kGas, {1, 0, 0, 1}, {1, 0, 0, 2}}), not_found_error);
}

TEST_CASE("hugoniot-isentrope gap: double zero at one, positive beyond") {
  for (double cv : {0.51, 1.0, 1.5, 2.5, 5.0}) {
    CHECK(hugoniot_isentrope_gap(cv, 1.0) == 0.0);
    const double h = 1e-3;
    const double d1 = (hugoniot_isentrope_gap(cv, 1 + h) - hugoniot_isentrope_gap(cv, 1 - h)) / (2 * h);
    const double d2 =
        (hugoniot_isentrope_gap(cv, 1 + h) - 2 * hugoniot_isentrope_gap(cv, 1.0) + hugoniot_isentrope_gap(cv, 1 - h)) /
        (h * h);
    CHECK(std::abs(d1) < 1e-6);
    CHECK(std::abs(d2) < 1e-6);
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> logt(0.0, std::log(1e4));
  for (int i = 0; i < 1000; ++i) {
    const double t = std::exp(logt(rng));
    if (t <= 1.0) continue;
    CHECK(hugoniot_isentrope_gap(kGas, t) > 0.0);
  }
  CHECK_THROWS_AS(hugoniot_isentrope_gap(1.5, 0.0), domain_error);
}

TEST_CASE("interior corner slack: routes agree, closed form positive") {
  for (double cv : {0.51, 1.0, 1.5, 2.5, 5.0}) {
    for (double ratio : {1.1, 2.0, 10.0, 100.0}) {
      const GasModel g(cv);
      const double e1 = e_tilde_route1(g, 1.0, 1.0, ratio);
      const double e2 = e_tilde_route2(g, 1.0, 1.0, ratio);
      const double ec = e_tilde(g, 1.0, 1.0, ratio);
      const double scale =
          std::max({e_tilde_scale(g, 1.0, 1.0, ratio), std::abs(e1)});
      CHECK(std::abs(e1 - e2) <= 1e-12 * scale);
      CHECK(std::abs(e1 - ec) <= 1e-10 * scale);
      CHECK(ec > 0.0);
    }
  }
  // degenerate window
  CHECK(std::abs(e_tilde(kGas, 1.0, 1.0, 1.0 + 1e-9)) < 1e-12);
  // the 2 c_v - 1 factor flips the sign below one half
  CHECK(e_tilde(0.3, 1.0, 1.0, 2.0) < 0.0);
  CHECK(e_tilde(0.49, 1.0, 1.0, 2.0) < 0.0);
  CHECK_THROWS_AS(e_tilde(1.5, 1.0, 2.0, 1.0), domain_error);
}

TEST_CASE("pressure headroom at the pivot dominates the f bound") {
  // p_+ - p_2 at rho_2 = pivot exceeds p_- f(p_+/p_-) > 0 inside the window
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u01(0.05, 0.95);
  std::uniform_real_distribution<double> logr(std::log(1.2), std::log(50.0));
  for (int i = 0; i < 200; ++i) {
    const GasModel g(0.51 + 4.5 * u01(rng));
    const double ratio = std::exp(logr(rng));
    const double upper = smallness_upper(g, 1.0, ratio);
    const riemann1d::RiemannData d{
        g, {1.0, 0.0, std::sqrt(u01(rng) * upper), 1.0}, {1.0, 0.0, 0.0, ratio}};
    const double pivot = rho_pivot(d);
    const double p_at_pivot = std::pow(pivot, g.gamma());
    const double bound = hugoniot_isentrope_gap(g, ratio);
    CHECK(bound > 0.0);
    CHECK(ratio - p_at_pivot > bound);
  }
}

TEST_CASE("threshold estimate brackets the search boundary") {
  const SmallnessWindow w = estimate_threshold(kGas, 1.0, 1.0, 2.0);
  CHECK(w.upper == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(w.v_est < w.upper);
  CHECK(w.v_est > 0.0);
  // measured boundary of this construction sits near 94% of the bound
  CHECK(w.v_est / w.upper > 0.92);
  CHECK(w.v_est / w.upper < 0.96);

  const double mid = 0.5 * (w.v_est + w.upper);
  CHECK(try_find({kGas, {1, 0, std::sqrt(mid), 1}, {1, 0, 0, 2}})
            .has_value());
  const double below = w.v_est - 1e-3 * w.upper;
  CHECK(!try_find({kGas, {1, 0, std::sqrt(below), 1}, {1, 0, 0, 2}})
             .has_value());
}
