#include "eulerfan/riemann1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eulerfan::riemann1d {

const char* to_string(WaveType w) {
  switch (w) {
    case WaveType::none: return "none";
    case WaveType::shock: return "shock";
    case WaveType::rarefaction: return "rarefaction";
  }
  return "?";
}

int WavePattern::table_row() const {
  const auto idx = [](WaveType w) {
    return w == WaveType::none ? 0 : (w == WaveType::shock ? 1 : 2);
  };
  return 3 * idx(left_wave) + idx(right_wave) + 1 + (contact ? 9 : 0);
}

double shock_branch(const GasModel& g, double rho_a, double p_a, double p) {
  require_valid({rho_a, 0.0, 0.0, p_a}, "shock_branch anchor");
  if (!(p > p_a)) {
    throw domain_error("shock_branch: requires p > anchor pressure");
  }
  const double cv = g.c_v();
  return (p - p_a) * std::sqrt(2.0 * cv / (rho_a * (p_a + (2.0 * cv + 1.0) * p)));
}

double rarefaction_branch(const GasModel& g, double rho_a, double p_a,
                          double p) {
  require_valid({rho_a, 0.0, 0.0, p_a}, "rarefaction_branch anchor");
  if (!(p > 0.0) || p > p_a || !std::isfinite(p)) {
    throw domain_error("rarefaction_branch: requires 0 < p <= anchor pressure");
  }
  const double cv = g.c_v();
  return 2.0 * std::sqrt(cv * (cv + 1.0)) * std::sqrt(p_a / rho_a) *
         (1.0 - std::pow(p / p_a, 1.0 / (2.0 * (cv + 1.0))));
}

double hugoniot_density(const GasModel& g, double rho_a, double p_a,
                        double p) {
  require_valid({rho_a, 0.0, 0.0, p_a}, "hugoniot_density anchor");
  if (!(p > p_a)) {
    throw domain_error("hugoniot_density: requires p > anchor pressure");
  }
  const double m = 2.0 * g.c_v() + 1.0;
  return rho_a * (m * p + p_a) / (m * p_a + p);
}

double isentrope_density(const GasModel& g, double rho_a, double p_a,
                         double p) {
  require_valid({rho_a, 0.0, 0.0, p_a}, "isentrope_density anchor");
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw domain_error("isentrope_density: requires p > 0");
  }
  return rho_a * std::pow(p / p_a, g.c_v() / (g.c_v() + 1.0));
}

double wave_curve(const GasModel& g, double rho_a, double p_a, double p) {
  if (p > p_a) return shock_branch(g, rho_a, p_a, p);
  return -rarefaction_branch(g, rho_a, p_a, p);
}

double wave_curve_derivative(const GasModel& g, double rho_a, double p_a,
                             double p) {
  const double cv = g.c_v();
  if (p > p_a) {
    const double m = 2.0 * cv + 1.0;
    const double s = p_a + m * p;
    return std::sqrt(2.0 * cv / (rho_a * s)) * (1.0 - 0.5 * m * (p - p_a) / s);
  }
  const double q = 1.0 / (2.0 * (cv + 1.0));
  const double b = 2.0 * std::sqrt(cv * (cv + 1.0)) * std::sqrt(p_a / rho_a);
  return b * q * std::pow(p / p_a, q) / p;
}

namespace {

// Both wave curves emanate from p = 0 with the finite rarefaction limits;
// their sum can only balance v_left - v_right when the states do not pull
// apart faster than the combined expansion can fill.
void check_vacuum(const RiemannData& d) {
  const double cv = d.gas.c_v();
  const double b = 2.0 * std::sqrt(cv * (cv + 1.0));
  const double bound = b * (std::sqrt(d.left.p / d.left.rho) +
                            std::sqrt(d.right.p / d.right.rho));
  if (d.left.v - d.right.v + bound <= 0.0) {
    throw vacuum_error(
        "solve_middle: velocity gap exceeds the expansion bound, no positive "
        "middle pressure exists");
  }
}

}  // namespace

MiddleStates solve_middle(const RiemannData& data) {
  require_valid(data.left, "solve_middle left");
  require_valid(data.right, "solve_middle right");
  check_vacuum(data);

  const GasModel& g = data.gas;
  const PrimState& L = data.left;
  const PrimState& R = data.right;
  const double dv = L.v - R.v;

  const auto F = [&](double p) {
    return wave_curve(g, L.rho, L.p, p) + wave_curve(g, R.rho, R.p, p) - dv;
  };

  // Bracket: F is strictly increasing; expand geometrically if the default
  // window misses the root.
  double lo = std::min(L.p, R.p) * 1e-8;
  double hi = std::max(L.p, R.p) * 1e8;
  for (int k = 0; k < 60 && F(lo) > 0.0; ++k) lo = std::max(lo * 1e-2, 1e-300);
  for (int k = 0; k < 60 && F(hi) < 0.0; ++k) hi = std::min(hi * 1e2, 1e300);
  if (F(lo) > 0.0) {
    throw vacuum_error("solve_middle: wave curves meet only at vanishing pressure");
  }

  // Bisection with a safeguarded secant step.
  double p = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && hi - lo > 1e-17 * hi; ++it) {
    const double fl = F(lo), fh = F(hi);
    double cand = (std::abs(fh - fl) > 0.0)
                      ? lo - fl * (hi - lo) / (fh - fl)
                      : 0.5 * (lo + hi);
    if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
    const double fc = F(cand);
    if (fc == 0.0) { lo = hi = cand; break; }
    (fc > 0.0 ? hi : lo) = cand;
    const double mid = 0.5 * (lo + hi);
    const double fm = F(mid);
    if (fm == 0.0) { lo = hi = mid; break; }
    (fm > 0.0 ? hi : lo) = mid;
  }
  p = 0.5 * (lo + hi);

  // Newton polish with the analytic slope.
  for (int it = 0; it < 4; ++it) {
    const double slope = wave_curve_derivative(g, L.rho, L.p, p) +
                         wave_curve_derivative(g, R.rho, R.p, p);
    if (!(slope > 0.0)) break;
    const double step = F(p) / slope;
    const double next = p - step;
    if (!(next > 0.0) || !std::isfinite(next)) break;
    p = next;
  }

  MiddleStates m;
  m.p = p;
  m.v = 0.5 * ((L.v - wave_curve(g, L.rho, L.p, p)) +
               (R.v + wave_curve(g, R.rho, R.p, p)));
  m.rho_left = (p > L.p) ? hugoniot_density(g, L.rho, L.p, p)
                         : isentrope_density(g, L.rho, L.p, p);
  m.rho_right = (p > R.p) ? hugoniot_density(g, R.rho, R.p, p)
                          : isentrope_density(g, R.rho, R.p, p);
  m.u_left = L.u;
  m.u_right = R.u;
  return m;
}

WavePattern classify(const RiemannData& data, double tol) {
  MiddleStates m = solve_middle(data);

  const auto side_wave = [&](double p_anchor) {
    if (std::abs(m.p - p_anchor) <= tol * std::max(m.p, p_anchor)) {
      return WaveType::none;
    }
    return m.p > p_anchor ? WaveType::shock : WaveType::rarefaction;
  };

  WavePattern w;
  w.left_wave = side_wave(data.left.p);
  w.right_wave = side_wave(data.right.p);

  // Zero-strength sides keep the exact outer density so the contact test is
  // not polluted by the solver's last ulps.
  if (w.left_wave == WaveType::none) m.rho_left = data.left.rho;
  if (w.right_wave == WaveType::none) m.rho_right = data.right.rho;

  w.contact = std::abs(m.rho_left - m.rho_right) >
                  tol * std::max(m.rho_left, m.rho_right) ||
              std::abs(data.left.u - data.right.u) > tol;

  if (w.left_wave != WaveType::none || w.right_wave != WaveType::none ||
      w.contact) {
    w.middle = m;
  }
  return w;
}

double SelfSimilarProfile::left_edge() const {
  switch (pattern.left_wave) {
    case WaveType::shock: return sigma1;
    case WaveType::rarefaction: return fan1_head;
    case WaveType::none: break;
  }
  if (pattern.contact) return contact_speed;
  switch (pattern.right_wave) {
    case WaveType::shock: return sigma3;
    case WaveType::rarefaction: return fan3_tail;
    case WaveType::none: break;
  }
  return 0.0;
}

double SelfSimilarProfile::right_edge() const {
  switch (pattern.right_wave) {
    case WaveType::shock: return sigma3;
    case WaveType::rarefaction: return fan3_head;
    case WaveType::none: break;
  }
  if (pattern.contact) return contact_speed;
  switch (pattern.left_wave) {
    case WaveType::shock: return sigma1;
    case WaveType::rarefaction: return fan1_tail;
    case WaveType::none: break;
  }
  return 0.0;
}

SelfSimilarProfile build_profile(const RiemannData& data,
                                 const WavePattern& pattern) {
  SelfSimilarProfile pr{data, pattern};
  const GasModel& g = data.gas;
  const PrimState& L = data.left;
  const PrimState& R = data.right;
  if (!pattern.middle) {
    return pr;  // single constant state
  }
  const MiddleStates& m = *pattern.middle;
  pr.contact_speed = m.v;

  if (pattern.left_wave == WaveType::shock) {
    pr.sigma1 = (L.rho * L.v - m.rho_left * m.v) / (L.rho - m.rho_left);
  } else if (pattern.left_wave == WaveType::rarefaction) {
    pr.fan1_head = L.v - sound_speed(g, L);
    pr.fan1_tail =
        m.v - sound_speed(g, {m.rho_left, m.u_left, m.v, m.p});
  }
  if (pattern.right_wave == WaveType::shock) {
    pr.sigma3 = (m.rho_right * m.v - R.rho * R.v) / (m.rho_right - R.rho);
  } else if (pattern.right_wave == WaveType::rarefaction) {
    pr.fan3_tail =
        m.v + sound_speed(g, {m.rho_right, m.u_right, m.v, m.p});
    pr.fan3_head = R.v + sound_speed(g, R);
  }
  return pr;
}

namespace {

// Interior of a left fan: lambda_1(state) = xi with the 1-Riemann invariant
// v + 2 c_v c pinned to the outer left state, on its isentrope.
PrimState fan1_state(const GasModel& g, const PrimState& L, double xi) {
  const double cv = g.c_v();
  const double cL = sound_speed(g, L);
  const double c = (L.v + 2.0 * cv * cL - xi) / (2.0 * cv + 1.0);
  const double rho = L.rho * std::pow(c / cL, 2.0 * cv);
  const double p = L.p * std::pow(rho / L.rho, g.gamma());
  return {rho, L.u, xi + c, p};
}

PrimState fan3_state(const GasModel& g, const PrimState& R, double xi) {
  const double cv = g.c_v();
  const double cR = sound_speed(g, R);
  const double c = (xi - (R.v - 2.0 * cv * cR)) / (2.0 * cv + 1.0);
  const double rho = R.rho * std::pow(c / cR, 2.0 * cv);
  const double p = R.p * std::pow(rho / R.rho, g.gamma());
  return {rho, R.u, xi - c, p};
}

}  // namespace

PrimState evaluate(const SelfSimilarProfile& pr, double xi) {
  if (!std::isfinite(xi)) {
    throw domain_error("evaluate: xi must be finite");
  }
  const RiemannData& d = pr.data;
  if (!pr.pattern.middle) return d.left;
  const MiddleStates& m = *pr.pattern.middle;

  // Left of / inside the 1-wave.
  switch (pr.pattern.left_wave) {
    case WaveType::shock:
      if (xi < pr.sigma1) return d.left;
      break;
    case WaveType::rarefaction:
      if (xi < pr.fan1_head) return d.left;
      if (xi < pr.fan1_tail) return fan1_state(d.gas, d.left, xi);
      break;
    case WaveType::none:
      break;
  }
  if (pr.pattern.left_wave == WaveType::none && xi < pr.left_edge()) {
    return d.left;
  }

  // Right of / inside the 3-wave.
  switch (pr.pattern.right_wave) {
    case WaveType::shock:
      if (xi > pr.sigma3) return d.right;
      break;
    case WaveType::rarefaction:
      if (xi > pr.fan3_head) return d.right;
      if (xi > pr.fan3_tail) return fan3_state(d.gas, d.right, xi);
      break;
    case WaveType::none:
      if (xi > pr.right_edge()) return d.right;
      break;
  }

  // Between the outer waves: middle states split by the contact.
  if (xi < pr.contact_speed) {
    return {m.rho_left, m.u_left, m.v, m.p};
  }
  return {m.rho_right, m.u_right, m.v, m.p};
}

PrimState evaluate_selfsimilar(const RiemannData& data,
                               const WavePattern& pattern, double xi) {
  return evaluate(build_profile(data, pattern), xi);
}

std::vector<Jump> discontinuities(const SelfSimilarProfile& pr) {
  std::vector<Jump> out;
  if (!pr.pattern.middle) return out;
  const MiddleStates& m = *pr.pattern.middle;
  const PrimState mid_left{m.rho_left, m.u_left, m.v, m.p};
  const PrimState mid_right{m.rho_right, m.u_right, m.v, m.p};
  if (pr.pattern.left_wave == WaveType::shock) {
    out.push_back({pr.data.left, mid_left, pr.sigma1});
  }
  if (pr.pattern.contact) {
    out.push_back({mid_left, mid_right, pr.contact_speed});
  }
  if (pr.pattern.right_wave == WaveType::shock) {
    out.push_back({mid_right, pr.data.right, pr.sigma3});
  }
  return out;
}

}  // namespace eulerfan::riemann1d
