#include "eulerfan/subsolution.hpp"

#include <algorithm>
#include <cmath>

namespace eulerfan::subsolution {

namespace {

void require_normalized(const riemann1d::RiemannData& d, const char* where) {
  require_valid(d.left, where);
  require_valid(d.right, where);
  if (!(d.left.p < d.right.p) || d.right.u != 0.0 || d.right.v != 0.0) {
    throw domain_error(std::string(where) +
                       ": requires normalized data (p_- < p_+, u_+ = v_+ = 0)");
  }
}

}  // namespace

double rho_pivot(const riemann1d::RiemannData& data) {
  require_valid(data.left, "rho_pivot");
  require_valid(data.right, "rho_pivot");
  const double D = data.right.p - data.left.p;
  if (!(D > 0.0)) throw domain_error("rho_pivot: requires p_- < p_+");
  const double w = data.left.rho * data.left.v * data.left.v;
  if (!(D - w > 0.0)) {
    throw domain_error("rho_pivot: requires rho_- v_-^2 < p_+ - p_-");
  }
  return data.left.rho * D / (D - w);
}

double smallness_upper(const GasModel& g, double p_minus, double p_plus) {
  if (!(p_minus > 0.0) || !(p_plus > p_minus) || !std::isfinite(p_plus)) {
    throw domain_error("smallness_upper: requires 0 < p_- < p_+");
  }
  const double cv = g.c_v();
  const double D = p_plus - p_minus;
  return D * D * 2.0 * cv / ((2.0 * cv + 1.0) * p_plus + p_minus);
}

double interior_beta(const riemann1d::RiemannData& data, double rho1,
                     double rho2) {
  const PrimState& L = data.left;
  const double D = data.right.p - L.p;
  if (!(L.rho < rho1) || !(rho1 < rho2)) {
    throw domain_error("interior_beta: requires rho_- < rho1 < rho2");
  }
  const double bracket = (rho2 - L.rho) * D - L.rho * rho2 * L.v * L.v;
  const double radicand = (rho2 - rho1) * (rho1 - L.rho) * bracket;
  if (radicand < 0.0) {
    throw domain_error("interior_beta: negative radicand (rho2 below the pivot)");
  }
  return (L.rho * (rho2 - rho1) * L.v - std::sqrt(radicand)) /
         (rho1 * (rho2 - L.rho));
}

FanSubsolution construct(const riemann1d::RiemannData& data,
                         const SubsolutionParams& params) {
  require_normalized(data, "construct");
  if (!(data.left.v > 0.0)) {
    throw domain_error("construct: requires v_- > 0");
  }
  const double rhoK = rho_pivot(data);
  const double rho1 = params.rho1;
  const double rho2 = params.rho2;
  if (!(data.left.rho < rho1) || !(rho1 < rhoK) || !(rhoK < rho2)) {
    throw domain_error("construct: requires rho_- < rho1 < pivot < rho2");
  }

  const GasModel& g = data.gas;
  const double cv = g.c_v();
  const PrimState& L = data.left;
  const PrimState& R = data.right;
  const double vm = L.v;
  const double um = L.u;

  const double beta = interior_beta(data, rho1, rho2);
  const double mu0 = (rho1 * beta - L.rho * vm) / (rho1 - L.rho);
  const double mu1 = -rho1 * beta / (rho2 - rho1);
  const double p1 = L.p * std::pow(rho1 / L.rho, g.gamma());
  const double p2 = L.p * std::pow(rho2 / L.rho, g.gamma());

  const double eps1 =
      (L.p - p1 + rho1 * L.rho / (rho1 - L.rho) * (vm - beta) * (vm - beta)) /
      rho1;
  const double eps2 = (R.p - p2) / rho2;
  const double mix = 2.0 * (rho1 - L.rho) * (p1 * beta - L.p * vm) /
                     (L.rho * rho1 * (vm - beta));
  const double ept1 = vm * vm - beta * beta -
                      2.0 * cv * (p1 / rho1 - L.p / L.rho) - mix +
                      (p1 - L.p) / rho1 -
                      L.rho * (vm - beta) * (vm - beta) / (rho1 - L.rho);
  const double ept2 = vm * vm - 2.0 * cv * (p2 / rho2 - L.p / L.rho) - mix +
                      (p2 - R.p) / rho2 + 2.0 * (rho2 - rho1) * p1 / (rho1 * rho2);

  FanSubsolution sub{g, L, R, mu0, mu1, 0.0, {}, eps1, eps2, ept1, ept2};
  sub.region[0] = {rho1, um, beta, 0.0, 0.0, 0.0, p1};
  sub.region[1] = {rho2, um, 0.0, 0.0, 0.0, 0.0, p2};
  sub.region = verifier::lift(sub).region;  // fill gamma, delta, C
  return sub;
}

std::optional<FindResult> try_find(const riemann1d::RiemannData& data,
                                   const SearchConfig& cfg) {
  require_normalized(data, "find");
  const double D = data.right.p - data.left.p;
  const double w = data.left.rho * data.left.v * data.left.v;
  if (!(data.left.v > 0.0) || !(w < D)) return std::nullopt;
  const double rhoK = data.left.rho * D / (D - w);

  for (double h = cfg.h0; h >= cfg.h_min; h *= 0.5) {
    SubsolutionParams params{rhoK - h * (rhoK - data.left.rho),
                             rhoK * (1.0 + h)};
    if (!(params.rho1 > data.left.rho) || !(params.rho1 < rhoK)) continue;
    FanSubsolution sub = construct(data, params);
    if (!(sub.eps1 > 0.0 && sub.eps2 > 0.0 && sub.eps_tilde1 > 0.0 &&
          sub.eps_tilde2 > 0.0 && sub.region[0].beta > 0.0 &&
          sub.mu0 < sub.mu1 && sub.mu1 < 0.0)) {
      continue;
    }
    verifier::ResidualReport rep =
        verifier::verify_subsolution(verifier::lift(sub), cfg.tol_eq);
    if (rep.pass) {
      return FindResult{std::move(sub), std::move(rep), h};
    }
  }
  return std::nullopt;
}

FindResult find(const riemann1d::RiemannData& data, const SearchConfig& cfg) {
  auto r = try_find(data, cfg);
  if (!r) {
    throw not_found_error(
        "find: ladder exhausted without a feasible fan subsolution "
        "(not a proof of nonexistence)");
  }
  return *std::move(r);
}

double hugoniot_isentrope_gap(double c_v, double t) {
  if (!(c_v > 0.0) || !std::isfinite(c_v)) {
    throw domain_error("hugoniot_isentrope_gap: requires c_v > 0");
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw domain_error("hugoniot_isentrope_gap: requires t > 0");
  }
  const double m = 2.0 * c_v + 1.0;
  return t - std::pow((m * t + 1.0) / (m + t), (c_v + 1.0) / c_v);
}

double hugoniot_isentrope_gap(const GasModel& g, double t) { return hugoniot_isentrope_gap(g.c_v(), t); }

double e_tilde(double c_v, double rho_minus, double p_minus, double p_plus) {
  if (!(rho_minus > 0.0) || !(p_minus > 0.0) || !(p_plus > p_minus)) {
    throw domain_error("e_tilde: requires rho_- > 0 and 0 < p_- < p_+");
  }
  const double m = 2.0 * c_v + 1.0;
  return p_minus * (2.0 * c_v - 1.0) * (m * p_minus + p_plus) /
         (rho_minus * (m * p_plus + p_minus)) * hugoniot_isentrope_gap(c_v, p_plus / p_minus);
}

double e_tilde(const GasModel& g, double rho_minus, double p_minus,
               double p_plus) {
  return e_tilde(g.c_v(), rho_minus, p_minus, p_plus);
}

namespace {

struct CornerTerms {
  double v2, kin_diff, relax, dp1, dp2, vel;
};

// Common pieces of the two substitution routes, evaluated at the degenerate
// corner: densities at the pivot, rho_- v_-^2 at the window's upper bound.
CornerTerms corner_terms(const GasModel& g, double rho_m, double p_m,
                         double p_p) {
  const double cv = g.c_v();
  const double w = smallness_upper(g, p_m, p_p);
  const double v2 = w / rho_m;
  const double D = p_p - p_m;
  const double rhoK = rho_m * D / (D - w);
  const double pK = p_m * std::pow(rhoK / rho_m, g.gamma());
  CornerTerms t;
  t.v2 = v2;
  t.kin_diff = 2.0 * cv * (pK / rhoK - p_m / rho_m);
  t.relax = 2.0 * (rhoK - rho_m) * p_m / (rho_m * rhoK);
  t.dp1 = (pK - p_m) / rhoK;
  t.dp2 = (pK - p_p) / rhoK;
  t.vel = rho_m * v2 / (rhoK - rho_m);
  return t;
}

}  // namespace

double e_tilde_route1(const GasModel& g, double rho_minus, double p_minus,
                      double p_plus) {
  const CornerTerms t = corner_terms(g, rho_minus, p_minus, p_plus);
  return t.v2 - t.kin_diff + t.relax + t.dp1 - t.vel;
}

double e_tilde_route2(const GasModel& g, double rho_minus, double p_minus,
                      double p_plus) {
  const CornerTerms t = corner_terms(g, rho_minus, p_minus, p_plus);
  return t.v2 - t.kin_diff + t.relax + t.dp2;
}

double e_tilde_scale(const GasModel& g, double rho_minus, double p_minus,
                     double p_plus) {
  const CornerTerms t = corner_terms(g, rho_minus, p_minus, p_plus);
  return std::max({std::abs(t.v2), std::abs(t.kin_diff), std::abs(t.relax),
                   std::abs(t.dp1), std::abs(t.dp2), std::abs(t.vel)});
}

SmallnessWindow estimate_threshold(const GasModel& g, double rho_minus,
                                   double p_minus, double p_plus,
                                   const SearchConfig& cfg, double tol_frac) {
  const double upper = smallness_upper(g, p_minus, p_plus);
  if (!(rho_minus > 0.0)) {
    throw domain_error("estimate_threshold: requires rho_- > 0");
  }

  // Feasibility of the search at a given rho_- v_-^2; the threshold does not
  // depend on the right density (every right-interface condition degenerates
  // to 0 = 0 under the ansatz).
  const auto succeeds = [&](double w) {
    riemann1d::RiemannData d{g,
                             {rho_minus, 0.0, std::sqrt(w / rho_minus), p_minus},
                             {rho_minus, 0.0, 0.0, p_plus}};
    return try_find(d, cfg).has_value();
  };

  double hi = 0.0;
  for (double frac : {1e-9, 1e-12, 1e-15}) {
    const double cand = upper * (1.0 - frac);
    if (succeeds(cand)) { hi = cand; break; }
  }
  if (hi == 0.0) {
    throw not_found_error(
        "estimate_threshold: search fails even adjacent to the upper bound");
  }
  double lo = 0.0;
  while (hi - lo > tol_frac * upper) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (succeeds(mid) ? hi : lo) = mid;
  }
  return {upper, hi};
}

}  // namespace eulerfan::subsolution

namespace eulerfan::verifier {

FanQuintuple lift(const subsolution::FanSubsolution& sub) {
  FanQuintuple q{sub.gas, sub.left, sub.right, sub.mu0, sub.mu1, 0.0, {}};
  const double eps[2] = {sub.eps1, sub.eps2};
  const double ept[2] = {sub.eps_tilde1, sub.eps_tilde2};
  for (int i = 0; i < 2; ++i) {
    RegionState r = sub.region[i];
    r.C = r.alpha * r.alpha + r.beta * r.beta + eps[i] + ept[i];
    r.gamma = 0.5 * r.C - eps[i] - r.beta * r.beta;
    r.delta = (i == 0) ? r.alpha * r.beta : 0.0;
    q.region[i] = r;
  }
  return q;
}

}  // namespace eulerfan::verifier
