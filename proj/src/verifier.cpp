#include "eulerfan/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

namespace eulerfan::verifier {

const char* to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::equation: return "equation";
    case ConditionKind::strict_inequality: return "strict_inequality";
    case ConditionKind::inequality: return "inequality";
  }
  return "?";
}

const Condition* ResidualReport::find(const std::string& id) const {
  for (const auto& c : conditions) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

double ResidualReport::max_equation_residual() const {
  double worst = 0.0;
  for (const auto& c : conditions) {
    if (c.kind != ConditionKind::equation) continue;
    const double denom = std::max(c.scale, 1e-300);
    worst = std::max(worst, std::abs(c.value) / denom);
  }
  return worst;
}

double ResidualReport::min_strict_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& c : conditions) {
    if (c.kind == ConditionKind::strict_inequality) {
      worst = std::min(worst, c.value);
    }
  }
  return worst;
}

std::vector<std::string> ResidualReport::violated() const {
  std::vector<std::string> out;
  for (const auto& c : conditions) {
    if (!c.pass) out.push_back(c.id);
  }
  return out;
}

namespace {

double max_abs(std::initializer_list<double> terms) {
  double m = 0.0;
  for (double t : terms) m = std::max(m, std::abs(t));
  return m;
}

// Uniform face data: outer wedges carry the exact-solution closure
// (M = u v, Syy = v^2, K = rho |v|^2 / 2), interior wedges the relaxed one.
struct Wedge {
  double rho, vx, vy;
  double M;      // x-momentum flux factor: u v (outer) or delta (interior)
  double Syy;    // y-momentum flux factor: v^2 (outer) or C/2 - gamma
  double K;      // rho C / 2; outer C = |v|^2
  double p;
  double rho_s;  // rho * entropy
};

Wedge outer_wedge(const GasModel& g, const PrimState& s) {
  require_valid(s, "verifier outer state");
  const double C = s.u * s.u + s.v * s.v;
  return {s.rho, s.u,         s.v, s.u * s.v, s.v * s.v,
          0.5 * s.rho * C, s.p, s.rho * entropy(g, s)};
}

Wedge interior_wedge(const GasModel& g, const RegionState& r) {
  if (!(r.rho > 0.0) || !(r.p > 0.0) || !(r.C > 0.0) ||
      !std::isfinite(r.rho + r.alpha + r.beta + r.gamma + r.delta + r.C +
                     r.p)) {
    throw domain_error("verifier: region requires finite fields and rho, p, C > 0");
  }
  return {r.rho,
          r.alpha,
          r.beta,
          r.delta,
          0.5 * r.C - r.gamma,
          0.5 * r.rho * r.C,
          r.p,
          r.rho * entropy(g, {r.rho, 0.0, 0.0, r.p})};
}

struct Collector {
  double tol;
  std::vector<Condition> conds;

  void equation(const std::string& id, double lhs, double rhs,
                std::initializer_list<double> terms) {
    const double scale = max_abs(terms);
    const double res = lhs - rhs;
    conds.push_back({id, ConditionKind::equation, res, scale,
                     std::abs(res) <= tol * std::max(scale, 1e-300)});
  }
  void strict(const std::string& id, double margin) {
    conds.push_back({id, ConditionKind::strict_inequality, margin, 0.0,
                     margin > 0.0});
  }
  void nonstrict(const std::string& id, double margin,
                 std::initializer_list<double> terms) {
    const double scale = max_abs(terms);
    conds.push_back({id, ConditionKind::inequality, margin, scale,
                     margin >= -tol * std::max(scale, 1e-300)});
  }

  // The four jump equations plus the entropy inequality at one interface
  // moving with speed mu; A left of the interface, B right of it.
  void interface(const std::string& tag, double cv, double mu, const Wedge& A,
                 const Wedge& B) {
    equation("rh_" + tag + "_mass", mu * (A.rho - B.rho),
             A.rho * A.vy - B.rho * B.vy,
             {mu * A.rho, mu * B.rho, A.rho * A.vy, B.rho * B.vy});
    equation("rh_" + tag + "_xmom", mu * (A.rho * A.vx - B.rho * B.vx),
             A.rho * A.M - B.rho * B.M,
             {mu * A.rho * A.vx, mu * B.rho * B.vx, A.rho * A.M,
              B.rho * B.M});
    equation("rh_" + tag + "_ymom", mu * (A.rho * A.vy - B.rho * B.vy),
             A.rho * A.Syy - B.rho * B.Syy + A.p - B.p,
             {mu * A.rho * A.vy, mu * B.rho * B.vy, A.rho * A.Syy,
              B.rho * B.Syy, A.p, B.p});
    const double EA = A.K + cv * A.p;
    const double EB = B.K + cv * B.p;
    const double FA = (A.K + (cv + 1.0) * A.p) * A.vy;
    const double FB = (B.K + (cv + 1.0) * B.p) * B.vy;
    equation("rh_" + tag + "_energy", mu * (EA - EB), FA - FB,
             {mu * EA, mu * EB, FA, FB});
    nonstrict("admissibility_" + tag,
              (B.rho_s * B.vy - A.rho_s * A.vy) - mu * (B.rho_s - A.rho_s),
              {mu * A.rho_s, mu * B.rho_s, A.rho_s * A.vy, B.rho_s * B.vy});
  }
};

}  // namespace

ResidualReport verify_subsolution(const FanQuintuple& q, double tol_eq) {
  if (!(tol_eq > 0.0)) throw domain_error("verify_subsolution: tol_eq must be positive");
  const double cv = q.gas.c_v();
  const Wedge wl = outer_wedge(q.gas, q.left);
  const Wedge wr = outer_wedge(q.gas, q.right);
  const Wedge w1 = interior_wedge(q.gas, q.region[0]);
  const Wedge w2 = interior_wedge(q.gas, q.region[1]);

  Collector c{tol_eq, {}};
  c.strict("order_mu01", q.mu1 - q.mu0);
  c.strict("order_mu12", q.mu2 - q.mu1);
  c.interface("left", cv, q.mu0, wl, w1);
  c.interface("mid", cv, q.mu1, w1, w2);
  c.interface("right", cv, q.mu2, w2, wr);
  for (int i = 0; i < 2; ++i) {
    const RegionState& r = q.region[i];
    const std::string n = std::to_string(i + 1);
    c.strict("subsolution_trace_" + n,
             r.C - r.alpha * r.alpha - r.beta * r.beta);
    c.strict("subsolution_det_" + n,
             (0.5 * r.C - r.alpha * r.alpha + r.gamma) *
                     (0.5 * r.C - r.beta * r.beta - r.gamma) -
                 (r.delta - r.alpha * r.beta) *
                     (r.delta - r.alpha * r.beta));
  }

  ResidualReport rep;
  rep.tol_eq = tol_eq;
  rep.conditions = std::move(c.conds);
  rep.pass = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                         [](const Condition& x) { return x.pass; });
  return rep;
}

ResidualReport verify_solution(const PiecewiseSolution& s, double tol_eq) {
  if (!(tol_eq > 0.0)) throw domain_error("verify_solution: tol_eq must be positive");
  if (s.states.size() != s.speeds.size() + 1) {
    throw domain_error("verify_solution: need states.size() == speeds.size() + 1");
  }
  const double cv = s.gas.c_v();
  Collector c{tol_eq, {}};
  for (std::size_t k = 0; k < s.speeds.size(); ++k) {
    const Wedge A = outer_wedge(s.gas, s.states[k]);
    const Wedge B = outer_wedge(s.gas, s.states[k + 1]);
    c.interface("jump" + std::to_string(k), cv, s.speeds[k], A, B);
  }
  ResidualReport rep;
  rep.tol_eq = tol_eq;
  rep.conditions = std::move(c.conds);
  rep.pass = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                         [](const Condition& x) { return x.pass; });
  return rep;
}

}  // namespace eulerfan::verifier
