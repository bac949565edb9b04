#include "eulerfan/patching.hpp"

#include <cmath>
#include <string>

namespace eulerfan::patching {

PrimState galilean_shift(const PrimState& s, double au, double av) {
  return {s.rho, s.u + au, s.v + av, s.p};
}

riemann1d::RiemannData galilean_shift(const riemann1d::RiemannData& data,
                                      double au, double av) {
  if (!std::isfinite(au) || !std::isfinite(av)) {
    throw domain_error("galilean_shift: shift must be finite");
  }
  return {data.gas, galilean_shift(data.left, au, av),
          galilean_shift(data.right, au, av)};
}

riemann1d::RiemannData reflect(const riemann1d::RiemannData& data) {
  const auto flip = [](const PrimState& s) {
    return PrimState{s.rho, -s.u, -s.v, s.p};
  };
  return {data.gas, flip(data.right), flip(data.left)};
}

Normalization normalize(const riemann1d::RiemannData& data, double tol) {
  require_valid(data.left, "normalize left");
  require_valid(data.right, "normalize right");
  Normalization n{data, data, false, 0.0, 0.0, false};
  riemann1d::RiemannData work = data;
  if (data.left.p > data.right.p) {
    work = reflect(work);
    n.reflected = true;
  }
  n.equal_pressures = std::abs(work.right.p - work.left.p) <=
                      tol * std::max(work.left.p, work.right.p);
  n.shift_u = -work.right.u;
  n.shift_v = -work.right.v;
  n.normalized = galilean_shift(work, n.shift_u, n.shift_v);
  return n;
}

riemann1d::RiemannData denormalize(const Normalization& n) {
  riemann1d::RiemannData work =
      galilean_shift(n.normalized, -n.shift_u, -n.shift_v);
  return n.reflected ? reflect(work) : work;
}

const char* to_string(CaseId c) {
  switch (c) {
    case CaseId::unique_1d: return "unique_1d";
    case CaseId::fan_only: return "fan_only";
    case CaseId::fan_rarefaction: return "fan_rarefaction";
    case CaseId::fan_shock: return "fan_shock";
    case CaseId::two_shocks: return "two_shocks";
    case CaseId::contact_open: return "contact_open";
  }
  return "?";
}

CaseDecision case_dispatch(const riemann1d::RiemannData& normalized,
                           const subsolution::SearchConfig& cfg) {
  using riemann1d::WaveType;
  const riemann1d::WavePattern pattern = riemann1d::classify(normalized);
  const int shocks = (pattern.left_wave == WaveType::shock) +
                     (pattern.right_wave == WaveType::shock);
  const bool has_rarefaction =
      pattern.left_wave == WaveType::rarefaction ||
      pattern.right_wave == WaveType::rarefaction;

  if (shocks == 0) {
    return {pattern.contact ? CaseId::contact_open : CaseId::unique_1d,
            pattern, std::nullopt};
  }
  if (shocks == 2) {
    return {CaseId::two_shocks, pattern, std::nullopt};
  }
  if (!has_rarefaction) {
    return {CaseId::fan_shock, pattern, std::nullopt};
  }

  // Single shock plus rarefaction: inside the empirical window the fan alone
  // covers the data, otherwise an auxiliary state brings it inside.
  const auto window = subsolution::estimate_threshold(
      normalized.gas, normalized.left.rho, normalized.left.p,
      normalized.right.p, cfg);
  const double dv = normalized.left.v - normalized.right.v;
  const double w = normalized.left.rho * dv * dv;
  const bool inside = dv > 0.0 && w > window.v_est;
  return {inside ? CaseId::fan_only : CaseId::fan_rarefaction, pattern,
          window};
}

PrimState rarefaction_aux_state(const riemann1d::RiemannData& normalized,
                                double delta) {
  const riemann1d::MiddleStates m = riemann1d::solve_middle(normalized);
  const PrimState& R = normalized.right;
  if (!(delta > 0.0) || !(m.p + delta < R.p)) {
    throw domain_error(
        "rarefaction_aux_state: requires 0 < delta < p_+ - p_M");
  }
  const double pd = m.p + delta;
  const double vd =
      R.v - riemann1d::rarefaction_branch(normalized.gas, R.rho, R.p, pd);
  const double rd =
      riemann1d::isentrope_density(normalized.gas, R.rho, R.p, pd);
  return {rd, R.u, vd, pd};
}

PrimState shock_aux_state(const riemann1d::RiemannData& normalized,
                          double delta) {
  const PrimState& R = normalized.right;
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw domain_error("shock_aux_state: requires delta > 0");
  }
  const double pd = R.p + delta;
  const double vd =
      R.v + riemann1d::shock_branch(normalized.gas, R.rho, R.p, pd);
  const double rd =
      riemann1d::hugoniot_density(normalized.gas, R.rho, R.p, pd);
  return {rd, R.u, vd, pd};
}

namespace {

// delta ladder shared by both patched cases: shift by (u_+, v_delta), run
// the fan search against the aux state at rest.
PatchedSolution patch_with_aux(const riemann1d::RiemannData& nd,
                               const Normalization& norm, CaseId id,
                               const subsolution::SearchConfig& cfg,
                               const DeltaLadder& ladder, double delta0) {
  const GasModel& g = nd.gas;
  const PrimState& R = nd.right;
  std::string best;
  double delta = delta0;
  for (int k = 0; k <= ladder.max_halvings; ++k, delta *= 0.5) {
    const PrimState aux = (id == CaseId::fan_rarefaction)
                              ? rarefaction_aux_state(nd, delta)
                              : shock_aux_state(nd, delta);
    const PrimState aux_rest{aux.rho, 0.0, 0.0, aux.p};
    const riemann1d::RiemannData sub{
        g, galilean_shift(nd.left, -aux.u, -aux.v), aux_rest};
    const double dv = sub.left.v;
    const double w = sub.left.rho * dv * dv;
    if (!(dv > 0.0) ||
        !(w < subsolution::smallness_upper(g, sub.left.p, aux.p))) {
      continue;
    }
    auto fr = subsolution::try_find(sub, cfg);
    if (!fr) continue;

    TrailingWave trailing{TrailingWave::Kind::none, aux_rest,
                          galilean_shift(R, -aux.u, -aux.v), 0.0};
    if (id == CaseId::fan_rarefaction) {
      trailing.kind = TrailingWave::Kind::rarefaction;
      trailing.speed = sound_speed(g, aux_rest);  // fan's left edge
    } else {
      trailing.kind = TrailingWave::Kind::shock;
      trailing.speed = -R.rho * trailing.right.v / (aux.rho - R.rho);
    }
    // margin over mu_2 = 0: lambda_3 of the aux state, or the shock speed
    return PatchedSolution{id,  norm,     delta,    aux.v,
                           aux, *std::move(fr), trailing, trailing.speed};
  }
  throw not_found_error(std::string("assemble: delta ladder exhausted for ") +
                        to_string(id));
}

}  // namespace

PatchedSolution assemble(const riemann1d::RiemannData& data,
                         const subsolution::SearchConfig& cfg,
                         const DeltaLadder& ladder) {
  const Normalization norm = normalize(data);
  const riemann1d::RiemannData& nd = norm.normalized;
  const CaseDecision dec = case_dispatch(nd, cfg);

  switch (dec.id) {
    case CaseId::fan_only:
      return PatchedSolution{dec.id,       norm,
                             0.0,          0.0,
                             std::nullopt, subsolution::find(nd, cfg),
                             TrailingWave{}, 0.0};
    case CaseId::fan_rarefaction: {
      const riemann1d::MiddleStates m = riemann1d::solve_middle(nd);
      const double delta0 = ladder.delta0_frac * (nd.right.p - m.p);
      return patch_with_aux(nd, norm, dec.id, cfg, ladder, delta0);
    }
    case CaseId::fan_shock: {
      const double delta0 = ladder.delta0_frac * nd.right.p;
      return patch_with_aux(nd, norm, dec.id, cfg, ladder, delta0);
    }
    case CaseId::unique_1d:
    case CaseId::two_shocks:
    case CaseId::contact_open:
      throw not_found_error(
          std::string("assemble: no construction for case ") +
          to_string(dec.id));
  }
  throw not_found_error("assemble: unreachable");
}

}  // namespace eulerfan::patching
