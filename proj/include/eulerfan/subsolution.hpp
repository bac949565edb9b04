#pragma once

#include <optional>

#include "eulerfan/riemann1d.hpp"
#include "eulerfan/verifier.hpp"

namespace eulerfan::subsolution {

/// Interior densities rho_- < rho1 < rho_pivot < rho2 parameterizing the fan
/// construction.
struct SubsolutionParams {
  double rho1 = 0.0;
  double rho2 = 0.0;
};

/// Explicit fan subsolution candidate in the normalized frame
/// (p_- < p_+, v_+ = u_+ = 0, v_- > 0): interface speeds, two interior
/// regions and the slack variables that encode the positivity conditions.
struct FanSubsolution {
  GasModel gas;
  PrimState left;
  PrimState right;
  double mu0 = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;  // pinned to 0 by the construction
  std::array<verifier::RegionState, 2> region{};
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps_tilde1 = 0.0;
  double eps_tilde2 = 0.0;
};

/// Pivot density rho_- (p_+ - p_-) / (p_+ - p_- - rho_- v_-^2); the interior
/// densities straddle it. Requires p_- < p_+ and rho_- v_-^2 < p_+ - p_-.
double rho_pivot(const riemann1d::RiemannData& data);

/// Upper bound on rho_- v_-^2 for the construction window:
///   (p_+ - p_-)^2 2 c_v / ((2 c_v + 1) p_+ + p_-).
/// Its square root over rho_- is exactly the 1-shock curve value at p_+.
double smallness_upper(const GasModel& g, double p_minus, double p_plus);

/// Normal velocity of region 1 for given interior densities (closed-form
/// root; vanishes when rho1 hits the pivot).
double interior_beta(const riemann1d::RiemannData& data, double rho1,
                     double rho2);

/// Builds the candidate from the closed forms. Equation consistency is exact
/// by construction; the inequality conditions are reported, not guaranteed.
FanSubsolution construct(const riemann1d::RiemannData& data,
                         const SubsolutionParams& params);

struct SearchConfig {
  double h0 = 0.5;
  double h_min = 0x1p-40;
  double tol_eq = verifier::kDefaultEqTol;
};

struct FindResult {
  FanSubsolution sub;
  verifier::ResidualReport report;
  double h = 0.0;
};

/// Walks rho1 = pivot - h (pivot - rho_-), rho2 = pivot (1 + h) down the
/// ladder h0, h0/2, ... until the full certificate passes. Returns nullopt /
/// throws not_found_error when the ladder is exhausted (says nothing about
/// nonexistence).
std::optional<FindResult> try_find(const riemann1d::RiemannData& data,
                                   const SearchConfig& cfg = {});
FindResult find(const riemann1d::RiemannData& data,
                const SearchConfig& cfg = {});

/// Pressure ratio t of a shock minus the isentropic pressure ratio at the
/// shock's compression:
///   t - (((2 c_v + 1) t + 1) / ((2 c_v + 1) + t))^{(c_v+1)/c_v}.
/// Positive for every t > 1 with a double zero at t = 1; drives the
/// feasibility headroom of the construction at the window edge.
double hugoniot_isentrope_gap(double c_v, double t);
double hugoniot_isentrope_gap(const GasModel& g, double t);

/// Interior slack at the degenerate corner (densities at the pivot,
/// rho_- v_-^2 at the window's upper bound), factored closed form:
///   p_-(2 c_v - 1)((2 c_v + 1) p_- + p_+) / (rho_- ((2 c_v + 1) p_+ + p_-))
///     * hugoniot_isentrope_gap(c_v, p_+/p_-).
/// The raw-c_v overload permits probing the sign factor 2 c_v - 1.
double e_tilde(double c_v, double rho_minus, double p_minus, double p_plus);
double e_tilde(const GasModel& g, double rho_minus, double p_minus,
               double p_plus);

/// The two substitution routes to the same corner value (they agree
/// algebraically; exposed separately so the identity is checkable).
double e_tilde_route1(const GasModel& g, double rho_minus, double p_minus,
                      double p_plus);
double e_tilde_route2(const GasModel& g, double rho_minus, double p_minus,
                      double p_plus);
/// Largest |term| in the route expressions (normalization scale for
/// comparing the two routes).
double e_tilde_scale(const GasModel& g, double rho_minus, double p_minus,
                     double p_plus);

struct SmallnessWindow {
  double upper = 0.0;
  double v_est = 0.0;  // empirical: success boundary of the documented search
};

/// Bisects rho_- v_-^2 in (0, upper) for the boundary where the ladder
/// search starts succeeding, to absolute tolerance tol_frac * upper. The
/// result is a property of the implemented search, not a proven threshold.
SmallnessWindow estimate_threshold(const GasModel& g, double rho_minus,
                                   double p_minus, double p_plus,
                                   const SearchConfig& cfg = {},
                                   double tol_frac = 1e-6);

}  // namespace eulerfan::subsolution

namespace eulerfan::verifier {

/// Full quintuple of the ansatz: C_i = alpha_i^2 + beta_i^2 + eps_i +
/// eps~_i, gamma_i = C_i/2 - eps_i - beta_i^2, delta_1 = alpha_1 beta_1,
/// delta_2 = 0.
FanQuintuple lift(const subsolution::FanSubsolution& sub);

}  // namespace eulerfan::verifier
