#pragma once

#include <optional>
#include <vector>

#include "eulerfan/gas.hpp"

namespace eulerfan::riemann1d {

/// Riemann data: one gas model, constant states left (y < 0) and right
/// (y > 0) of the initial discontinuity.
struct RiemannData {
  GasModel gas;
  PrimState left;
  PrimState right;
};

enum class WaveType { none, shock, rarefaction };

const char* to_string(WaveType w);

/// The two constant states adjacent to the contact: common pressure p and
/// normal velocity v; densities and tangential velocities may differ.
struct MiddleStates {
  double p = 0.0;
  double v = 0.0;
  double rho_left = 0.0;
  double rho_right = 0.0;
  double u_left = 0.0;
  double u_right = 0.0;
};

/// One of the 18 structures of the 1D self-similar solution.
struct WavePattern {
  WaveType left_wave = WaveType::none;
  bool contact = false;
  WaveType right_wave = WaveType::none;
  std::optional<MiddleStates> middle;

  /// Row id 1..18: rows 1-9 without contact, 10-18 with contact, ordered
  /// (none, shock, rarefaction) in the 1-wave (outer) and 3-wave (inner).
  int table_row() const;
};

inline constexpr double kDefaultClassifyTol = 1e-9;

/// Velocity drop across an admissible compression of family 1/3 from anchor
/// (rho_a, p_a) to pressure p > p_a:
///   (p - p_a) sqrt(2 c_v / (rho_a (p_a + (2 c_v + 1) p))).
double shock_branch(const GasModel& g, double rho_a, double p_a, double p);

/// Velocity gap across an expansion fan from anchor pressure p_a down to
/// 0 < p <= p_a:
///   2 sqrt(c_v (c_v+1)) sqrt(p_a / rho_a) (1 - (p/p_a)^{1/(2(c_v+1))}).
double rarefaction_branch(const GasModel& g, double rho_a, double p_a,
                          double p);

/// Density behind an admissible shock of pressure p > p_a:
///   rho_a ((2 c_v + 1) p + p_a) / ((2 c_v + 1) p_a + p).
double hugoniot_density(const GasModel& g, double rho_a, double p_a, double p);

/// Density at pressure p on the isentrope through (rho_a, p_a):
///   rho_a (p / p_a)^{c_v/(c_v+1)}.
double isentrope_density(const GasModel& g, double rho_a, double p_a,
                         double p);

/// Velocity change functions of the wave curves in the p-v plane:
/// v_middle = v_left - wave_curve(left anchor) = v_right + wave_curve(right
/// anchor). Shock branch above the anchor pressure, -rarefaction below.
double wave_curve(const GasModel& g, double rho_a, double p_a, double p);
double wave_curve_derivative(const GasModel& g, double rho_a, double p_a,
                             double p);

/// Star-state solve: pressure and velocity between the 1- and 3-waves plus
/// both middle densities. Throws vacuum_error when the curves cannot meet at
/// positive pressure.
MiddleStates solve_middle(const RiemannData& data);

/// Classifies the data onto one of the 18 rows, consistent with solve_middle
/// up to the relative tolerance tol.
WavePattern classify(const RiemannData& data,
                     double tol = kDefaultClassifyTol);

/// Precomputed wave locations of the self-similar solution in xi = y/t.
struct SelfSimilarProfile {
  RiemannData data;
  WavePattern pattern;
  // 1-wave: shock speed, or fan [head, tail]; meaningful per pattern.
  double sigma1 = 0.0;
  double fan1_head = 0.0, fan1_tail = 0.0;
  double contact_speed = 0.0;
  double sigma3 = 0.0;
  double fan3_tail = 0.0, fan3_head = 0.0;

  /// Leftmost/rightmost wave edge (outer states outside of these).
  double left_edge() const;
  double right_edge() const;
};

SelfSimilarProfile build_profile(const RiemannData& data,
                                 const WavePattern& pattern);

/// State of the self-similar solution at xi = y/t.
PrimState evaluate(const SelfSimilarProfile& profile, double xi);

/// Convenience wrapper: classify-consistent pointwise evaluation.
PrimState evaluate_selfsimilar(const RiemannData& data,
                               const WavePattern& pattern, double xi);

/// An actual discontinuity (shock or contact) of the self-similar solution.
struct Jump {
  PrimState left;
  PrimState right;
  double speed = 0.0;
};

/// The jump discontinuities of the solution, left to right (rarefaction fans
/// are continuous and not included).
std::vector<Jump> discontinuities(const SelfSimilarProfile& profile);

}  // namespace eulerfan::riemann1d
