#pragma once

#include <array>
#include <string>
#include <vector>

#include "eulerfan/gas.hpp"

namespace eulerfan::verifier {

/// Constant data of one interior wedge: density, velocity (alpha, beta),
/// traceless symmetric matrix entries (gamma on the diagonal, delta off it),
/// kinetic-energy bound C and pressure.
struct RegionState {
  double rho = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double C = 1.0;
  double p = 1.0;
};

/// Candidate certificate: three interface speeds, two interior regions and
/// the outer Riemann states. Outer wedges carry the exact-solution values
/// (U = v (x) v - |v|^2/2 I, C = |v|^2) implicitly.
struct FanQuintuple {
  GasModel gas;
  PrimState left;
  PrimState right;
  double mu0 = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  std::array<RegionState, 2> region{};
};

enum class ConditionKind {
  equation,            // |residual| <= tol * scale
  strict_inequality,   // margin > 0
  inequality           // margin >= -tol * scale
};

const char* to_string(ConditionKind k);

struct Condition {
  std::string id;
  ConditionKind kind = ConditionKind::equation;
  double value = 0.0;  // signed residual (equations) or margin (inequalities)
  double scale = 0.0;  // max |term| entering the condition
  bool pass = false;
};

struct ResidualReport {
  double tol_eq = 0.0;
  bool pass = false;
  std::vector<Condition> conditions;

  const Condition* find(const std::string& id) const;
  double max_equation_residual() const;  // normalized by scale
  double min_strict_margin() const;
  std::vector<std::string> violated() const;
};

inline constexpr double kDefaultEqTol = 1e-9;

/// Evaluates the full algebraic certificate: 4 jump equations per interface,
/// speed ordering, the two positivity conditions per interior region and the
/// entropy inequality per interface.
ResidualReport verify_subsolution(const FanQuintuple& q,
                                  double tol_eq = kDefaultEqTol);

/// Constant states separated by interface speeds (states.size() ==
/// speeds.size() + 1).
struct PiecewiseSolution {
  GasModel gas;
  std::vector<PrimState> states;
  std::vector<double> speeds;
};

/// Equality-mode verification of an exact piecewise-constant solution: jump
/// equations with U = v (x) v - |v|^2/2 I, C = |v|^2, plus the entropy jump
/// inequality at each interface.
ResidualReport verify_solution(const PiecewiseSolution& s,
                               double tol_eq = kDefaultEqTol);

}  // namespace eulerfan::verifier
