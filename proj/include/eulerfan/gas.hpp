#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace eulerfan {

/// Invalid thermodynamic input (non-positive density/pressure, bad c_v, ...).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The wave curves cannot meet at positive pressure (states pull apart).
class vacuum_error : public domain_error {
public:
  using domain_error::domain_error;
};

/// A documented search exhausted its ladder without a feasible candidate.
class not_found_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ideal gas closure e = c_v p / rho. The single parameter c_v must exceed
/// 1/2 (two-dimensional gas, f > 1 degrees of freedom); c_v = 1/2 exactly is
/// rejected because several interior quantities carry the factor 2 c_v - 1.
class GasModel {
public:
  explicit GasModel(double c_v);

  double c_v() const { return c_v_; }
  /// Adiabatic exponent (c_v + 1) / c_v.
  double gamma() const { return (c_v_ + 1.0) / c_v_; }

private:
  double c_v_;
};

/// Primitive state (rho, u, v, p) of the gas in a region. u is the
/// x-velocity (tangential), v the y-velocity (normal to the initial jump).
struct PrimState {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

/// True iff rho, p are strictly positive (above 1e-300) and all fields finite.
bool is_valid(const PrimState& s);

/// Throws domain_error when is_valid fails; `where` names the offender.
void require_valid(const PrimState& s, const char* where = "state");

/// Specific internal energy c_v p / rho.
double internal_energy(const GasModel& g, const PrimState& s);

/// Physical entropy log(p^{c_v} / rho^{c_v+1}).
double entropy(const GasModel& g, const PrimState& s);

/// Temperature p / rho.
double temperature(const PrimState& s);

/// Sound speed sqrt(((c_v+1)/c_v) p / rho).
double sound_speed(const GasModel& g, const PrimState& s);

/// Characteristic speeds (v - c, v, v + c), strictly ordered.
std::array<double, 3> eigenvalues(const GasModel& g, const PrimState& s);

}  // namespace eulerfan
