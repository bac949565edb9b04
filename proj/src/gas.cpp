#include "eulerfan/gas.hpp"

#include <cmath>

namespace eulerfan {

namespace {
constexpr double kPositivityFloor = 1e-300;
}

GasModel::GasModel(double c_v) : c_v_(c_v) {
  if (!std::isfinite(c_v) || c_v <= 0.5) {
    throw domain_error("GasModel: c_v must be finite and > 1/2, got " +
                       std::to_string(c_v));
  }
}

bool is_valid(const PrimState& s) {
  return std::isfinite(s.rho) && std::isfinite(s.u) && std::isfinite(s.v) &&
         std::isfinite(s.p) && s.rho > kPositivityFloor &&
         s.p > kPositivityFloor;
}

void require_valid(const PrimState& s, const char* where) {
  if (!is_valid(s)) {
    throw domain_error(std::string(where) +
                       ": state requires finite fields and rho, p > 0 (rho=" +
                       std::to_string(s.rho) + ", p=" + std::to_string(s.p) +
                       ")");
  }
}

double internal_energy(const GasModel& g, const PrimState& s) {
  require_valid(s, "internal_energy");
  return g.c_v() * s.p / s.rho;
}

double entropy(const GasModel& g, const PrimState& s) {
  require_valid(s, "entropy");
  return g.c_v() * std::log(s.p) - (g.c_v() + 1.0) * std::log(s.rho);
}

double temperature(const PrimState& s) {
  require_valid(s, "temperature");
  return s.p / s.rho;
}

double sound_speed(const GasModel& g, const PrimState& s) {
  require_valid(s, "sound_speed");
  return std::sqrt(g.gamma() * s.p / s.rho);
}

std::array<double, 3> eigenvalues(const GasModel& g, const PrimState& s) {
  const double c = sound_speed(g, s);
  return {s.v - c, s.v, s.v + c};
}

}  // namespace eulerfan
