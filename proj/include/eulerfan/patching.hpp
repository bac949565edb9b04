#pragma once

#include <optional>

#include "eulerfan/riemann1d.hpp"
#include "eulerfan/subsolution.hpp"

namespace eulerfan::patching {

/// Record of the exact transforms taking the original data to the working
/// frame: optional reflection (swap sides, negate velocities) followed by a
/// velocity shift making the right state rest.
struct Normalization {
  riemann1d::RiemannData original;
  riemann1d::RiemannData normalized;
  bool reflected = false;
  double shift_u = 0.0;  // the shift a applied: v_normalized = v + a
  double shift_v = 0.0;
  bool equal_pressures = false;  // p_- = p_+ within tolerance, no useful frame
};

/// Adds the velocity a = (au, av) everywhere; a pure change of inertial
/// frame, interface speeds move by av.
riemann1d::RiemannData galilean_shift(const riemann1d::RiemannData& data,
                                      double au, double av);
PrimState galilean_shift(const PrimState& s, double au, double av);

/// Mirror x -> -x: sides swap and velocities negate; 1- and 3-waves trade
/// places.
riemann1d::RiemannData reflect(const riemann1d::RiemannData& data);

/// Reflect when p_- > p_+, then shift the right state to rest.
Normalization normalize(const riemann1d::RiemannData& data,
                        double tol = riemann1d::kDefaultClassifyTol);

/// Exact inverse of normalize (reconstructs the original data).
riemann1d::RiemannData denormalize(const Normalization& n);

enum class CaseId {
  unique_1d,        // no shock in the self-similar solution
  fan_only,         // single shock + rarefaction, velocity inside the window
  fan_rarefaction,  // single shock + rarefaction, below the window
  fan_shock,        // single shock, no rarefaction
  two_shocks,       // verification-only (construction out of scope)
  contact_open      // contact without shock: open problem, nothing built
};

const char* to_string(CaseId c);

struct CaseDecision {
  CaseId id;
  riemann1d::WavePattern pattern;
  std::optional<subsolution::SmallnessWindow> window;  // when consulted
};

/// Maps normalized data onto the construction case. The fan_only /
/// fan_rarefaction boundary uses the empirical window estimate.
CaseDecision case_dispatch(const riemann1d::RiemannData& normalized,
                           const subsolution::SearchConfig& cfg = {});

/// Auxiliary state a pressure step delta above the middle pressure, joined
/// to the right state by a 3-rarefaction. Requires 0 < delta < p_+ - p_M.
PrimState rarefaction_aux_state(const riemann1d::RiemannData& normalized,
                                double delta);

/// Auxiliary state a pressure step delta above p_+, joined to the right
/// state by an admissible 3-shock.
PrimState shock_aux_state(const riemann1d::RiemannData& normalized,
                          double delta);

struct TrailingWave {
  enum class Kind { none, rarefaction, shock } kind = Kind::none;
  PrimState left;     // aux state at rest (delta-shifted frame)
  PrimState right;    // right state in the delta-shifted frame
  double speed = 0.0; // shock speed, or the fan's left edge for rarefactions
};

struct DeltaLadder {
  double delta0_frac = 0.1;
  int max_halvings = 40;
};

/// Composite certificate: fan subsolution left of xi = 0 plus the trailing
/// exact 3-wave, all in the delta-shifted normalized frame, with the
/// transforms recorded so the object describes the original data.
struct PatchedSolution {
  CaseId case_id = CaseId::fan_only;
  Normalization norm;
  double delta = 0.0;
  double shift_v_delta = 0.0;            // extra shift applied on top of norm
  std::optional<PrimState> aux;          // normalized frame, absent for fan_only
  subsolution::FindResult fan;
  TrailingWave trailing;
  double compatibility_margin = 0.0;     // lambda_3(aux at rest) or sigma
};

/// Normalizes, dispatches and builds the composite. Throws not_found_error
/// for cases outside the constructive scope or when the delta ladder fails.
PatchedSolution assemble(const riemann1d::RiemannData& data,
                         const subsolution::SearchConfig& cfg = {},
                         const DeltaLadder& ladder = {});

}  // namespace eulerfan::patching
