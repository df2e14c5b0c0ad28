// criticality.hpp -- soft-mode scaling at the superradiant transition.
//
// Along the critical line g = g_c the lower polariton closes linearly in
// |g - g_c| for generic coupling angles, but at the special angle where
// cos(2 phi) = -omega_c_tilde/omega_z the linear term's amplitude vanishes
// and the closing turns into a square root: two universality classes on one
// critical line.  This module provides the analytic amplitudes and a log-log
// fitting harness that measures the exponent from computed spectra.
#pragma once

#include <optional>

#include "cdm/model.hpp"

namespace cdm {

enum class ApproachSide { FromNormal, FromSuperradiant };

struct FitWindow {
  double lo = 1e-4;  // relative distance |g - g_c|/g_c, lower edge
  double hi = 1e-2;  // upper edge; keep well under the crossover scale
  int points = 40;   // log-spaced samples
};

struct CriticalFit {
  double z_nu = 0.0;       // fitted exponent of eps ~ |g - g_c|^{z nu}
  double prefactor = 0.0;  // fitted amplitude at |g - g_c| = 1
  double r_squared = 0.0;
  FitWindow window{};
  ApproachSide side = ApproachSide::FromNormal;
  bool poor_fit = false;  // r_squared < 0.999: window straddles a crossover
};

namespace criticality {

// Linear-class amplitude: eps ~ slope * |g - g_c|.  Diverges at the
// degeneracy angle, where the linear class gives way; throws DomainError
// within denominator_tol of it.
double analytic_slope(const ModelParams& p, double phi);
inline constexpr double denominator_tol = 1e-9;

// Square-root-class amplitude at the degeneracy angle:
// eps ~ prefactor * sqrt(|g - g_c|).
double analytic_sqrt_prefactor(const ModelParams& p);

// Angle where the two photon branches degenerate on the critical line,
// cos(2 phi) = -omega_c_tilde/omega_z; empty when omega_z < omega_c_tilde.
std::optional<double> degeneracy_angle(const ModelParams& p);

// Least-squares exponent in ln eps = z_nu ln|g - g_c| + ln prefactor over a
// log-spaced window approaching g_c from the chosen side.  Uses the full
// cross-checked spectrum at each point; picks the lowest mode from the normal
// side and the lowest non-Goldstone mode from the condensed side.  Throws
// DomainError when the tracked branch does not actually vanish.
CriticalFit fit_exponent(const ModelParams& p, double phi, ApproachSide side,
                         FitWindow window = {});

}  // namespace criticality
}  // namespace cdm
