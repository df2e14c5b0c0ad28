// meanfield.hpp -- variational ground state over coherent-state products.
//
// With both photon modes and the collective spin coherent, the energy depends
// on the spin depletion x = |alpha3|^2 in [0, N] alone (photons eliminated at
// their conditional minimum).  The normal phase sits at x = 0; beyond the
// critical coupling g_c = sqrt(omega_z * omega_c_tilde) a unique interior
// minimum appears and the cavity fields condense with one free U(1) phase.
#pragma once

#include <complex>

#include "cdm/model.hpp"

namespace cdm {

enum class Phase { Normal, Superradiant, Critical };
enum class Stability { Minimum, Maximum, Flat };

struct MeanFieldSolution {
  double alpha3_abs2 = 0.0;  // spin depletion x = |alpha3|^2, in [0, N]
  double theta = 0.0;        // condensate phase (U(1) orbit coordinate)
  std::complex<double> alpha1{0.0, 0.0};  // mode-1 amplitude, ~ sqrt(N)
  std::complex<double> alpha2{0.0, 0.0};  // mode-2 amplitude, ~ sqrt(N)
  Phase phase = Phase::Normal;
  double energy_per_atom = 0.0;  // total mean-field energy / N
  double mu_tilde = 0.0;         // omega_z*omega_c_tilde/g^2; infinite at g=0
};

namespace meanfield {

// Half-width of the band around mu_tilde = 1 reported as Phase::Critical.
inline constexpr double mu_band = 1e-12;

// Energy landscape E(x) measured from the x = 0 product state, photons
// already optimized out.  Total energy = E(x) - omega_z*N/2.
double effective_energy(const ModelParams& p, double x);

// Ground state; theta parameterizes the degenerate U(1) orbit.
MeanFieldSolution solve(const ModelParams& p, double theta = 0.0);

// g_c = sqrt(omega_z * omega_c_tilde); independent of the coupling angle.
double critical_coupling(const ModelParams& p);

// Curvature test of a -> E(a^2) at a = sqrt(x), finite differences with one
// Richardson step.  |curvature| below flat_tol (per atom) reports Flat; at
// the phase boundary the quartic landscape lands there exactly.
Stability classify_stability(const ModelParams& p, double x);
inline constexpr double flat_tol = 1e-10;

// Same solution transported along the U(1) orbit by delta_theta.
MeanFieldSolution rotated(const MeanFieldSolution& s, double delta_theta);

}  // namespace meanfield
}  // namespace cdm
