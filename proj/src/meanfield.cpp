#include "cdm/meanfield.hpp"

#include <cmath>
#include <limits>

namespace cdm::meanfield {

namespace {

// Intensive landscape e(y) = E(N y)/N with y = x/N in [0, 1].  All factors
// stay O(1), which keeps the finite-difference curvature test well scaled.
double energy_per_atom_at(const ModelParams& p, double y) {
  const double G = p.g_squared();
  const double d = p.omega_c_tilde() + p.UN() * y;
  return p.omega_z() * y - G * y * (1.0 - y) / d;
}

}  // namespace

double effective_energy(const ModelParams& p, double x) {
  const double N = static_cast<double>(p.N());
  if (!(x >= 0.0) || x > N)
    throw DomainError("effective_energy: x must lie in [0, N]");
  return N * energy_per_atom_at(p, x / N);
}

double critical_coupling(const ModelParams& p) {
  return std::sqrt(p.omega_z() * p.omega_c_tilde());
}

MeanFieldSolution solve(const ModelParams& p, double theta) {
  const double N = static_cast<double>(p.N());
  const double G = p.g_squared();
  const double wct = p.omega_c_tilde();
  const double UN = p.UN();

  MeanFieldSolution s;
  s.theta = theta;
  s.mu_tilde = (G == 0.0) ? std::numeric_limits<double>::infinity()
                          : p.omega_z() * wct / G;

  if (s.mu_tilde >= 1.0 - mu_band) {
    // x = 0 is the minimum (or the inflection at the boundary itself).
    s.phase = (s.mu_tilde <= 1.0 + mu_band) ? Phase::Critical : Phase::Normal;
    s.energy_per_atom = -0.5 * p.omega_z();
    return s;
  }

  s.phase = Phase::Superradiant;
  const double mu = s.mu_tilde;
  // Stationarity gives U x^2 + 2 omega_c_tilde x = omega_c_tilde^2 N (1-mu)/K
  // with K = omega_c_tilde + mu U N.  Written via the ratio
  // R = (omega_c_tilde + U N)/K the positive root is division-safe at U = 0:
  //   x = omega_c_tilde N (1-mu) / (K (sqrt(R)+1)).
  const double K = wct + mu * UN;
  const double R = (wct + UN) / K;
  const double x = wct * N * (1.0 - mu) / (K * (std::sqrt(R) + 1.0));
  s.alpha3_abs2 = x;

  const double d = wct + p.U() * x;
  const double amp = std::sqrt(x) * std::sqrt(1.0 - x / N) / d;
  const std::complex<double> ph = std::polar(1.0, theta);
  s.alpha1 = -p.g1() * amp * ph;
  s.alpha2 = -p.g2() * amp * std::conj(ph);
  s.energy_per_atom = energy_per_atom_at(p, x / N) - 0.5 * p.omega_z();
  return s;
}

Stability classify_stability(const ModelParams& p, double x) {
  const double N = static_cast<double>(p.N());
  if (!(x >= 0.0) || x > N)
    throw DomainError("classify_stability: x must lie in [0, N]");
  const double a0 = std::sqrt(x / N);
  const auto f = [&](double a) { return energy_per_atom_at(p, a * a); };

  // Centered second difference at two steps.  Richardson removes the h^2
  // error term, so the quartic landscape at the boundary reads as zero to
  // round-off instead of leaking an O(h^2) false curvature.
  const double h = 1e-3 * std::max(1.0, a0);
  const auto d2 = [&](double step) {
    return (f(a0 + step) - 2.0 * f(a0) + f(a0 - step)) / (step * step);
  };
  const double curv = (4.0 * d2(0.5 * h) - d2(h)) / 3.0;

  if (std::abs(curv) < flat_tol) return Stability::Flat;
  return curv > 0.0 ? Stability::Minimum : Stability::Maximum;
}

MeanFieldSolution rotated(const MeanFieldSolution& s, double delta_theta) {
  MeanFieldSolution r = s;
  const std::complex<double> ph = std::polar(1.0, delta_theta);
  r.theta = s.theta + delta_theta;
  r.alpha1 = s.alpha1 * ph;
  r.alpha2 = s.alpha2 * std::conj(ph);
  return r;
}

}  // namespace cdm::meanfield
