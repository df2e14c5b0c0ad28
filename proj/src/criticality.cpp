#include "cdm/criticality.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cdm/bogoliubov.hpp"
#include "cdm/meanfield.hpp"

namespace cdm::criticality {

double analytic_slope(const ModelParams& p, double phi) {
  const double W = p.omega_c_tilde() + std::cos(2.0 * phi) * p.omega_z();
  if (std::abs(W) < denominator_tol)
    throw DomainError(
        "analytic_slope: linear amplitude diverges at the degeneracy angle");
  return 2.0 * meanfield::critical_coupling(p) / std::abs(W);
}

double analytic_sqrt_prefactor(const ModelParams& p) {
  return std::sqrt(2.0) * p.omega_c_tilde() /
         std::sqrt(meanfield::critical_coupling(p));
}

std::optional<double> degeneracy_angle(const ModelParams& p) {
  const double r = p.omega_c_tilde() / p.omega_z();
  if (r > 1.0) return std::nullopt;
  return 0.5 * std::acos(-r);
}

CriticalFit fit_exponent(const ModelParams& p, double phi, ApproachSide side,
                         FitWindow window) {
  if (!(window.lo > 0.0) || !(window.hi > window.lo))
    throw DomainError("fit_exponent: need 0 < lo < hi");
  if (side == ApproachSide::FromNormal && window.hi >= 1.0)
    throw DomainError("fit_exponent: normal-side window must keep g positive");
  if (window.points < 3)
    throw DomainError("fit_exponent: need at least 3 points");

  const double gc = meanfield::critical_coupling(p);
  const double sgn = (side == ApproachSide::FromNormal) ? -1.0 : 1.0;
  const double llo = std::log(window.lo);
  const double lhi = std::log(window.hi);

  std::vector<double> lx, ly;
  lx.reserve(static_cast<size_t>(window.points));
  ly.reserve(static_cast<size_t>(window.points));
  double eps_first = 0.0, eps_last = 0.0;
  for (int k = 0; k < window.points; ++k) {
    const double t = (window.points == 1)
                         ? 0.0
                         : static_cast<double>(k) / (window.points - 1);
    const double d = std::exp(llo + (lhi - llo) * t);
    const auto pk = p.with_polar(gc * (1.0 + sgn * d), phi);
    const auto mf = meanfield::solve(pk);
    const auto spec = bogoliubov::spectrum(pk, mf);
    const double eps = (side == ApproachSide::FromNormal)
                           ? spec.modes[0]
                           : spec.modes[static_cast<size_t>(
                                 std::min(spec.goldstone_count, 2))];
    if (!(eps > 0.0))
      throw NumericalError(
          "fit_exponent: tracked mode vanished inside the window at distance " +
          std::to_string(d));
    if (k == 0) eps_first = eps;
    eps_last = eps;
    lx.push_back(std::log(gc * d));
    ly.push_back(std::log(eps));
  }

  // The tracked branch must actually close toward g_c; from the condensed
  // side only the degeneracy angle has one.
  if (!(eps_first < 0.5 * eps_last))
    throw DomainError(
        "fit_exponent: tracked branch does not vanish toward g_c from this "
        "side at this angle");

  const auto n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (size_t k = 0; k < lx.size(); ++k) {
    mx += lx[k];
    my += ly[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t k = 0; k < lx.size(); ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxy += (lx[k] - mx) * (ly[k] - my);
    syy += (ly[k] - my) * (ly[k] - my);
  }

  CriticalFit fit;
  fit.window = window;
  fit.side = side;
  fit.z_nu = sxy / sxx;
  fit.prefactor = std::exp(my - fit.z_nu * mx);
  fit.r_squared = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  fit.poor_fit = fit.r_squared < 0.999;
  return fit;
}

}  // namespace cdm::criticality
