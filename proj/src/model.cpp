#include "cdm/model.hpp"

#include <cmath>
#include <string>

namespace cdm {

CouplingPolar to_polar(double g1, double g2) {
  if (g1 < 0.0 || g2 < 0.0)
    throw DomainError("to_polar: couplings must be non-negative");
  CouplingPolar c;
  c.g = std::hypot(g1, g2);
  c.phi = (c.g == 0.0) ? 0.0 : std::atan2(g2, g1);
  return c;
}

std::pair<double, double> from_polar(const CouplingPolar& c) {
  if (c.g < 0.0) throw DomainError("from_polar: g must be non-negative");
  if (c.phi < 0.0 || c.phi > std::acos(-1.0) / 2.0)
    throw DomainError("from_polar: phi must lie in [0, pi/2]");
  return {c.g * std::cos(c.phi), c.g * std::sin(c.phi)};
}

ModelParams ModelParams::from(const ModelInput& in) {
  if (!std::isfinite(in.omega_c) || in.omega_c <= 0.0)
    throw InvalidParams("omega_c must be positive and finite");
  if (!std::isfinite(in.omega_z) || in.omega_z <= 0.0)
    throw InvalidParams("omega_z must be positive and finite");
  if (!std::isfinite(in.g1) || in.g1 < 0.0)
    throw InvalidParams("g1 must be non-negative and finite");
  if (!std::isfinite(in.g2) || in.g2 < 0.0)
    throw InvalidParams("g2 must be non-negative and finite");
  if (in.N < 1) throw InvalidParams("N must be a positive integer");

  ModelParams p;
  p.scale_ = in.omega_c;
  p.omega_z_ = in.omega_z / in.omega_c;
  p.g1_ = in.g1 / in.omega_c;
  p.g2_ = in.g2 / in.omega_c;
  p.N_ = in.N;

  // UN is the product U*N in input units; it overrides U when both are given.
  double UN_raw;
  if (in.UN.has_value()) {
    UN_raw = *in.UN;
  } else {
    UN_raw = in.U * static_cast<double>(in.N);
  }
  if (!std::isfinite(UN_raw)) throw InvalidParams("U*N must be finite");
  double UN_norm = UN_raw / in.omega_c;
  // Boundedness of the photon sector: 4 omega_c^2 > (U N)^2, i.e. |UN| < 2.
  // Equality already makes the mean-field energy unbounded below, so reject it.
  if (UN_norm * UN_norm >= 4.0)
    throw InvalidParams("unbounded regime: need 4*omega_c^2 > (U*N)^2, got U*N = " +
                        std::to_string(UN_raw) + " at omega_c = " +
                        std::to_string(in.omega_c));
  p.U_ = UN_norm / static_cast<double>(in.N);
  return p;
}

ModelParams ModelParams::with_couplings(double new_g1, double new_g2) const {
  if (!std::isfinite(new_g1) || new_g1 < 0.0 || !std::isfinite(new_g2) ||
      new_g2 < 0.0)
    throw InvalidParams("couplings must be non-negative and finite");
  ModelParams p = *this;
  p.g1_ = new_g1;
  p.g2_ = new_g2;
  return p;
}

ModelParams ModelParams::with_polar(double g, double phi) const {
  auto [a, b] = from_polar(CouplingPolar{g, phi});
  return with_couplings(a, b);
}

}  // namespace cdm
