// model.hpp -- parameter space and unit conventions for the chiral Dicke model.
//
// Two cavity modes with opposite circular polarization couple to N two-level
// atoms; g1 drives the co-rotating channel, g2 the counter-rotating one.  A
// dispersive shift U S^z (n1 + n2) is allowed.  Everything downstream works in
// units of the cavity frequency, so construction normalizes omega_c to 1 and
// remembers the input scale.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

namespace cdm {

// ---- error taxonomy ----
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidParams : Error {
  using Error::Error;
};  // construction guard violated
struct DomainError : Error {
  using Error::Error;
};  // operation precondition violated
struct NumericalError : Error {
  using Error::Error;
};  // solver self-check failed
struct ResourceError : Error {
  using Error::Error;
};  // basis size exceeds budget

// Couplings in polar form: g1 = g cos(phi), g2 = g sin(phi), phi in [0, pi/2].
// phi = 0 is the co-rotating (Tavis-Cummings) axis, phi = pi/2 the
// counter-rotating one, phi = pi/4 the standard Dicke point.
struct CouplingPolar {
  double g = 0.0;
  double phi = 0.0;
};

CouplingPolar to_polar(double g1, double g2);
std::pair<double, double> from_polar(const CouplingPolar& c);

// Raw inputs, arbitrary units.  UN, when set, takes precedence over U: static
// quantities depend on the dispersive shift only through the product U * N.
struct ModelInput {
  double omega_c = 1.0;        // cavity frequency; sets the unit of energy
  double omega_z = 1.0;        // atomic splitting
  double g1 = 0.0;             // co-rotating coupling
  double g2 = 0.0;             // counter-rotating coupling
  double U = 0.0;              // dispersive atom-photon shift
  std::optional<double> UN{};  // dispersive shift given as the product U*N
  long long N = 1;             // atom number
};

// Validated, non-dimensionalized parameter set (omega_c == 1).  All energies
// produced by the library are in units of the input cavity frequency;
// scale() recovers that frequency.
class ModelParams {
 public:
  static ModelParams from(const ModelInput& in);

  double omega_c() const { return 1.0; }
  double omega_z() const { return omega_z_; }
  double g1() const { return g1_; }
  double g2() const { return g2_; }
  double U() const { return U_; }
  double UN() const { return U_ * static_cast<double>(N_); }
  long long N() const { return N_; }
  double scale() const { return scale_; }  // input omega_c

  // omega_c - U N / 2; strictly positive whenever the boundedness guard
  // 4 omega_c^2 > (U N)^2 holds.
  double omega_c_tilde() const { return 1.0 - 0.5 * UN(); }
  double g_squared() const { return g1_ * g1_ + g2_ * g2_; }
  CouplingPolar polar() const { return to_polar(g1_, g2_); }

  // Rebind couplings (normalized units); revalidates.
  ModelParams with_couplings(double new_g1, double new_g2) const;
  ModelParams with_polar(double g, double phi) const;

 private:
  ModelParams() = default;
  double omega_z_ = 1.0;
  double g1_ = 0.0;
  double g2_ = 0.0;
  double U_ = 0.0;
  long long N_ = 1;
  double scale_ = 1.0;
};

}  // namespace cdm
