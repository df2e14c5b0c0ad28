#include "cdm/bogoliubov.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace cdm::bogoliubov {

namespace {

using cplx = std::complex<double>;

// Roots of y^3 - c2 y^2 + c1 y - c0 (monic, real coefficients).
//
// u2, u1, u0 are the absolute uncertainties the coefficients carry from their
// formation; they set the resolution limit below which a close pair of roots
// is indistinguishable from a double root.  Three real roots (the acos
// argument of the trigonometric form inside [-1, 1]) go through that form,
// anything else through Cardano.  In both branches the closest pair is then
// collapsed onto the nearby simple root of the derivative (well conditioned
// there) when its midpoint residual sits below the coefficient noise floor,
// with the remaining root recovered from the trace.  A pair whose midpoint
// residual clears the floor is genuinely split and instead gets two Newton
// steps per root.
std::array<cplx, 3> cubic_roots(double c2, double c1, double c0,  //
                                double u2, double u1, double u0) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double p = c1 - c2 * c2 / 3.0;
  const double q = -2.0 * c2 * c2 * c2 / 27.0 + c1 * c2 / 3.0 - c0;

  const auto pval = [&](double y) { return ((y - c2) * y + c1) * y - c0; };
  const auto pder = [&](double y) { return (3.0 * y - 2.0 * c2) * y + c1; };
  // Smallest residual magnitude meaningful at y: coefficient uncertainty
  // propagated through the monomials plus the absolute-value-Horner rounding
  // of the evaluation itself.
  const auto noise = [&](double y) {
    const double a = std::abs(y);
    return (u2 * a + u1) * a + u0 +
           eps * (((a + std::abs(c2)) * a + std::abs(c1)) * a + std::abs(c0));
  };

  const auto resolve = [&](std::array<double, 3> ys) -> std::array<cplx, 3> {
    std::sort(ys.begin(), ys.end());
    const int i = (ys[1] - ys[0] <= ys[2] - ys[1]) ? 0 : 1;
    const double mid0 = 0.5 * (ys[i] + ys[i + 1]);
    if (std::abs(pval(mid0)) < 1e3 * noise(mid0)) {
      double mid = mid0;
      for (int it = 0; it < 3; ++it) {
        const double d2 = 6.0 * mid - 2.0 * c2;
        if (d2 != 0.0) mid -= pder(mid) / d2;
      }
      double other = c2 - 2.0 * mid;  // trace constraint
      for (int it = 0; it < 2; ++it) {
        const double d = pder(other);
        if (d != 0.0) other -= pval(other) / d;
      }
      ys = {mid, mid, other};
    } else {
      for (auto& y : ys)
        for (int it = 0; it < 2; ++it) {
          const double d = pder(y);
          if (d != 0.0) y -= pval(y) / d;
        }
    }
    std::sort(ys.begin(), ys.end());
    return {cplx(ys[0]), cplx(ys[1]), cplx(ys[2])};
  };

  const double raw = (p < 0.0) ? 3.0 * q / (p * 2.0 * std::sqrt(-p / 3.0))
                               : 2.0;  // p >= 0 never has three real roots
  if (std::abs(raw) <= 1.0 + 16.0 * eps) {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double ph = std::acos(std::clamp(raw, -1.0, 1.0)) / 3.0;
    std::array<double, 3> ys;
    for (int k = 0; k < 3; ++k)
      ys[k] = m * std::cos(ph - 2.0 * std::numbers::pi * k / 3.0) + c2 / 3.0;
    return resolve(ys);
  }

  // One real root plus a pair (conjugate, or real when the acos argument
  // spilled past 1 by round-off near a double root).
  const double s = std::sqrt(std::max(0.0, q * q / 4.0 + p * p * p / 27.0));
  const double w = (q >= 0.0) ? (-q / 2.0 - s) : (-q / 2.0 + s);  // larger lobe
  const double u = std::cbrt(w);
  double t = (u == 0.0) ? 0.0 : u - p / (3.0 * u);
  double y0 = t + c2 / 3.0;
  for (int it = 0; it < 2; ++it) {
    const double d = pder(y0);
    if (d != 0.0) y0 -= pval(y0) / d;
  }
  const double q1 = y0 - c2;  // deflation: y^2 + q1 y + q0
  const double q0 = c1 + y0 * q1;
  const double disc = q1 * q1 - 4.0 * q0;
  const double dfloor = 4.0 * eps * (q1 * q1 + 4.0 * std::abs(q0));
  if (disc >= -dfloor) {
    const double r = std::sqrt(std::max(0.0, disc));
    return resolve({y0, 0.5 * (-q1 - r), 0.5 * (-q1 + r)});
  }
  const double im = 0.5 * std::sqrt(-disc);
  return {cplx(y0), cplx(-0.5 * q1, im), cplx(-0.5 * q1, -im)};
}

// Common tail for the charpoly routes: eps_k = sqrt(y_k), zero bucket,
// clamping, stability from imaginary parts outside the bucket.
FluctuationSpectrum from_squared_modes(const std::array<cplx, 3>& y) {
  std::array<cplx, 3> eps;
  double scale = 0.0;
  for (int k = 0; k < 3; ++k) {
    eps[k] = std::sqrt(y[k]);
    scale = std::max(scale, std::abs(eps[k]));
  }
  FluctuationSpectrum s;
  const double zero_cut = goldstone_tol * scale;
  for (int k = 0; k < 3; ++k) {
    const double a = std::abs(eps[k]);
    if (a < zero_cut) {
      s.modes[k] = 0.0;
      ++s.goldstone_count;
    } else {
      s.modes[k] = a;
      s.max_imag = std::max(s.max_imag, std::abs(eps[k].imag()));
    }
  }
  std::sort(s.modes.begin(), s.modes.end());
  s.stable = s.max_imag <= imag_tol * std::max(1.0, scale);
  return s;
}

}  // namespace

BogoliubovMatrices build_matrices(const ModelParams& p,
                                  const MeanFieldSolution& mf) {
  const double N = static_cast<double>(p.N());
  const double x = mf.alpha3_abs2;
  if (!(x >= 0.0) || x >= N)
    throw DomainError("build_matrices: need 0 <= alpha3_abs2 < N");

  const double wz = p.omega_z();
  const double U = p.U();
  const double G = p.g_squared();
  const double d = p.omega_c_tilde() + U * x;  // dressed cavity frequency
  const double s = std::sqrt(N - x);
  const double rN = std::sqrt(N);
  const cplx e2t = std::polar(1.0, 2.0 * mf.theta);

  const auto big = [&](double gi) {
    return gi / rN * ((2.0 * N - 3.0 * x) / (2.0 * s) - U * x * s / d);
  };
  const auto small_ = [&](double gi) {
    return gi / rN * (x / (2.0 * s) + U * x * s / d);
  };

  BogoliubovMatrices m;
  m.A.setZero();
  m.B.setZero();
  m.A(0, 0) = m.A(1, 1) = d;
  m.A(2, 2) = wz + U * G * x * (N - x) / (N * d * d) +
              G * x * (4.0 * N - 3.0 * x) / (2.0 * d * N * (N - x));
  m.A(0, 2) = m.A(2, 0) = big(p.g1());
  m.A(1, 2) = -small_(p.g2()) * std::conj(e2t);
  m.A(2, 1) = std::conj(m.A(1, 2));
  m.B(0, 2) = m.B(2, 0) = -small_(p.g1()) * e2t;
  m.B(1, 2) = m.B(2, 1) = big(p.g2());
  m.B(2, 2) = (G * x * (2.0 * N - x) / (2.0 * d * N * (N - x))) * e2t;
  return m;
}

Eigen::Matrix<cplx, 6, 6> dynamical_matrix(const BogoliubovMatrices& m) {
  Eigen::Matrix<cplx, 6, 6> D;
  D.topLeftCorner<3, 3>() = m.A;
  D.topRightCorner<3, 3>() = m.B;
  D.bottomLeftCorner<3, 3>() = -m.B.conjugate();
  D.bottomRightCorner<3, 3>() = -m.A.conjugate();
  return D;
}

FluctuationSpectrum spectrum_matrix(const ModelParams& p,
                                    const MeanFieldSolution& mf) {
  const auto D = dynamical_matrix(build_matrices(p, mf));
  Eigen::ComplexEigenSolver<Eigen::Matrix<cplx, 6, 6>> es(D, false);
  if (es.info() != Eigen::Success)
    throw NumericalError("spectrum_matrix: eigensolver failed to converge");

  std::vector<cplx> lam(es.eigenvalues().data(), es.eigenvalues().data() + 6);
  double scale = 0.0;
  for (const auto& l : lam) scale = std::max(scale, std::abs(l));

  // Zero bucket first: the Goldstone doublet is a defective (Jordan) pair and
  // its eigenvalues carry ~sqrt(machine eps) noise that would defeat the
  // +/- pairing below.
  std::vector<cplx> rest;
  int in_bucket = 0;
  for (const auto& l : lam) {
    if (std::abs(l) < goldstone_tol * scale)
      ++in_bucket;
    else
      rest.push_back(l);
  }
  if (in_bucket % 2 != 0) {
    // A +/- pair straddling the clamp edge: the partners' magnitudes are
    // equal up to solver noise, one a hair inside, one outside.  Pull the
    // outside partner in; anything further out is a genuine anomaly.
    size_t nearest = rest.size();
    for (size_t k = 0; k < rest.size(); ++k)
      if (nearest == rest.size() ||
          std::abs(rest[k]) < std::abs(rest[nearest]))
        nearest = k;
    if (nearest == rest.size() ||
        std::abs(rest[nearest]) > 4.0 * goldstone_tol * scale)
      throw NumericalError("spectrum_matrix: odd zero-mode multiplicity " +
                           std::to_string(in_bucket));
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(nearest));
    ++in_bucket;
  }

  FluctuationSpectrum s;
  s.goldstone_count = in_bucket / 2;
  if (s.goldstone_count > 3)
    throw NumericalError("spectrum_matrix: too many zero modes");

  std::vector<double> modes(static_cast<size_t>(s.goldstone_count), 0.0);
  std::sort(rest.begin(), rest.end(),
            [](const cplx& a, const cplx& b) { return std::abs(a) > std::abs(b); });
  while (!rest.empty()) {
    const cplx a = rest.front();
    rest.erase(rest.begin());
    size_t best = 0;
    for (size_t k = 1; k < rest.size(); ++k)
      if (std::abs(a + rest[k]) < std::abs(a + rest[best])) best = k;
    if (rest.empty() || std::abs(a + rest[best]) > pairing_tol * std::max(1.0, scale))
      throw NumericalError("spectrum_matrix: unpaired eigenvalue");
    const cplx b = rest[best];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    modes.push_back(0.5 * (std::abs(a) + std::abs(b)));
    s.max_imag = std::max({s.max_imag, std::abs(a.imag()), std::abs(b.imag())});
  }
  if (modes.size() != 3)
    throw NumericalError("spectrum_matrix: expected three excitation modes");

  std::sort(modes.begin(), modes.end());
  std::copy(modes.begin(), modes.end(), s.modes.begin());
  s.stable = s.max_imag <= imag_tol * std::max(1.0, scale);
  return s;
}

FluctuationSpectrum spectrum_charpoly_normal(const ModelParams& p) {
  const double wz = p.omega_z();
  const double wct = p.omega_c_tilde();
  const double g1s = p.g1() * p.g1();
  const double g2s = p.g2() * p.g2();
  const double G = g1s + g2s;
  const double chi = wct * wct + g1s - g2s;
  const double del = G - wz * wct;
  const double c2 = wz * wz + 2.0 * chi;
  const double c1 = 2.0 * wz * wz * wct * wct + chi * chi - 2.0 * wz * wct * G;
  const double c0 = wct * wct * del * del;
  // Formation uncertainties: chi and del are differences, so near the
  // degeneracy line (chi -> 0) and the phase boundary (del -> 0) the
  // coefficients are far less accurate than their own magnitudes suggest.
  // The |term| sums below bound the cancelled mass.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double fchi = wct * wct + g1s + g2s;
  const double fdel = G + wz * wct;
  const double u2 = eps * (wz * wz + 2.0 * std::abs(chi) + 2.0 * fchi);
  const double u1 = eps * (2.0 * wz * wz * wct * wct + chi * chi +
                           2.0 * std::abs(chi) * fchi + 2.0 * wz * wct * G);
  const double u0 =
      eps * wct * wct * (2.0 * del * del + 2.0 * std::abs(del) * fdel);
  return from_squared_modes(cubic_roots(c2, c1, c0, u2, u1, u0));
}

FluctuationSpectrum spectrum_charpoly_superradiant(const ModelParams& p) {
  if (p.UN() != 0.0)
    throw DomainError("condensed closed form is restricted to U = 0");
  const double wz = p.omega_z();
  const double G = p.g_squared();
  if (G == 0.0 || wz / G > 1.0 + meanfield::mu_band)
    throw DomainError("condensed closed form requires g >= g_c");

  const double g1s = p.g1() * p.g1();
  const double g2s = p.g2() * p.g2();
  const double D = g1s - g2s;
  const double b = 2.0 + G * G + 2.0 * wz * D / G;
  const double R = std::max(0.0, G * G * G * G + 4.0 * wz * G * D + 4.0 * wz * wz);
  // Product of the gapped pair; dividing out eps_+^2 avoids the b - sqrt(R)
  // cancellation when the lower branch softens.
  const double c =
      (G * G * (1.0 + G * G) + 2.0 * wz * G * D - 4.0 * wz * wz * g1s * g2s) /
      (G * G);
  const double ep2 = 0.5 * (b + std::sqrt(R));
  const double em2 = std::max(0.0, c / ep2);
  return from_squared_modes({cplx(0.0), cplx(em2), cplx(ep2)});
}

FluctuationSpectrum spectrum(const ModelParams& p, const MeanFieldSolution& mf) {
  const FluctuationSpectrum s = spectrum_matrix(p, mf);

  FluctuationSpectrum ref;
  if (mf.alpha3_abs2 == 0.0)
    ref = spectrum_charpoly_normal(p);
  else if (p.UN() == 0.0)
    ref = spectrum_charpoly_superradiant(p);
  else
    return s;  // condensed at finite U: no closed form to check against

  double scale = 1.0;
  for (int k = 0; k < 3; ++k)
    scale = std::max({scale, s.modes[k], ref.modes[k]});
  for (int k = 0; k < 3; ++k)
    if (std::abs(s.modes[k] - ref.modes[k]) > route_tol * scale)
      throw NumericalError(
          "spectrum: matrix and charpoly routes disagree, mode " +
          std::to_string(k) + ": " + std::to_string(s.modes[k]) + " vs " +
          std::to_string(ref.modes[k]));
  return s;
}

}  // namespace cdm::bogoliubov
