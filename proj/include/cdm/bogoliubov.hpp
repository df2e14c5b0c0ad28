// bogoliubov.hpp -- quadratic fluctuations around the mean-field ground state.
//
// Expanding to second order in bosonic fluctuations (two photons, one
// Holstein-Primakoff spin boson) gives
//   H2 = sum_jk A_jk b_j^+ b_k + 1/2 sum_jk (B_jk b_j^+ b_k^+ + h.c.)
// with A Hermitian and B symmetric.  Excitation energies are the positive
// half of the spectrum of the dynamical matrix D = [[A, B], [-B*, -A*]],
// whose eigenvalues come in +/- pairs.  In the condensed phase one pair is
// exactly zero: the Goldstone mode of the broken U(1).
//
// Two independent routes compute the same spectrum: the 6x6 eigensolve and
// closed-form characteristic polynomials (cubic in eps^2 around the normal
// state, factored quadratic in the U = 0 condensed phase).  The dispatcher
// cross-checks them whenever both apply.
#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>

#include "cdm/meanfield.hpp"
#include "cdm/model.hpp"

namespace cdm {

struct BogoliubovMatrices {
  Eigen::Matrix3cd A;  // normal block, Hermitian
  Eigen::Matrix3cd B;  // anomalous block, symmetric
};

struct FluctuationSpectrum {
  std::array<double, 3> modes{};  // ascending; numerically-zero modes clamped to 0
  int goldstone_count = 0;        // how many modes sit in the zero bucket
  bool stable = true;             // false if any excitation grows or is complex
  double max_imag = 0.0;          // largest |Im| over non-zero-bucket eigenvalues
};

namespace bogoliubov {

// |eigenvalue| below goldstone_tol * spectral_range counts as a zero mode and
// is reported as exactly 0; Jordan-block noise on the Goldstone doublet sits
// orders of magnitude below any physical soft mode, never above it.
inline constexpr double goldstone_tol = 1e-7;
inline constexpr double pairing_tol = 1e-8;  // +/- partner residual |a + b|
inline constexpr double imag_tol = 1e-9;     // instability threshold on Im eps
inline constexpr double route_tol = 1e-10;   // matrix vs charpoly agreement

// Fluctuation blocks at the given mean field (any U, any phase; needs
// alpha3_abs2 < N).  theta enters only through gauge phases on the entries;
// the spectrum is exactly theta-independent.
BogoliubovMatrices build_matrices(const ModelParams& p,
                                  const MeanFieldSolution& mf);

Eigen::Matrix<std::complex<double>, 6, 6> dynamical_matrix(
    const BogoliubovMatrices& m);

// Route 1: eigensolve of the 6x6 dynamical matrix, +/- pairing, clamping.
FluctuationSpectrum spectrum_matrix(const ModelParams& p,
                                    const MeanFieldSolution& mf);

// Route 2a: cubic characteristic polynomial in eps^2 around x = 0.  Valid at
// any U through omega_c -> omega_c_tilde; beyond g_c it reports the
// instability of the normal state.
FluctuationSpectrum spectrum_charpoly_normal(const ModelParams& p);

// Route 2b: condensed-phase closed form, U = 0 only.  Goldstone is exact by
// construction; the gapped pair comes from a quadratic in eps^2.
FluctuationSpectrum spectrum_charpoly_superradiant(const ModelParams& p);

// Matrix route plus an automatic cross-check against whichever closed form
// applies (x = 0: normal cubic; x > 0 and U = 0: condensed closed form).
// Disagreement beyond route_tol throws NumericalError.
FluctuationSpectrum spectrum(const ModelParams& p, const MeanFieldSolution& mf);

}  // namespace bogoliubov
}  // namespace cdm
