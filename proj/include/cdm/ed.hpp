// ed.hpp -- finite-N exact diagonalization in the truncated photon basis.
//
// States |n1, n2, mz> with mz = m + N/2 in {0..N} label the symmetric spin
// sector.  L^z = n1 - n2 + S^z commutes with H, and photon truncation keeps
// that exact: the truncated Hamiltonian is block diagonal in the integer
// sector label l = n1 - n2 + mz.  Ground states come from a deterministic
// Lanczos with full reorthogonalization; photon cutoffs are doubled until
// the energy stops moving.  This is the small-N oracle the mean-field and
// Gaussian layers are checked against.
#pragma once

#include <Eigen/SparseCore>
#include <optional>
#include <vector>

#include "cdm/meanfield.hpp"
#include "cdm/model.hpp"

namespace cdm {

struct BasisSpec {
  int n_max1 = 8;  // photon cutoff, mode 1 (occupations 0..n_max1)
  int n_max2 = 8;
  std::optional<long long> lz_sector{};  // restrict to l = n1 - n2 + mz
  long long max_dimension = 300000;      // bound on the full tensor product
};

class Basis {
 public:
  struct State {
    int n1, n2, mz;
  };

  Basis(const ModelParams& p, const BasisSpec& spec);

  long long size() const { return static_cast<long long>(states_.size()); }
  const std::vector<State>& states() const { return states_; }
  // Compressed index of |n1, n2, mz>, or -1 if outside the basis.
  long long find(int n1, int n2, int mz) const;
  // Sector label l = n1 - n2 + mz (= L^z + N/2, integer for any N).
  long long sector_of(long long i) const;

 private:
  std::vector<State> states_;
  std::vector<long long> lookup_;  // dense tensor index -> compressed
  long long d2_ = 0, dm_ = 0;
};

struct EDResult {
  double ground_energy = 0.0;  // units of omega_c
  double ground_energy_per_atom = 0.0;
  double lz_expectation = 0.0;
  double sz_expectation = 0.0;
  double photon1 = 0.0;  // <n1>
  double photon2 = 0.0;
  bool converged = false;  // cutoff-doubling loop settled
  int n_max1 = 0, n_max2 = 0;
  long long dimension = 0;
  int iterations = 0;      // Lanczos matrix-vector products, final basis
  double residual = 0.0;   // Lanczos residual of the accepted Ritz pair
};

struct SectorResult {
  long long sector = 0;
  long long dimension = 0;
  double ground_energy = 0.0;
};

namespace ed {

// Cutoff-doubling stop: |E_k - E_{k-1}| <= tol_per_atom * omega_z * N.
inline constexpr double tol_per_atom = 1e-8;

Eigen::SparseMatrix<double> build_hamiltonian(const ModelParams& p,
                                              const Basis& basis);

// Cutoffs sized from the mean-field photon occupations, floor of 8.
BasisSpec suggest_basis(const ModelParams& p, const MeanFieldSolution& mf);

struct GroundStateOptions {
  std::optional<BasisSpec> initial{};  // default: suggest_basis at the solved
                                       // mean field
  int max_doublings = 6;
};

// Ground state with automatic cutoff doubling.  Throws ResourceError when a
// doubling would exceed max_dimension; NumericalError if Lanczos stalls.
EDResult ground_state(const ModelParams& p, const GroundStateOptions& opts = {});

// Per-sector ground energies at fixed cutoffs, empty sectors skipped.
std::vector<SectorResult> sector_scan(const ModelParams& p,
                                      const BasisSpec& spec, long long l_min,
                                      long long l_max);

// <H> in the coherent product state attached to a mean-field solution;
// equals the mean-field energy N * energy_per_atom identically.
double product_state_energy(const ModelParams& p, const MeanFieldSolution& mf);

// Gaussian correction to the product-state energy:
// 1/2 (sum_k eps_k - tr A).  ED energies approach product + zero-point as N
// grows in the normal phase.
double gaussian_zero_point(const ModelParams& p, const MeanFieldSolution& mf);

}  // namespace ed
}  // namespace cdm
