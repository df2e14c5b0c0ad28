#include "cdm/ed.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cdm/bogoliubov.hpp"

namespace cdm {

Basis::Basis(const ModelParams& p, const BasisSpec& spec) {
  if (spec.n_max1 < 0 || spec.n_max2 < 0)
    throw InvalidParams("Basis: photon cutoffs must be non-negative");
  if (spec.max_dimension < 1)
    throw InvalidParams("Basis: max_dimension must be positive");
  const long long d1 = spec.n_max1 + 1;
  d2_ = spec.n_max2 + 1;
  if (p.N() > std::numeric_limits<int>::max() - 1)
    throw ResourceError("Basis: N too large for an enumerated spin ladder");
  dm_ = p.N() + 1;
  if (dm_ > spec.max_dimension || d1 * d2_ > spec.max_dimension / dm_)
    throw ResourceError("Basis: tensor dimension " + std::to_string(d1) + "x" +
                        std::to_string(d2_) + "x" + std::to_string(dm_) +
                        " exceeds max_dimension " +
                        std::to_string(spec.max_dimension));

  lookup_.assign(static_cast<size_t>(d1 * d2_ * dm_), -1);
  const int mz_top = static_cast<int>(p.N());
  for (int n1 = 0; n1 <= spec.n_max1; ++n1)
    for (int n2 = 0; n2 <= spec.n_max2; ++n2)
      for (int mz = 0; mz <= mz_top; ++mz) {
        if (spec.lz_sector &&
            static_cast<long long>(n1) - n2 + mz != *spec.lz_sector)
          continue;
        const auto flat =
            static_cast<size_t>((n1 * d2_ + n2) * dm_ + mz);
        lookup_[flat] = static_cast<long long>(states_.size());
        states_.push_back(State{n1, n2, mz});
      }
}

long long Basis::find(int n1, int n2, int mz) const {
  if (n1 < 0 || n2 < 0 || mz < 0 || n2 >= d2_ || mz >= dm_) return -1;
  const auto flat = static_cast<size_t>((n1 * d2_ + n2) * dm_ + mz);
  if (flat >= lookup_.size()) return -1;
  return lookup_[flat];
}

long long Basis::sector_of(long long i) const {
  const State& s = states_[static_cast<size_t>(i)];
  return static_cast<long long>(s.n1) - s.n2 + s.mz;
}

namespace ed {

Eigen::SparseMatrix<double> build_hamiltonian(const ModelParams& p,
                                              const Basis& basis) {
  const double N = static_cast<double>(p.N());
  const double S = 0.5 * N;
  const double wz = p.omega_z();
  const double U = p.U();
  const double g1c = p.g1() / std::sqrt(N);
  const double g2c = p.g2() / std::sqrt(N);
  const int mz_top = static_cast<int>(p.N());

  const long long n = basis.size();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(5 * n));
  for (long long i = 0; i < n; ++i) {
    const auto& st = basis.states()[static_cast<size_t>(i)];
    const double m = st.mz - S;
    const double nph = st.n1 + st.n2;
    trip.emplace_back(i, i, nph + wz * m + U * m * nph);

    // (g1/sqrt(N)) a1 S+ and h.c.: |n1, mz> <-> |n1-1, mz+1>
    if (st.n1 >= 1 && st.mz + 1 <= mz_top) {
      const double v =
          g1c * std::sqrt(st.n1) * std::sqrt(S * (S + 1.0) - m * (m + 1.0));
      const long long j = basis.find(st.n1 - 1, st.n2, st.mz + 1);
      if (j < 0)
        throw NumericalError("build_hamiltonian: sector closure violated");
      trip.emplace_back(i, j, v);
      trip.emplace_back(j, i, v);
    }
    // (g2/sqrt(N)) a2 S- and h.c.: |n2, mz> <-> |n2-1, mz-1>
    if (st.n2 >= 1 && st.mz - 1 >= 0) {
      const double v =
          g2c * std::sqrt(st.n2) * std::sqrt(S * (S + 1.0) - m * (m - 1.0));
      const long long j = basis.find(st.n1, st.n2 - 1, st.mz - 1);
      if (j < 0)
        throw NumericalError("build_hamiltonian: sector closure violated");
      trip.emplace_back(i, j, v);
      trip.emplace_back(j, i, v);
    }
  }
  Eigen::SparseMatrix<double> H(n, n);
  H.setFromTriplets(trip.begin(), trip.end());
  return H;
}

namespace {

struct LanczosOut {
  double energy = 0.0;
  Eigen::VectorXd vec;
  int matvecs = 0;
  double residual = 0.0;
  bool ok = false;
};

// Lanczos with full reorthogonalization and thick restarts from the current
// Ritz vector.  Deterministic: no randomness anywhere in the pipeline.
LanczosOut lanczos_lowest(const Eigen::SparseMatrix<double>& H,
                          Eigen::VectorXd v, int max_subspace,
                          int max_restarts) {
  const long long n = H.rows();
  const int m = static_cast<int>(std::min<long long>(max_subspace, n));
  LanczosOut out;
  v.normalize();

  Eigen::MatrixXd V(n, m);
  Eigen::VectorXd alpha(m), beta(m);
  for (int restart = 0; restart < max_restarts; ++restart) {
    V.col(0) = v;
    double tscale = 1.0;
    int built = 0;
    Eigen::VectorXd ritz_small;
    double theta = 0.0;
    bool done = false;
    for (int j = 0; j < m; ++j) {
      Eigen::VectorXd w = H * V.col(j);
      ++out.matvecs;
      if (j > 0) w -= beta[j - 1] * V.col(j - 1);
      alpha[j] = V.col(j).dot(w);
      w -= alpha[j] * V.col(j);
      for (int pass = 0; pass < 2; ++pass) {
        Eigen::VectorXd h = V.leftCols(j + 1).transpose() * w;
        w.noalias() -= V.leftCols(j + 1) * h;
      }
      beta[j] = w.norm();
      built = j + 1;
      tscale = std::max({tscale, std::abs(alpha[j]), beta[j]});

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(alpha.head(built),
                                beta.head(std::max(0, built - 1)),
                                Eigen::ComputeEigenvectors);
      if (es.info() != Eigen::Success)
        throw NumericalError("lanczos: tridiagonal eigensolve failed");
      theta = es.eigenvalues()(0);
      ritz_small = es.eigenvectors().col(0);
      out.residual = beta[j] * std::abs(ritz_small(built - 1));

      if (out.residual <= 1e-11 * std::max(1.0, std::abs(theta))) {
        done = true;
        break;
      }
      if (beta[j] <= 1e-13 * tscale) {
        // Invariant subspace: the Ritz pair is exact within it.
        done = true;
        break;
      }
      if (j + 1 < m) V.col(j + 1) = w / beta[j];
    }
    out.energy = theta;
    out.vec = (V.leftCols(built) * ritz_small).normalized();
    if (done) {
      out.ok = true;
      return out;
    }
    v = out.vec;  // restart from the best Ritz vector so far
  }
  return out;
}

// Two deterministic starts guard against a start vector accidentally
// orthogonal to the ground state; keep whichever lands lower.
LanczosOut lowest_state(const Eigen::SparseMatrix<double>& H) {
  const long long n = H.rows();
  Eigen::VectorXd flat = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd ramp(n);
  for (long long i = 0; i < n; ++i)
    ramp[i] = 1.0 + static_cast<double>(i % 251) / 251.0;

  LanczosOut a = lanczos_lowest(H, flat, 160, 60);
  LanczosOut b = lanczos_lowest(H, ramp, 160, 60);
  b.matvecs += a.matvecs;
  a.matvecs = b.matvecs;
  if (!a.ok && !b.ok)
    throw NumericalError("lanczos: no start converged within restart budget");
  if (!a.ok) return b;
  if (!b.ok) return a;
  return (a.energy <= b.energy) ? a : b;
}

void fill_observables(const ModelParams& p, const Basis& basis,
                      const Eigen::VectorXd& psi, EDResult& out) {
  const double S = 0.5 * static_cast<double>(p.N());
  double lz = 0.0, sz = 0.0, ph1 = 0.0, ph2 = 0.0;
  for (long long i = 0; i < basis.size(); ++i) {
    const auto& st = basis.states()[static_cast<size_t>(i)];
    const double w = psi[i] * psi[i];
    const double m = st.mz - S;
    lz += w * (st.n1 - st.n2 + m);
    sz += w * m;
    ph1 += w * st.n1;
    ph2 += w * st.n2;
  }
  out.lz_expectation = lz;
  out.sz_expectation = sz;
  out.photon1 = ph1;
  out.photon2 = ph2;
}

}  // namespace

BasisSpec suggest_basis(const ModelParams&, const MeanFieldSolution& mf) {
  BasisSpec spec;
  spec.n_max1 = std::max(
      8, static_cast<int>(std::ceil(4.0 * std::norm(mf.alpha1))));
  spec.n_max2 = std::max(
      8, static_cast<int>(std::ceil(4.0 * std::norm(mf.alpha2))));
  return spec;
}

EDResult ground_state(const ModelParams& p, const GroundStateOptions& opts) {
  const auto mf = meanfield::solve(p);
  BasisSpec spec = opts.initial ? *opts.initial : suggest_basis(p, mf);
  const double N = static_cast<double>(p.N());
  const double tol = tol_per_atom * p.omega_z() * N;

  EDResult out;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0; k <= opts.max_doublings; ++k) {
    Basis basis(p, spec);
    const auto H = build_hamiltonian(p, basis);
    const auto r = lowest_state(H);
    out.ground_energy = r.energy;
    out.ground_energy_per_atom = r.energy / N;
    out.n_max1 = spec.n_max1;
    out.n_max2 = spec.n_max2;
    out.dimension = basis.size();
    out.iterations = r.matvecs;
    out.residual = r.residual;
    fill_observables(p, basis, r.vec, out);
    if (!std::isnan(prev) && std::abs(r.energy - prev) <= tol) {
      out.converged = true;
      return out;
    }
    prev = r.energy;
    spec.n_max1 *= 2;
    spec.n_max2 *= 2;
  }
  out.converged = false;
  return out;
}

std::vector<SectorResult> sector_scan(const ModelParams& p,
                                      const BasisSpec& spec, long long l_min,
                                      long long l_max) {
  if (l_min > l_max) throw DomainError("sector_scan: l_min > l_max");
  std::vector<SectorResult> out;
  for (long long l = l_min; l <= l_max; ++l) {
    BasisSpec s = spec;
    s.lz_sector = l;
    Basis basis(p, s);
    if (basis.size() == 0) continue;
    const auto H = build_hamiltonian(p, basis);
    const auto r = lowest_state(H);
    out.push_back(SectorResult{l, basis.size(), r.energy});
  }
  return out;
}

double product_state_energy(const ModelParams& p,
                            const MeanFieldSolution& mf) {
  // Gauge to theta = 0; the energy is constant along the U(1) orbit.
  const auto s = meanfield::rotated(mf, -mf.theta);
  const double N = static_cast<double>(p.N());
  const double x = s.alpha3_abs2;
  const double nph = std::norm(s.alpha1) + std::norm(s.alpha2);
  const double szv = x - 0.5 * N;
  return nph + (p.omega_z() + p.U() * nph) * szv +
         2.0 * std::sqrt(x * (N - x)) *
             (p.g1() * s.alpha1.real() + p.g2() * s.alpha2.real()) /
             std::sqrt(N);
}

double gaussian_zero_point(const ModelParams& p, const MeanFieldSolution& mf) {
  const auto mats = bogoliubov::build_matrices(p, mf);
  const auto spec = bogoliubov::spectrum(p, mf);
  const double tr = mats.A.trace().real();
  return 0.5 * (spec.modes[0] + spec.modes[1] + spec.modes[2] - tr);
}

}  // namespace ed
}  // namespace cdm
