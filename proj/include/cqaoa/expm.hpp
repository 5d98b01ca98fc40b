#pragma once

// Krylov-subspace (Lanczos) action of e^{-i beta B} on a statevector for a
// real-symmetric operator B given only as a matvec. The operator is never
// materialized. Each step builds an orthonormal basis of
// span{v, Bv, B^2 v, ...}, exponentiates the small tridiagonal projection
// exactly, and advances; the walk time is split adaptively whenever the
// subspace cap is reached before the local error estimate meets tolerance.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cqaoa/errors.hpp"
#include "cqaoa/state.hpp"

namespace cqaoa {

struct KrylovOptions {
  double tol = 1e-10;     // 2-norm error budget for the whole walk time
  int max_dim = 64;       // Krylov subspace cap per time step
  int max_halvings = 60;  // step-size halvings per step before giving up
  int max_steps = 100000;  // hard cap on time steps per call
};

namespace detail {

inline cplx dot_c(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline void axpy_c(std::vector<cplx>& y, cplx alpha,
                   const std::vector<cplx>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

inline double nrm2_c(const std::vector<cplx>& a) {
  double s = 0.0;
  for (const cplx& v : a) s += std::norm(v);
  return std::sqrt(s);
}

// Coefficients e^{-i h T} e1 for the real symmetric tridiagonal T given by
// diag/offdiag, via exact eigendecomposition.
inline Eigen::VectorXcd tridiag_exp_e1(const std::vector<double>& diag,
                                       const std::vector<double>& offdiag,
                                       double h) {
  const int m = static_cast<int>(diag.size());
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), m);
  Eigen::VectorXd e =
      m > 1 ? Eigen::Map<const Eigen::VectorXd>(offdiag.data(), m - 1)
            : Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
  const Eigen::MatrixXd& U = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  Eigen::VectorXcd w(m);
  for (int k = 0; k < m; ++k) {
    const double ang = -h * lam(k);
    w(k) = cplx{std::cos(ang), std::sin(ang)} * U(0, k);
  }
  return U * w;
}

// Applies e^{-i beta A} to `cur` in place, where A acts through
// `apply(in, out)` on vectors of cur's length. A must be real symmetric.
template <class ApplyFn>
void krylov_apply(std::vector<cplx>& cur, double beta, ApplyFn&& apply,
                  const KrylovOptions& opts) {
  if (beta == 0.0 || cur.empty()) return;
  const std::size_t len = cur.size();
  const int m_max = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(opts.max_dim), len));
  const double abs_beta = std::abs(beta);

  double t_done = 0.0;
  double h_try = beta;
  int steps = 0;

  std::vector<std::vector<cplx>> basis;
  std::vector<double> alpha, offdiag;
  std::vector<cplx> w(len);

  while (std::abs(beta - t_done) > abs_beta * 1e-14) {
    if (++steps > opts.max_steps)
      throw numerical_error("expm_apply: time-step count exceeded", 0.0);
    int halvings = 0;
    const double remaining = beta - t_done;
    double h = std::abs(h_try) < std::abs(remaining) ? h_try : remaining;

    const double nrm = nrm2_c(cur);
    if (nrm == 0.0) return;

    basis.clear();
    alpha.clear();
    offdiag.clear();
    basis.push_back(cur);
    for (cplx& v : basis.back()) v /= nrm;

    Eigen::VectorXcd coef, prev_coef;
    double prev_h = std::numeric_limits<double>::quiet_NaN();
    bool accepted = false;

    while (!accepted) {
      const int j = static_cast<int>(alpha.size());
      apply(basis[j], w);
      if (j > 0) axpy_c(w, cplx{-offdiag[j - 1], 0.0}, basis[j - 1]);
      const double a = dot_c(basis[j], w).real();
      axpy_c(w, cplx{-a, 0.0}, basis[j]);
      alpha.push_back(a);
      // full reorthogonalization pass; keeps the small projection faithful
      for (int i = 0; i <= j; ++i) axpy_c(w, -dot_c(basis[i], w), basis[i]);
      const double b_next = nrm2_c(w);
      const int m = j + 1;

      double t_scale = b_next;
      for (double v : alpha) t_scale = std::max(t_scale, std::abs(v));
      for (double v : offdiag) t_scale = std::max(t_scale, std::abs(v));
      const bool breakdown = b_next <= 1e-13 * std::max(1.0, t_scale);
      // invariant subspace: the small exponential is exact for any h
      if (breakdown) h = remaining;

      while (true) {
        coef = tridiag_exp_e1(alpha, offdiag, h);
        if (breakdown) {
          accepted = true;
          break;
        }
        // generalized-residual estimate, cross-checked against the change
        // from the previous subspace size at the same step
        double err = nrm * b_next * std::abs(h) * std::abs(coef(m - 1));
        if (static_cast<int>(prev_coef.size()) == m - 1 && prev_h == h) {
          double d2 = std::norm(coef(m - 1));
          for (int i = 0; i + 1 < m; ++i)
            d2 += std::norm(coef(i) - prev_coef(i));
          err = std::max(err, nrm * std::sqrt(d2));
        }
        const double budget = opts.tol * std::abs(h) / abs_beta;
        if (err <= budget) {
          accepted = true;
          break;
        }
        if (m < m_max) break;  // grow the basis instead of shrinking the step
        h *= 0.5;
        if (++halvings > opts.max_halvings)
          throw numerical_error(
              "expm_apply: step splitting failed to converge", err);
      }
      prev_coef = coef;
      prev_h = h;

      if (!accepted) {
        offdiag.push_back(b_next);
        basis.push_back(w);
        for (cplx& v : basis.back()) v /= b_next;
      }
    }

    std::fill(cur.begin(), cur.end(), cplx{0.0, 0.0});
    for (std::size_t k = 0; k < alpha.size(); ++k)
      axpy_c(cur, nrm * coef(static_cast<int>(k)), basis[k]);
    t_done += h;
    h_try = 2.0 * h;
  }
}

}  // namespace detail

/// Returns e^{-i beta B} |state> to 2-norm accuracy `opts.tol`, where B is
/// the real-symmetric operator realized by `matvec(in, out)` on dense
/// amplitude arrays. When `support` is given, B must map the span of those
/// basis states into itself and the state must live there; work is then
/// confined to the listed indices and other amplitudes pass through
/// untouched.
template <class MatVec>
StateVector expm_apply(const StateVector& state, double beta, MatVec&& matvec,
                       const KrylovOptions& opts = {},
                       std::span<const std::uint64_t> support = {}) {
  StateVector out = state;
  if (beta == 0.0) return out;

  if (support.empty()) {
    auto apply = [&](const std::vector<cplx>& in, std::vector<cplx>& o) {
      matvec(in, o);
    };
    detail::krylov_apply(out.amps, beta, apply, opts);
    return out;
  }

  std::vector<cplx> cur(support.size());
  for (std::size_t i = 0; i < support.size(); ++i)
    cur[i] = state.amps[support[i]];
  std::vector<cplx> dense_in(state.dim(), cplx{0.0, 0.0});
  std::vector<cplx> dense_out(state.dim());
  auto apply = [&](const std::vector<cplx>& in, std::vector<cplx>& o) {
    for (std::size_t i = 0; i < support.size(); ++i)
      dense_in[support[i]] = in[i];
    matvec(dense_in, dense_out);
    for (std::size_t i = 0; i < support.size(); ++i)
      o[i] = dense_out[support[i]];
  };
  detail::krylov_apply(cur, beta, apply, opts);
  for (std::size_t i = 0; i < support.size(); ++i)
    out.amps[support[i]] = cur[i];
  return out;
}

}  // namespace cqaoa
