// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/solver.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

namespace rydsim {

namespace {

void fix_sign(Eigen::VectorXd& v) {
  Eigen::Index best = 0;
  double mag = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > mag) {
      mag = std::abs(v[i]);
      best = i;
    }
  }
  if (v[best] < 0.0) v = -v;
}

}  // namespace

std::pair<double, Eigen::VectorXd> lanczos_ground(const SparseOperator& h, double tol,
                                                  int max_restarts) {
  const Eigen::Index dim = static_cast<Eigen::Index>(h.dim());
  if (dim == 1) return {h.diagonal(0), Eigen::VectorXd::Ones(1)};

  const int block = std::min<Eigen::Index>(dim, 40);
  // deterministic start: a fixed pseudo-random pattern, no RNG state involved
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    v[i] = 1.0 + 0.37 * std::sin(0.7 * double(i + 1)) + 0.11 * std::cos(2.3 * double(i + 1));
  v.normalize();

  double theta = 0.0;
  double resid = std::numeric_limits<double>::infinity();
  const double scale = std::max(h.norm_scale(), 1.0);

  for (int restart = 0; restart < max_restarts; ++restart) {
    std::vector<Eigen::VectorXd> basis;
    basis.reserve(block);
    Eigen::VectorXd alpha(block), beta(block);
    basis.push_back(v);
    int m = 0;
    Eigen::VectorXd w;
    for (int j = 0; j < block; ++j) {
      h.apply(basis[j], w);
      alpha[j] = basis[j].dot(w);
      w -= alpha[j] * basis[j];
      if (j > 0) w -= beta[j - 1] * basis[j - 1];
      for (int pass = 0; pass < 2; ++pass)  // full reorthogonalization
        for (const auto& b : basis) w -= b.dot(w) * b;
      m = j + 1;
      beta[j] = w.norm();
      if (beta[j] < 1e-13 * scale) break;  // invariant subspace reached
      if (j + 1 < block) basis.push_back(w / beta[j]);
    }

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j) {
      t(j, j) = alpha[j];
      if (j + 1 < m) t(j, j + 1) = t(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    theta = es.eigenvalues()[0];
    Eigen::VectorXd y = es.eigenvectors().col(0);
    Eigen::VectorXd ritz = Eigen::VectorXd::Zero(dim);
    for (int j = 0; j < m; ++j) ritz += y[j] * basis[j];
    ritz.normalize();

    h.apply(ritz, w);
    resid = (w - theta * ritz).norm();
    v = ritz;
    if (resid < tol * scale) return {theta, v};
  }
  throw SolverError("Lanczos ground state did not converge; residual " + std::to_string(resid),
                    resid);
}

std::pair<double, Eigen::VectorXd> davidson_ground(const SparseOperator& h, double tol,
                                                   int max_iters) {
  const Eigen::Index dim = static_cast<Eigen::Index>(h.dim());
  if (dim == 1) return {h.diagonal(0), Eigen::VectorXd::Ones(1)};

  Eigen::VectorXd diag(dim);
  for (Eigen::Index i = 0; i < dim; ++i) diag[i] = h.diagonal(static_cast<std::size_t>(i));
  const double scale = std::max(h.norm_scale(), 1.0);

  // seed with the lowest-diagonal configurations plus a flat vector so the
  // search subspace spans quasi-degenerate classical minima from the start
  std::vector<Eigen::Index> order(dim);
  for (Eigen::Index i = 0; i < dim; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return diag[a] != diag[b] ? diag[a] < diag[b] : a < b;
  });

  const int max_space = static_cast<int>(std::min<Eigen::Index>(dim, 96));
  const int keep = static_cast<int>(std::min<Eigen::Index>(dim, 10));
  std::vector<Eigen::VectorXd> basis;
  basis.reserve(max_space);
  auto push_orthonormal = [&](Eigen::VectorXd v) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b.dot(v) * b;
    const double n = v.norm();
    if (n < 1e-10) return false;
    basis.push_back(v / n);
    return true;
  };
  for (int s = 0; s < keep && static_cast<Eigen::Index>(s) < dim; ++s) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e[order[static_cast<std::size_t>(s)]] = 1.0;
    push_orthonormal(std::move(e));
  }
  push_orthonormal(Eigen::VectorXd::Ones(dim));

  std::vector<Eigen::VectorXd> hbasis;
  hbasis.reserve(max_space);
  Eigen::VectorXd tmp;
  for (const auto& b : basis) {
    h.apply(b, tmp);
    hbasis.push_back(tmp);
  }

  double theta = 0.0;
  Eigen::VectorXd x, hx;
  for (int iter = 0; iter < max_iters; ++iter) {
    const int m = static_cast<int>(basis.size());
    Eigen::MatrixXd proj(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) proj(i, j) = proj(j, i) = basis[i].dot(hbasis[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(proj);
    theta = es.eigenvalues()[0];
    Eigen::VectorXd y = es.eigenvectors().col(0);

    x = Eigen::VectorXd::Zero(dim);
    for (int j = 0; j < m; ++j) x += y[j] * basis[j];
    x.normalize();
    h.apply(x, hx);
    Eigen::VectorXd resid = hx - theta * x;
    if (resid.norm() < tol * scale) {
      fix_sign(x);
      return {theta, x};
    }

    // thick restart when the subspace is full
    if (m >= max_space) {
      std::vector<Eigen::VectorXd> nb, nhb;
      for (int k = 0; k < keep; ++k) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
        for (int j = 0; j < m; ++j) v += es.eigenvectors()(j, k) * basis[j];
        nb.push_back(v);
        h.apply(v, tmp);
        nhb.push_back(tmp);
      }
      basis = std::move(nb);
      hbasis = std::move(nhb);
    }

    // diagonal (Davidson) preconditioner
    Eigen::VectorXd t(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      double denom = diag[i] - theta;
      if (std::abs(denom) < 1e-6 * scale) denom = (denom < 0 ? -1.0 : 1.0) * 1e-6 * scale;
      t[i] = resid[i] / denom;
    }
    if (!push_orthonormal(std::move(t))) {
      // preconditioned residual already in the span: fall back to the raw one
      if (!push_orthonormal(resid)) {
        fix_sign(x);
        return {theta, x};  // stagnation at numerical exhaustion of the space
      }
    }
    h.apply(basis.back(), tmp);
    hbasis.push_back(tmp);
  }
  Eigen::VectorXd resid = hx - theta * x;
  throw SolverError("Davidson ground state did not converge; residual " +
                        std::to_string(resid.norm()),
                    resid.norm());
}

std::pair<double, StateVector> ground_state(const SparseOperator& h) {
  const std::size_t dim = h.dim();
  double energy;
  Eigen::VectorXd vec;
  if (dim <= 512) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.to_dense());
    energy = es.eigenvalues()[0];
    vec = es.eigenvectors().col(0);
  } else {
    std::tie(energy, vec) = davidson_ground(h);
  }
  fix_sign(vec);
  StateVector psi{h.tag(), vec.cast<Complex>()};
  return {energy, psi};
}

EigenDecomposition full_spectrum(const SparseOperator& h) {
  if (h.dim() > kDenseSpectrumLimit)
    throw std::invalid_argument(
        "dimension " + std::to_string(h.dim()) +
        " exceeds the dense full-spectrum limit; use ground_state or a partial solver");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.to_dense());
  EigenDecomposition out;
  out.tag = h.tag();
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();
  out.complete = true;
  return out;
}

std::vector<double> OverlapProfile::gaps(std::size_t count) const {
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a].weight > points[b].weight; });
  std::vector<double> out;
  const double e1 = points[order[0]].energy;
  for (std::size_t r = 1; r < order.size() && out.size() < count; ++r)
    out.push_back(std::abs(e1 - points[order[r]].energy));
  return out;
}

OverlapProfile overlap_profile(const StateVector& psi0, const EigenDecomposition& eig) {
  if (psi0.tag != eig.tag)
    throw std::invalid_argument("state and decomposition live on different spaces");
  OverlapProfile prof;
  prof.points.resize(static_cast<std::size_t>(eig.eigenvalues.size()));
  Eigen::VectorXcd proj = eig.eigenvectors.transpose().cast<Complex>() * psi0.amps;
  for (Eigen::Index j = 0; j < eig.eigenvalues.size(); ++j) {
    prof.points[static_cast<std::size_t>(j)] = {eig.eigenvalues[j], std::norm(proj[j])};
    if (prof.points[static_cast<std::size_t>(j)].weight > prof.dominant_weight) {
      prof.dominant_weight = prof.points[static_cast<std::size_t>(j)].weight;
      prof.dominant_energy = eig.eigenvalues[j];
      prof.dominant_index = static_cast<std::size_t>(j);
    }
  }
  return prof;
}

}  // namespace rydsim
