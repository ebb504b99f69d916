// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace rydsim {

double entropy(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double p : eigenvalues)
    if (p > 0.0) s -= p * std::log(p);
  return s;
}

EntanglementData reduced_density_matrix(const StateVector& psi, const Basis& basis, int n_a) {
  if (psi.tag != basis.tag()) throw std::invalid_argument("state/basis tag mismatch");
  if (psi.tag.space == Space::SectorK0)
    throw std::invalid_argument("sector-compressed state: embed into the full basis first");
  const int n = basis.n();
  if (n_a < 1 || n_a >= n) throw std::invalid_argument("block size must satisfy 1 <= N_A < N");

  // scatter amplitudes into a (left pattern) x (right pattern) matrix; the
  // half-chain patterns only need to satisfy the constraint internally, the
  // cross-cut constraints are encoded in which entries are populated
  Basis left = basis.constrained() ? Basis::blockade(n_a, Boundary::OBC) : Basis::full(n_a);
  Basis right =
      basis.constrained() ? Basis::blockade(n - n_a, Boundary::OBC) : Basis::full(n - n_a);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(left.dim()),
                                              static_cast<Eigen::Index>(right.dim()));
  const Config lmask = (n_a == 32) ? ~Config{0} : ((Config{1} << n_a) - 1);
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const Complex amp = psi.amps[static_cast<Eigen::Index>(i)];
    if (amp == 0.0) continue;
    const Config s = basis.state(i);
    auto li = left.index_of(s & lmask);
    auto ri = right.index_of(s >> n_a);
    m(static_cast<Eigen::Index>(*li), static_cast<Eigen::Index>(*ri)) = amp;
  }

  // RDM spectrum from the Gram matrix of the smaller side
  Eigen::MatrixXcd gram;
  if (m.rows() <= m.cols())
    gram = m * m.adjoint();
  else
    gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);

  EntanglementData out;
  out.block_size = n_a;
  out.eigenvalues.reserve(static_cast<std::size_t>(es.eigenvalues().size()));
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    out.eigenvalues.push_back(std::max(0.0, es.eigenvalues()[k]));
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  for (double p : out.eigenvalues)
    if (p > 0.0) out.energies.push_back(-std::log(p));
  out.entropy = entropy(out.eigenvalues);
  return out;
}

Eigen::Matrix<Complex, 8, 8> three_site_rdm(const StateVector& psi, const Basis& basis,
                                            int s1, int s2, int s3) {
  if (psi.tag != basis.tag()) throw std::invalid_argument("state/basis tag mismatch");
  const int n = basis.n();
  for (int s : {s1, s2, s3})
    if (s < 1 || s > n) throw std::invalid_argument("triple site out of range");

  const Config b1 = Config{1} << (s1 - 1);
  const Config b2 = Config{1} << (s2 - 1);
  const Config b3 = Config{1} << (s3 - 1);
  const Config env_mask = ~(b1 | b2 | b3);

  // group amplitudes by environment pattern, then accumulate outer products
  std::map<Config, std::array<Complex, 8>> groups;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const Complex amp = psi.amps[static_cast<Eigen::Index>(i)];
    if (amp == 0.0) continue;
    const Config s = basis.state(i);
    const int idx = (s & b1 ? 1 : 0) | (s & b2 ? 2 : 0) | (s & b3 ? 4 : 0);
    auto& slot = groups[s & env_mask];
    slot[static_cast<std::size_t>(idx)] += amp;
  }

  Eigen::Matrix<Complex, 8, 8> rho = Eigen::Matrix<Complex, 8, 8>::Zero();
  for (const auto& [env, vec] : groups) {
    (void)env;
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) rho(a, b) += vec[a] * std::conj(vec[b]);
  }
  return rho;
}

}  // namespace rydsim
