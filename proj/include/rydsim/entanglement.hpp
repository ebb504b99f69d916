// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rydsim/operator.hpp"

namespace rydsim {

/// Schmidt data for a contiguous bipartition A = sites 1..block_size.
struct EntanglementData {
  int block_size = 0;
  std::vector<double> eigenvalues;   // RDM spectrum, descending, sums to 1
  std::vector<double> energies;      // -ln rho_k for rho_k > 0
  double entropy = 0.0;              // von Neumann, natural log
};

/// Schmidt decomposition across sites (1..n_a | n_a+1..N). The state must
/// live on a full or constrained basis (embed sector states first). For the
/// periodic chain this is the two-boundary contiguous-arc cut.
EntanglementData reduced_density_matrix(const StateVector& psi, const Basis& basis, int n_a);

/// -sum rho ln rho with 0 ln 0 = 0.
double entropy(const std::vector<double>& eigenvalues);

/// Three-site reduced density matrix over the given (1-based) sites;
/// basis order: site indices map to qubits 0,1,2 (LSB first).
Eigen::Matrix<Complex, 8, 8> three_site_rdm(const StateVector& psi, const Basis& basis,
                                            int s1, int s2, int s3);

}  // namespace rydsim
