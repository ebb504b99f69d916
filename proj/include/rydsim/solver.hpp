// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rydsim/operator.hpp"

namespace rydsim {

/// Raised when an iterative eigensolver fails to reach its tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct EigenDecomposition {
  BasisTag tag;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // columns, same order
  bool complete = false;         // full spectrum vs partial (ground only)
};

inline constexpr std::size_t kDenseSpectrumLimit = 6000;

/// Lowest eigenpair. Dense below kDenseSpectrumLimit, Lanczos with full
/// reorthogonalization above. The eigenvector sign is fixed by making its
/// largest-magnitude component positive.
std::pair<double, StateVector> ground_state(const SparseOperator& h);

/// All eigenpairs, ascending. Throws for dimensions above the dense limit.
EigenDecomposition full_spectrum(const SparseOperator& h);

struct OverlapPoint {
  double energy;
  double weight;  // |<E_j|psi0>|^2
};

struct OverlapProfile {
  std::vector<OverlapPoint> points;  // sorted by energy
  std::size_t dominant_index = 0;    // index into points of the largest weight
  double dominant_energy = 0.0;
  double dominant_weight = 0.0;
  /// |E_1 - E_j| for eigenstates ranked by overlap weight (j = 2, 3, ...),
  /// where E_1 is the dominant-overlap eigenstate.
  std::vector<double> gaps(std::size_t count) const;
};

OverlapProfile overlap_profile(const StateVector& psi0, const EigenDecomposition& eig);

/// Ground state via explicitly restarted Lanczos (exposed for tests).
std::pair<double, Eigen::VectorXd> lanczos_ground(const SparseOperator& h,
                                                  double tol = 1e-10,
                                                  int max_restarts = 400);

/// Ground state via Davidson iteration with diagonal preconditioning; far
/// more robust than plain Lanczos for the diagonally dominant Hamiltonians
/// that arise at small Rabi frequency, where classical configurations are
/// nearly degenerate.
std::pair<double, Eigen::VectorXd> davidson_ground(const SparseOperator& h,
                                                   double tol = 1e-10,
                                                   int max_iters = 2000);

}  // namespace rydsim
