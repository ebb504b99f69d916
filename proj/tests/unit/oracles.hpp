// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference implementations used only by tests. Everything here
// deliberately avoids the library's own code paths for the quantity it
// checks.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "rydsim/basis.hpp"

namespace oracles {

/// All n-bit patterns with no two adjacent bits set, by direct 2^n filter.
std::vector<rydsim::Config> brute_force_basis(int n, rydsim::Boundary boundary);

/// Fibonacci with F(1) = F(2) = 1.
std::uint64_t fibonacci(int k);
/// Lucas with L(1) = 1, L(2) = 3.
std::uint64_t lucas(int k);

/// exp(-i H t) psi via dense eigendecomposition.
Eigen::VectorXcd dense_expm_apply(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi,
                                  double t);

/// Interaction-distance objective computed from scratch: free probabilities
/// exp(-sum n_l eps_l)/Z, rank matching against the descending target.
double df_objective(const std::vector<double>& target_desc, const std::vector<double>& eps);

/// Exhaustive grid search over eps in [lo, hi]^m at `step`, followed by
/// successive local grid refinements around the minimizer. m <= 3.
double df_grid_minimum(const std::vector<double>& target_desc, int m, double lo = -12.0,
                       double hi = 12.0, double step = 0.05, int refine_rounds = 6);

}  // namespace oracles
