// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>

#include "rydsim/model.hpp"
#include "rydsim/operator.hpp"

namespace rydsim {

// Spin convention used throughout: |1> = excited, n = |1><1|, sigma^z = 2n-1,
// sigma^+ = |1><0|, sigma^- = |0><1|.

/// Constrained-space Hamiltonian: sum_i -Omega P_{i-1} sigma^x_i P_{i+1}
/// + U n_i + V n_i n_{i+2}, plus any impurity terms eps n_site. Open chains
/// use one-sided boundary flips (sigma^x_1 P_2 and P_{N-1} sigma^x_N).
SparseOperator build_uv_hamiltonian(const ModelSpec& spec, const Basis& basis);
SparseOperator build_uv_hamiltonian(const ModelSpec& spec, const MomentumSector& sector);

/// Large-|V| effective Hamiltonian: -sum_i [ P_{i-2} P_{i-1} sigma^x_i
/// P_{i+1} P_{i+2} + |U| n_i ].
SparseOperator build_effective_hamiltonian(const ModelSpec& spec, const Basis& basis);
SparseOperator build_effective_hamiltonian(const ModelSpec& spec, const MomentumSector& sector);

/// Full Rydberg chain on the unconstrained 2^N space:
///   H = -(Omega/2) sum_i sigma^x_i - U sum_i n_i + V sum_{i<j} n_i n_j / d_ij^6,
/// d_ij = |i + delta_i - j - delta_j| on an open chain. N <= 14.
SparseOperator build_longrange_hamiltonian(const ModelSpec& spec, int n);

/// Density-wave superpositions of Eqs. for the ordered phases.
StateVector z2_state(int n, const Basis& basis);
StateVector z3_state(int n, const Basis& basis);

/// StateVector wrappers around sector embedding/projection.
StateVector to_sector(const StateVector& full, const MomentumSector& sector, const Basis& basis);
StateVector to_full(const StateVector& sector_state, const MomentumSector& sector, const Basis& basis);

// Observables over a tagged basis.
SparseOperator density_op(int site, const Basis& basis);
SparseOperator nn_pair_op(int site, const Basis& basis);   // n_i n_{i+2}
SparseOperator nn_total_op(const Basis& basis);            // H^nn = sum_i n_i n_{i+2}
SparseOperator zz_correlator_op(int site, const Basis& basis);  // sigma^z_i sigma^z_{i+1}
/// Custom string of real symmetric single-site factors; `ops` chars are
/// X, Z, n, P applied at the matching 1-based `sites`.
SparseOperator pauli_string_op(const std::string& ops, const std::vector<int>& sites,
                               const Basis& basis);

// Deterministic single-configuration action of products of single-site
// operators (distinct sites), used for correlation functions.
enum class SiteOp { N, P, Plus, Minus, Z, X };

struct OpFactor {
  int site;  // 1-based
  SiteOp op;
};

std::optional<std::pair<Config, double>> apply_factors(Config s,
                                                       const std::vector<OpFactor>& ops);

/// <psi| O |psi> for a product-of-factors operator O over the state's basis.
Complex expectation_factors(const Eigen::VectorXcd& amps, const Basis& basis,
                            const std::vector<OpFactor>& ops);

}  // namespace rydsim
