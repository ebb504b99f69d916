// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rydsim/entanglement.hpp"

namespace rydsim {

/// Conjectured upper bound of the interaction distance, 3 - 2 sqrt(2).
inline constexpr double kDfConjecturedMax = 3.0 - 2.0 * 1.4142135623730951;

/// Many-body spectrum of a free model with single-particle entanglement
/// energies `eps`: probabilities exp(-sum_l n_l eps_l)/Z over all occupation
/// patterns, normalized with Z = prod_l (1 + exp(-eps_l)). Descending.
/// At most 16 modes.
std::vector<double> free_many_body_spectrum(const std::vector<double>& eps);

/// Half the L1 distance between the target probabilities (descending) and the
/// free spectrum generated by `eps`, with rank-wise pairing and zero-padding
/// of the shorter list.
double df_objective(const std::vector<double>& target_desc, const std::vector<double>& eps);

struct DfOptions {
  int modes = 0;           // 0 = auto: min(ceil(log2(#levels)) + 1, 10)
  int starts = 32;         // multi-start count
  std::uint64_t seed = 2024;
  double tol = 1e-9;       // simplex convergence tolerance on the objective
  double truncation = 1e-12;  // drop levels below this before optimizing
};

struct DfResult {
  double value = 0.0;
  std::vector<double> eps;   // optimal single-particle energies
  int modes = 0;
  bool conjecture_warning = false;  // value exceeded 3 - 2 sqrt(2) + 0.005
};

/// Interaction distance: minimal trace distance between the entanglement
/// spectrum and any free-fermion spectrum, via multi-start Nelder-Mead over
/// the single-particle energies.
DfResult interaction_distance(const std::vector<double>& probabilities, DfOptions opts = {});
DfResult interaction_distance(const EntanglementData& ent, DfOptions opts = {});

/// Consecutive site triple the Wick correlators act on.
struct WickTriple {
  int s1 = 1, s2 = 2, s3 = 3;
};

/// (1,2,3) on rings; centered in the bulk for open chains (e.g. (7,8,9) at N=15).
WickTriple default_wick_triple(const Basis& basis);

/// The four Wick terms <n1 s2+ s3->, <n1><s2+ s3->, <s1+ s2+><s1- s2z s3->,
/// <s1- s2+><s1+ s2z s3->, site labels mapped onto the triple.
std::array<Complex, 4> wick_terms(const StateVector& psi, const Basis& basis, WickTriple t);
std::array<Complex, 4> wick_terms_rdm(const Eigen::Matrix<Complex, 8, 8>& rho);

/// |T1 - T2 - T3 + T4| evaluated from full-state expectation values.
double wick_violation(const StateVector& psi, const Basis& basis, WickTriple t);
/// Same combination evaluated from a dense three-site reduced density matrix
/// (sites mapped to qubits 0,1,2).
double wick_violation_rdm(const Eigen::Matrix<Complex, 8, 8>& rho);

}  // namespace rydsim
