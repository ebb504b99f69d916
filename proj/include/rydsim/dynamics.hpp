// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "rydsim/gaussianity.hpp"
#include "rydsim/hamiltonian.hpp"
#include "rydsim/solver.hpp"

namespace rydsim {

struct KrylovOptions {
  double tol = 1e-10;  // per-step accuracy in vector norm
  int m0 = 20;         // initial Krylov dimension
  int m_max = 160;
};

/// In-place psi <- exp(-i H dt) psi. The Krylov dimension grows on demand;
/// if the budget is exhausted the step is halved until the local error
/// estimate meets the tolerance.
void evolve_step(const SparseOperator& h, Eigen::VectorXcd& psi, double dt,
                 const KrylovOptions& opts = {});

/// States exp(-i H t_k) psi0 at the requested times (ascending from 0).
std::vector<StateVector> evolve(const SparseOperator& h, const StateVector& psi0,
                                const std::vector<double>& times,
                                const KrylovOptions& opts = {});

enum class InitialState { Ground, Z2, Z3 };
InitialState initial_state_from_string(const std::string& s);

enum class Observable { Entropy, InteractionDistance, Wick, Correlator, Fidelity, Energy };
std::vector<Observable> observables_from_string(const std::string& csv);
std::string observable_column(Observable o);

struct QuenchProtocol {
  int n = 18;
  InitialState initial = InitialState::Ground;
  ModelSpec initial_spec;
  ModelSpec final_spec;
  double t_max = 40.0;
  double dt = 0.1;
  std::vector<Observable> observables{Observable::Entropy, Observable::InteractionDistance};
  WickTriple triple{0, 0, 0};  // s1 == 0 selects the basis default
  int correlator_site = 1;
  DfOptions df;
  bool prefer_sector = true;
  KrylovOptions krylov;
};

struct QuenchResult {
  std::vector<double> times;
  std::map<std::string, std::vector<double>> series;
  double initial_energy = 0.0;
  double max_norm_drift = 0.0;
  double max_energy_drift = 0.0;
  double h_scale = 1.0;
  std::size_t space_dim = 0;
  std::string space;
};

/// Prepare the initial state (computed ground state of the initial spec, or
/// an ideal density-wave state), evolve it under the final spec, and record
/// the requested observables on the stated time grid.
QuenchResult run_quench(const QuenchProtocol& protocol);

/// |<psi_b(t)|psi_a(t)>|^2 for two Hamiltonians on the same space.
std::vector<double> fidelity_compare(const SparseOperator& h_a, const SparseOperator& h_b,
                                     const StateVector& psi0, const std::vector<double>& times,
                                     const KrylovOptions& opts = {});

}  // namespace rydsim
