// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "rydsim/dynamics.hpp"

namespace rydsim {

inline constexpr const char* kVersion = "0.1.0";

/// Per-work-item record: metric values, status, and wall time. Failed points
/// are flagged, never dropped.
struct ResultRecord {
  std::map<std::string, double> values;
  std::string status = "ok";
  double wall_seconds = 0.0;
  bool ok() const { return status == "ok"; }
};

// ---------------------------------------------------------------------------
// Equilibrium phase diagrams

struct ScanGrid {
  double u_min = -20.0, u_max = 5.0;
  int u_steps = 26;
  double v_min = -10.0, v_max = 15.0;
  int v_steps = 26;
  int n = 18;
  Boundary boundary = Boundary::PBC;
  std::vector<std::string> metrics{"d_f", "wick", "entropy"};
};

struct PhaseDiagramOptions {
  ScanGrid grid;
  DfOptions df;
  WickTriple triple{0, 0, 0};  // 0 = basis default
  std::vector<Impurity> impurities;
  int workers = 0;
  std::uint64_t seed = 1;
};

struct PhaseDiagramResult {
  std::vector<double> u, v;  // row-major: u outer, v inner
  std::vector<ResultRecord> records;
  bool all_ok() const;
  void write_csv(std::ostream& os) const;
};

/// Ground state of the constrained model per grid point (k=0 sector on
/// rings), then D_F, Wick violation, and entropy at the half cut.
PhaseDiagramResult phase_diagram(const PhaseDiagramOptions& opts);

struct ObcDiagramOptions {
  ScanGrid grid;  // boundary forced to OBC; n must be odd and divisible by 3
  DfOptions df;
  int workers = 0;
  std::uint64_t seed = 1;
};

/// OBC diagram at odd N divisible by three (canonically 15); the Wick
/// violation is reported for both the bulk triple and the boundary triple.
PhaseDiagramResult obc_diagram(const ObcDiagramOptions& opts);

// ---------------------------------------------------------------------------
// Impurity robustness

struct ImpuritySweepOptions {
  double u = -4.0, v = 10.5;
  double quench_u = -4.0, quench_v = -6.0;
  std::vector<double> eps_list{1e-4, 1e-3, 1e-2, 1e-1};
  std::vector<int> n_list{12};
  int site = 4;
  double t_max = 40.0, dt = 0.25;
  DfOptions df;
  int workers = 0;
  std::uint64_t seed = 1;
};

struct ImpurityRow {
  double eps = 0.0;
  int n = 0;
  ResultRecord rec;  // values: w0, df0, retention (= max_t |D_F(t) - D_F(0)|)
};

struct ImpuritySweepResult {
  std::vector<ImpurityRow> rows;
  bool all_ok() const;
  void write_csv(std::ostream& os) const;
};

/// Ground-state Gaussianity at the scan point with an impurity on `site`,
/// plus the interaction-distance retention of the quench to (quench_u,
/// quench_v); both Hamiltonians carry the impurity.
ImpuritySweepResult impurity_sweep(const ImpuritySweepOptions& opts);

/// Quench with a simultaneous change of U and V (ideal-Z3 free) — a plain
/// run_quench with both parameters differing between the specs.
QuenchResult du_quench(int n, double u_i, double v_i, double u_f, double v_f,
                       double t_max = 40.0, double dt = 0.25, DfOptions df = {});

// ---------------------------------------------------------------------------
// Long-range Rydberg model

struct LongrangeScanOptions {
  int n = 12;
  double v = 1.0;
  double omega_min = 0.002, omega_max = 0.03;
  int omega_steps = 8;
  double u_min = 0.0, u_max = 0.05;
  int u_steps = 11;
  DfOptions df;
  int workers = 0;
  std::uint64_t seed = 1;
};

struct LongrangeScanResult {
  std::vector<double> omega, u;
  std::vector<ResultRecord> records;
  bool all_ok() const;
  void write_csv(std::ostream& os) const;
};

/// Clean Gaussianity diagram of the long-range model over (Omega, U) at
/// fixed V.
LongrangeScanResult longrange_scan(const LongrangeScanOptions& opts);

/// Quench endpoints in the long-range model ("red cross" points).
struct LongrangeQuenchConfig {
  int n = 12;
  double v = 1.0;
  double omega_i = 0.01, u_i = 0.01;  // Z3-phase point
  double omega_f = 0.01, u_f = 0.04;  // Z2-phase point
  double t_max = 2000.0, dt = 20.0;
  bool ideal_z3 = false;  // start from the ideal Z3 state instead of the ground state
  DfOptions df;
};

struct DisorderEnsembleSpec {
  int realizations = 100;
  std::uint64_t master_seed = 7;
  double delta = 0.02;  // offsets drawn uniformly from [-delta, delta]
  bool ideal_z3 = false;  // ideal-Z3 initialization under the disordered Hamiltonians
};

/// Clean long-range quench (offsets = 0 everywhere).
QuenchResult longrange_quench(const LongrangeQuenchConfig& config,
                              const std::vector<double>& offsets = {});

struct EnsembleQuenchResult {
  std::vector<double> times;
  std::vector<double> mean_df;
  std::vector<double> stderr_df;
  int realizations = 0;
  void write_csv(std::ostream& os) const;
};

/// Positional-disorder ensemble of the long-range quench: one offset draw
/// per site per realization, seeds derived from the master seed, mean and
/// standard error of D_F(t) across realizations.
EnsembleQuenchResult longrange_ensemble(const LongrangeQuenchConfig& config,
                                        const DisorderEnsembleSpec& ensemble, int workers = 0);

// ---------------------------------------------------------------------------
// Finite-size quench scaling

struct FssOptions {
  std::vector<int> n_list{18, 24};
  double u = -15.0, v_i = 8.0, v_f = -5.0;
  double t_max = 40.0, dt = 0.25;
  double early_window = 15.0;  // min D_F is summarized over t <= early_window
  DfOptions df;
};

struct FssCurve {
  int n = 0;
  QuenchResult result;
  double min_df_early = 0.0;   // min over t <= early_window
  double osc_amplitude = 0.0;  // max - min of D_F over the full run
};

struct FssResult {
  std::vector<FssCurve> curves;
  void write_csv(std::ostream& os) const;
};

/// Z3-phase to Z2-phase quench at increasing system size (PBC, k=0).
FssResult finite_size_quench(const FssOptions& opts);

// ---------------------------------------------------------------------------
// Output helpers

void write_quench_csv(std::ostream& os, const QuenchResult& result);
std::string format_double(double x);

}  // namespace rydsim
