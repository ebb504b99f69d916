// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/experiments.hpp"

#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "rydsim/parallel.hpp"

using namespace rydsim;

TEST_CASE("phase diagram scans are complete and deterministic") {
  PhaseDiagramOptions opts;
  opts.grid.n = 8;
  opts.grid.u_min = -6;
  opts.grid.u_max = 0;
  opts.grid.u_steps = 3;
  opts.grid.v_min = -3;
  opts.grid.v_max = 5;
  opts.grid.v_steps = 3;
  opts.seed = 5;

  PhaseDiagramResult a = phase_diagram(opts);
  REQUIRE(a.records.size() == 9);
  CHECK(a.all_ok());

  PhaseDiagramResult b = phase_diagram(opts);
  std::ostringstream csv_a, csv_b;
  a.write_csv(csv_a);
  b.write_csv(csv_b);
  CHECK(csv_a.str() == csv_b.str());

  // workers must not change the result
  opts.workers = 4;
  PhaseDiagramResult c = phase_diagram(opts);
  std::ostringstream csv_c;
  c.write_csv(csv_c);
  CHECK(csv_a.str() == csv_c.str());
}

TEST_CASE("obc diagram enforces the odd-multiple-of-three constraint") {
  ObcDiagramOptions opts;
  opts.grid.n = 12;
  CHECK_THROWS_AS(obc_diagram(opts), std::invalid_argument);  // even
  opts.grid.n = 10;
  CHECK_THROWS_AS(obc_diagram(opts), std::invalid_argument);  // not divisible by 3
  try {
    obc_diagram(opts);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("odd system size divisible by three") !=
          std::string::npos);
  }
}

TEST_CASE("obc diagram reports both bulk and boundary Wick values") {
  ObcDiagramOptions opts;
  opts.grid.n = 9;
  opts.grid.u_min = opts.grid.u_max = -15.0;
  opts.grid.u_steps = 1;
  opts.grid.v_min = opts.grid.v_max = 8.0;
  opts.grid.v_steps = 1;
  PhaseDiagramResult res = obc_diagram(opts);
  REQUIRE(res.records.size() == 1);
  REQUIRE(res.records[0].ok());
  CHECK(res.records[0].values.count("wick"));
  CHECK(res.records[0].values.count("wick_boundary"));
}

TEST_CASE("zero impurity strength reproduces the clean point exactly") {
  ImpuritySweepOptions opts;
  opts.n_list = {9};
  opts.eps_list = {0.0, 1e-3};
  opts.t_max = 2.0;
  opts.dt = 1.0;
  ImpuritySweepResult res = impurity_sweep(opts);
  REQUIRE(res.rows.size() == 2);
  REQUIRE(res.all_ok());

  // clean reference computed with no impurity term in the model at all
  Basis b = Basis::blockade(9, Boundary::PBC);
  ModelSpec clean;
  clean.u = opts.u;
  clean.v = opts.v;
  StateVector gs = ground_state(build_uv_hamiltonian(clean, b)).second;
  DfOptions df = opts.df;
  df.seed = mix_seed(opts.seed, 0);
  double df0 = interaction_distance(reduced_density_matrix(gs, b, 4), df).value;
  double w0 = wick_violation(gs, b, default_wick_triple(b));
  CHECK(res.rows[0].rec.values.at("d_f0") == df0);
  CHECK(res.rows[0].rec.values.at("wick0") == w0);
  // a small impurity moves the values, but only slightly
  CHECK(res.rows[1].rec.values.at("d_f0") == doctest::Approx(df0).epsilon(0.2));
}

TEST_CASE("du quench with zero shift matches the plain quench") {
  QuenchResult a = du_quench(9, -15, 8, -15, -5, 4.0, 1.0);
  QuenchProtocol proto;
  proto.n = 9;
  proto.initial_spec.u = -15;
  proto.initial_spec.v = 8;
  proto.final_spec.u = -15;
  proto.final_spec.v = -5;
  proto.t_max = 4.0;
  proto.dt = 1.0;
  proto.observables = {Observable::InteractionDistance, Observable::Entropy};
  QuenchResult b = run_quench(proto);
  REQUIRE(a.times == b.times);
  CHECK(a.series.at("d_f") == b.series.at("d_f"));
}

TEST_CASE("single clean realization equals the clean curve exactly") {
  LongrangeQuenchConfig config;
  config.n = 6;
  config.omega_i = 0.02;
  config.u_i = 0.02;
  config.omega_f = 0.02;
  config.u_f = 0.06;
  config.t_max = 20.0;
  config.dt = 10.0;

  QuenchResult clean = longrange_quench(config);
  DisorderEnsembleSpec ens;
  ens.realizations = 1;
  ens.delta = 0.0;  // zero draw width
  EnsembleQuenchResult avg = longrange_ensemble(config, ens);
  REQUIRE(avg.times == clean.times);
  for (std::size_t i = 0; i < avg.times.size(); ++i)
    CHECK(avg.mean_df[i] == clean.series.at("d_f")[i]);
  for (double s : avg.stderr_df) CHECK(s == 0.0);
}

TEST_CASE("ensemble statistics come with standard errors") {
  LongrangeQuenchConfig config;
  config.n = 5;
  config.omega_i = 0.02;
  config.u_i = 0.02;
  config.omega_f = 0.02;
  config.u_f = 0.06;
  config.t_max = 10.0;
  config.dt = 5.0;
  DisorderEnsembleSpec ens;
  ens.realizations = 4;
  ens.master_seed = 11;
  EnsembleQuenchResult avg = longrange_ensemble(config, ens);
  REQUIRE(avg.mean_df.size() == avg.times.size());
  REQUIRE(avg.stderr_df.size() == avg.times.size());

  // deterministic under the same master seed
  EnsembleQuenchResult again = longrange_ensemble(config, ens, 2);
  CHECK(avg.mean_df == again.mean_df);
  CHECK(avg.stderr_df == again.stderr_df);
}

TEST_CASE("finite-size quench summarizes minima and oscillation amplitudes") {
  FssOptions opts;
  opts.n_list = {6, 9};
  opts.t_max = 5.0;
  opts.dt = 1.0;
  FssResult res = finite_size_quench(opts);
  REQUIRE(res.curves.size() == 2);
  for (const auto& c : res.curves) {
    CHECK(c.min_df_early >= 0.0);
    CHECK(c.osc_amplitude >= 0.0);
    CHECK(c.result.max_norm_drift < 1e-9);
  }
  std::ostringstream os;
  res.write_csv(os);
  CHECK(os.str().find("n,t,d_f,entropy") == 0);

  FssOptions big;
  big.n_list = {27};
  CHECK_THROWS_AS(finite_size_quench(big), std::invalid_argument);
}

TEST_CASE("quench CSV emits one row per time") {
  QuenchProtocol proto;
  proto.n = 6;
  proto.initial_spec.u = -4;
  proto.initial_spec.v = 2;
  proto.final_spec.u = -4;
  proto.final_spec.v = -2;
  proto.t_max = 2.0;
  proto.dt = 1.0;
  proto.observables = {Observable::Energy};
  QuenchResult q = run_quench(proto);
  std::ostringstream os;
  write_quench_csv(os, q);
  std::string text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 3 rows
}
