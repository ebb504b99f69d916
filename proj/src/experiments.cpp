// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "rydsim/parallel.hpp"

namespace rydsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < steps; ++i) out.push_back(lo + (hi - lo) * double(i) / double(steps - 1));
  return out;
}

bool wants(const std::vector<std::string>& metrics, const std::string& name) {
  return std::find(metrics.begin(), metrics.end(), name) != metrics.end();
}

// Ground state of `spec` on the given space and the half-cut Gaussianity
// metrics. The sector is used when provided (periodic, translation
// invariant); otherwise the full basis.
ResultRecord equilibrium_point(const ModelSpec& spec, const Basis& basis,
                               const MomentumSector* sector, WickTriple triple,
                               const std::vector<std::string>& metrics, DfOptions df) {
  ResultRecord rec;
  const auto start = Clock::now();
  try {
    StateVector gs;
    if (spec.variant == ModelVariant::LONGRANGE) {
      gs = ground_state(build_longrange_hamiltonian(spec, basis.n())).second;
    } else if (sector) {
      gs = ground_state(build_uv_hamiltonian(spec, *sector)).second;
      gs = to_full(gs, *sector, basis);
    } else {
      gs = ground_state(build_uv_hamiltonian(spec, basis)).second;
    }
    if (wants(metrics, "d_f") || wants(metrics, "entropy")) {
      EntanglementData ent = reduced_density_matrix(gs, basis, basis.n() / 2);
      if (wants(metrics, "entropy")) rec.values["entropy"] = ent.entropy;
      if (wants(metrics, "d_f")) rec.values["d_f"] = interaction_distance(ent, df).value;
    }
    if (wants(metrics, "wick")) rec.values["wick"] = wick_violation(gs, basis, triple);
    if (wants(metrics, "wick_boundary"))
      rec.values["wick_boundary"] = wick_violation(gs, basis, WickTriple{1, 2, 3});
  } catch (const std::exception& e) {
    rec.status = e.what();
  }
  rec.wall_seconds = seconds_since(start);
  return rec;
}

void write_record_row(std::ostream& os, const std::vector<double>& coords,
                      const ResultRecord& rec, const std::vector<std::string>& metrics) {
  for (double c : coords) os << format_double(c) << ",";
  for (const auto& m : metrics) {
    auto it = rec.values.find(m);
    os << (it != rec.values.end() ? format_double(it->second) : "nan") << ",";
  }
  os << rec.status << "\n";
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

bool PhaseDiagramResult::all_ok() const {
  for (const auto& r : records)
    if (!r.ok()) return false;
  return true;
}

void PhaseDiagramResult::write_csv(std::ostream& os) const {
  const bool obc = !records.empty() && records.front().values.count("wick_boundary");
  std::vector<std::string> metrics{"d_f", "wick", "entropy"};
  if (obc) metrics.push_back("wick_boundary");
  os << "u,v";
  for (const auto& m : metrics) os << "," << m;
  os << ",status\n";
  for (std::size_t i = 0; i < records.size(); ++i)
    write_record_row(os, {u[i], v[i]}, records[i], metrics);
}

PhaseDiagramResult phase_diagram(const PhaseDiagramOptions& opts) {
  const ScanGrid& g = opts.grid;
  if (g.u_steps < 1 || g.v_steps < 1) throw std::invalid_argument("grid steps must be >= 1");
  Basis basis = Basis::blockade(g.n, g.boundary);
  std::optional<MomentumSector> sector;
  if (g.boundary == Boundary::PBC && opts.impurities.empty())
    sector = MomentumSector::build(basis);
  WickTriple triple = opts.triple.s1 == 0 ? default_wick_triple(basis) : opts.triple;

  const auto us = linspace(g.u_min, g.u_max, g.u_steps);
  const auto vs = linspace(g.v_min, g.v_max, g.v_steps);
  PhaseDiagramResult res;
  res.records.resize(us.size() * vs.size());
  for (double uu : us)
    for (double vv : vs) {
      res.u.push_back(uu);
      res.v.push_back(vv);
    }

  parallel_for(res.records.size(), opts.workers, [&](std::size_t i) {
    ModelSpec spec;
    spec.variant = ModelVariant::UV_PXP;
    spec.boundary = g.boundary;
    spec.u = res.u[i];
    spec.v = res.v[i];
    spec.impurities = opts.impurities;
    DfOptions df = opts.df;
    df.seed = mix_seed(opts.seed, i);
    res.records[i] = equilibrium_point(spec, basis, sector ? &*sector : nullptr, triple,
                                       g.metrics, df);
  });
  return res;
}

PhaseDiagramResult obc_diagram(const ObcDiagramOptions& opts) {
  const int n = opts.grid.n;
  if (n % 2 == 0 || n % 3 != 0)
    throw std::invalid_argument(
        "OBC diagram needs an odd system size divisible by three (e.g. N=15), got N=" +
        std::to_string(n));
  ScanGrid grid = opts.grid;
  grid.boundary = Boundary::OBC;
  grid.metrics = {"d_f", "wick", "entropy", "wick_boundary"};
  PhaseDiagramOptions popts;
  popts.grid = grid;
  popts.df = opts.df;
  popts.workers = opts.workers;
  popts.seed = opts.seed;
  return phase_diagram(popts);
}

bool ImpuritySweepResult::all_ok() const {
  for (const auto& r : rows)
    if (!r.rec.ok()) return false;
  return true;
}

void ImpuritySweepResult::write_csv(std::ostream& os) const {
  os << "eps,n,wick0,d_f0,retention,status\n";
  for (const auto& row : rows) {
    os << format_double(row.eps) << "," << row.n << ",";
    const std::vector<std::string> metrics{"wick0", "d_f0", "retention"};
    for (const auto& m : metrics) {
      auto it = row.rec.values.find(m);
      os << (it != row.rec.values.end() ? format_double(it->second) : "nan") << ",";
    }
    os << row.rec.status << "\n";
  }
}

ImpuritySweepResult impurity_sweep(const ImpuritySweepOptions& opts) {
  ImpuritySweepResult res;
  for (int n : opts.n_list)
    for (double eps : opts.eps_list) res.rows.push_back(ImpurityRow{eps, n, {}});

  parallel_for(res.rows.size(), opts.workers, [&](std::size_t i) {
    auto& row = res.rows[i];
    const auto start = Clock::now();
    try {
      Impurity imp{opts.site, row.eps};
      ModelSpec spec_i;
      spec_i.u = opts.u;
      spec_i.v = opts.v;
      spec_i.impurities = {imp};
      ModelSpec spec_f = spec_i;
      spec_f.u = opts.quench_u;
      spec_f.v = opts.quench_v;

      QuenchProtocol proto;
      proto.n = row.n;
      proto.initial = InitialState::Ground;
      proto.initial_spec = spec_i;
      proto.final_spec = spec_f;
      proto.t_max = opts.t_max;
      proto.dt = opts.dt;
      proto.observables = {Observable::InteractionDistance, Observable::Wick};
      proto.df = opts.df;
      proto.df.seed = mix_seed(opts.seed, i);
      proto.prefer_sector = false;  // the impurity pins a site even at eps = 0

      QuenchResult q = run_quench(proto);
      const auto& df_t = q.series.at("d_f");
      row.rec.values["d_f0"] = df_t.front();
      row.rec.values["wick0"] = q.series.at("wick").front();
      double retention = 0.0;
      for (double v : df_t) retention = std::max(retention, std::abs(v - df_t.front()));
      row.rec.values["retention"] = retention;
    } catch (const std::exception& e) {
      row.rec.status = e.what();
    }
    row.rec.wall_seconds = seconds_since(start);
  });
  return res;
}

QuenchResult du_quench(int n, double u_i, double v_i, double u_f, double v_f, double t_max,
                       double dt, DfOptions df) {
  QuenchProtocol proto;
  proto.n = n;
  proto.initial = InitialState::Ground;
  proto.initial_spec.u = u_i;
  proto.initial_spec.v = v_i;
  proto.final_spec.u = u_f;
  proto.final_spec.v = v_f;
  proto.t_max = t_max;
  proto.dt = dt;
  proto.observables = {Observable::InteractionDistance, Observable::Entropy};
  proto.df = df;
  return run_quench(proto);
}

bool LongrangeScanResult::all_ok() const {
  for (const auto& r : records)
    if (!r.ok()) return false;
  return true;
}

void LongrangeScanResult::write_csv(std::ostream& os) const {
  os << "omega,u,d_f,wick,entropy,status\n";
  for (std::size_t i = 0; i < records.size(); ++i)
    write_record_row(os, {omega[i], u[i]}, records[i], {"d_f", "wick", "entropy"});
}

LongrangeScanResult longrange_scan(const LongrangeScanOptions& opts) {
  Basis basis = Basis::full(opts.n);
  WickTriple triple = default_wick_triple(basis);
  const auto omegas = linspace(opts.omega_min, opts.omega_max, opts.omega_steps);
  const auto us = linspace(opts.u_min, opts.u_max, opts.u_steps);

  LongrangeScanResult res;
  res.records.resize(omegas.size() * us.size());
  for (double om : omegas)
    for (double uu : us) {
      res.omega.push_back(om);
      res.u.push_back(uu);
    }
  parallel_for(res.records.size(), opts.workers, [&](std::size_t i) {
    ModelSpec spec;
    spec.variant = ModelVariant::LONGRANGE;
    spec.boundary = Boundary::OBC;
    spec.omega = res.omega[i];
    spec.u = res.u[i];
    spec.v = opts.v;
    DfOptions df = opts.df;
    df.seed = mix_seed(opts.seed, i);
    res.records[i] =
        equilibrium_point(spec, basis, nullptr, triple, {"d_f", "wick", "entropy"}, df);
  });
  return res;
}

QuenchResult longrange_quench(const LongrangeQuenchConfig& config,
                              const std::vector<double>& offsets) {
  QuenchProtocol proto;
  proto.n = config.n;
  proto.initial = config.ideal_z3 ? InitialState::Z3 : InitialState::Ground;
  proto.initial_spec.variant = ModelVariant::LONGRANGE;
  proto.initial_spec.boundary = Boundary::OBC;
  proto.initial_spec.omega = config.omega_i;
  proto.initial_spec.u = config.u_i;
  proto.initial_spec.v = config.v;
  proto.initial_spec.offsets = offsets;
  proto.final_spec = proto.initial_spec;
  proto.final_spec.omega = config.omega_f;
  proto.final_spec.u = config.u_f;
  proto.t_max = config.t_max;
  proto.dt = config.dt;
  proto.observables = {Observable::InteractionDistance, Observable::Entropy};
  proto.df = config.df;
  return run_quench(proto);
}

void EnsembleQuenchResult::write_csv(std::ostream& os) const {
  os << "t,mean_d_f,stderr_d_f\n";
  for (std::size_t i = 0; i < times.size(); ++i)
    os << format_double(times[i]) << "," << format_double(mean_df[i]) << ","
       << format_double(stderr_df[i]) << "\n";
}

EnsembleQuenchResult longrange_ensemble(const LongrangeQuenchConfig& config,
                                        const DisorderEnsembleSpec& ensemble, int workers) {
  if (ensemble.realizations < 1) throw std::invalid_argument("need at least one realization");
  std::vector<std::vector<double>> curves(ensemble.realizations);
  std::vector<double> times;

  parallel_for(curves.size(), workers, [&](std::size_t r) {
    std::mt19937_64 rng(mix_seed(ensemble.master_seed, r));
    std::uniform_real_distribution<double> draw(-ensemble.delta, ensemble.delta);
    std::vector<double> offsets(config.n);
    for (double& d : offsets) d = draw(rng);

    LongrangeQuenchConfig c = config;
    c.ideal_z3 = ensemble.ideal_z3;
    QuenchResult q = longrange_quench(c, offsets);
    curves[r] = q.series.at("d_f");
    if (r == 0) times = q.times;
  });

  EnsembleQuenchResult out;
  out.realizations = ensemble.realizations;
  out.times = times;
  const std::size_t nt = times.size();
  out.mean_df.assign(nt, 0.0);
  out.stderr_df.assign(nt, 0.0);
  for (const auto& c : curves)
    for (std::size_t i = 0; i < nt; ++i) out.mean_df[i] += c[i];
  for (double& m : out.mean_df) m /= double(ensemble.realizations);
  if (ensemble.realizations > 1) {
    for (const auto& c : curves)
      for (std::size_t i = 0; i < nt; ++i) {
        const double d = c[i] - out.mean_df[i];
        out.stderr_df[i] += d * d;
      }
    for (double& s : out.stderr_df)
      s = std::sqrt(s / double(ensemble.realizations - 1) / double(ensemble.realizations));
  }
  return out;
}

void FssResult::write_csv(std::ostream& os) const {
  os << "n,t,d_f,entropy\n";
  for (const auto& c : curves) {
    const auto& df = c.result.series.at("d_f");
    const auto& s = c.result.series.at("entropy");
    for (std::size_t i = 0; i < c.result.times.size(); ++i)
      os << c.n << "," << format_double(c.result.times[i]) << "," << format_double(df[i])
         << "," << format_double(s[i]) << "\n";
  }
}

FssResult finite_size_quench(const FssOptions& opts) {
  FssResult res;
  for (int n : opts.n_list) {
    if (n > 24) throw std::invalid_argument("finite-size quench capped at N=24");
    QuenchProtocol proto;
    proto.n = n;
    proto.initial = InitialState::Ground;
    proto.initial_spec.u = opts.u;
    proto.initial_spec.v = opts.v_i;
    proto.final_spec.u = opts.u;
    proto.final_spec.v = opts.v_f;
    proto.t_max = opts.t_max;
    proto.dt = opts.dt;
    proto.observables = {Observable::InteractionDistance, Observable::Entropy};
    proto.df = opts.df;

    FssCurve curve;
    curve.n = n;
    curve.result = run_quench(proto);
    const auto& df_t = curve.result.series.at("d_f");
    double lo = df_t.front(), hi = df_t.front(), lo_early = df_t.front();
    for (std::size_t i = 0; i < df_t.size(); ++i) {
      lo = std::min(lo, df_t[i]);
      hi = std::max(hi, df_t[i]);
      if (curve.result.times[i] <= opts.early_window) lo_early = std::min(lo_early, df_t[i]);
    }
    curve.min_df_early = lo_early;
    curve.osc_amplitude = hi - lo;
    res.curves.push_back(std::move(curve));
  }
  return res;
}

void write_quench_csv(std::ostream& os, const QuenchResult& result) {
  os << "t";
  for (const auto& [name, series] : result.series) os << "," << name;
  os << "\n";
  for (std::size_t i = 0; i < result.times.size(); ++i) {
    os << format_double(result.times[i]);
    for (const auto& [name, series] : result.series) os << "," << format_double(series[i]);
    os << "\n";
  }
}

}  // namespace rydsim
