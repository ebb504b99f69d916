// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rydsim {

namespace {

// y = exp(-i T dt) e1 for the symmetric tridiagonal T(alpha, beta) of size m.
Eigen::VectorXcd expm_tridiag_e1(const std::vector<double>& alpha,
                                 const std::vector<double>& beta, int m, double dt) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    t(j, j) = alpha[j];
    if (j + 1 < m) t(j, j + 1) = t(j + 1, j) = beta[j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(m);
  for (int j = 0; j < m; ++j) {
    const Complex phase = std::exp(Complex(0.0, -dt * es.eigenvalues()[j]));
    const double w0 = es.eigenvectors()(0, j);
    for (int i = 0; i < m; ++i) y[i] += es.eigenvectors()(i, j) * phase * w0;
  }
  return y;
}

// One Krylov approximation of exp(-i H dt) v. Returns false when the local
// error estimate stays above tol at the maximal subspace size.
bool krylov_apply(const SparseOperator& h, Eigen::VectorXcd& psi, double dt,
                  const KrylovOptions& opts, double scale) {
  const double nrm = psi.norm();
  if (nrm == 0.0) return true;
  const Eigen::Index dim = psi.size();
  const int m_cap = static_cast<int>(std::min<Eigen::Index>(opts.m_max, dim));

  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(m_cap);
  basis.push_back(psi / nrm);
  std::vector<double> alpha, beta;  // beta[j] couples v_j and v_{j+1}
  bool breakdown = false;

  Eigen::VectorXcd w;
  int m = 0;
  int check_at = std::min(opts.m0, m_cap);
  while (m < m_cap) {
    h.apply(basis[m], w);
    const double a = std::real(basis[m].dot(w));
    alpha.push_back(a);
    w -= a * basis[m];
    if (m > 0) w -= beta[m - 1] * basis[m - 1];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) w -= b.dot(w) * b;
    const double bnorm = w.norm();
    ++m;
    if (bnorm < 1e-13 * std::max(scale, 1.0)) {
      breakdown = true;  // invariant subspace: the projection is exact
      break;
    }
    if (m == m_cap) {
      beta.push_back(bnorm);
      break;
    }
    beta.push_back(bnorm);
    basis.push_back(w / bnorm);

    if (m < check_at && !breakdown) continue;

    // error estimate at the current subspace size
    Eigen::VectorXcd y = expm_tridiag_e1(alpha, beta, m, dt);
    const double err = beta[m - 1] * std::abs(y[m - 1]);
    if (err < opts.tol) {
      psi.setZero();
      for (int j = 0; j < m; ++j) psi += y[j] * basis[j];
      psi *= nrm;
      return true;
    }
    check_at = std::min(2 * check_at, m_cap);
  }

  // final evaluation with whatever subspace we have
  Eigen::VectorXcd y = expm_tridiag_e1(alpha, beta, m, dt);
  const double err = (breakdown || m == static_cast<int>(dim) || beta.empty())
                         ? 0.0
                         : beta[m - 1] * std::abs(y[m - 1]);
  if (err < opts.tol) {
    psi.setZero();
    for (int j = 0; j < m; ++j) psi += y[j] * basis[j];
    psi *= nrm;
    return true;
  }
  return false;
}

}  // namespace

void evolve_step(const SparseOperator& h, Eigen::VectorXcd& psi, double dt,
                 const KrylovOptions& opts) {
  if (dt == 0.0) return;
  const double scale = h.norm_scale();
  int splits = 0;
  std::function<void(double, int)> step = [&](double tau, int depth) {
    if (depth > 40)
      throw SolverError("Krylov propagation failed to converge after 40 halvings", tau);
    Eigen::VectorXcd save = psi;
    if (krylov_apply(h, psi, tau, opts, scale)) return;
    psi = save;
    ++splits;
    step(tau / 2, depth + 1);
    step(tau / 2, depth + 1);
  };
  step(dt, 0);
  (void)splits;
}

std::vector<StateVector> evolve(const SparseOperator& h, const StateVector& psi0,
                                const std::vector<double>& times, const KrylovOptions& opts) {
  if (psi0.tag != h.tag())
    throw std::invalid_argument("initial state does not live on the operator's space");
  std::vector<StateVector> out;
  out.reserve(times.size());
  Eigen::VectorXcd psi = psi0.amps;
  double now = 0.0;
  for (double t : times) {
    evolve_step(h, psi, t - now, opts);
    now = t;
    out.push_back(StateVector{psi0.tag, psi});
  }
  return out;
}

InitialState initial_state_from_string(const std::string& s) {
  if (s == "ground") return InitialState::Ground;
  if (s == "z2") return InitialState::Z2;
  if (s == "z3") return InitialState::Z3;
  throw std::invalid_argument("unknown initial state '" + s + "' (ground|z2|z3)");
}

std::string observable_column(Observable o) {
  switch (o) {
    case Observable::Entropy: return "entropy";
    case Observable::InteractionDistance: return "d_f";
    case Observable::Wick: return "wick";
    case Observable::Correlator: return "corr_zz";
    case Observable::Fidelity: return "fidelity";
    case Observable::Energy: return "energy";
  }
  return "?";
}

std::vector<Observable> observables_from_string(const std::string& csv) {
  std::vector<Observable> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "entropy" || item == "S") out.push_back(Observable::Entropy);
    else if (item == "d_f" || item == "df" || item == "D_F") out.push_back(Observable::InteractionDistance);
    else if (item == "wick" || item == "W") out.push_back(Observable::Wick);
    else if (item == "corr" || item == "corr_zz") out.push_back(Observable::Correlator);
    else if (item == "fidelity") out.push_back(Observable::Fidelity);
    else if (item == "energy") out.push_back(Observable::Energy);
    else throw std::invalid_argument("unknown observable '" + item + "'");
  }
  if (out.empty()) throw std::invalid_argument("empty observable list");
  return out;
}

namespace {

SparseOperator build_on_basis(const ModelSpec& spec, const Basis& basis) {
  switch (spec.variant) {
    case ModelVariant::UV_PXP: return build_uv_hamiltonian(spec, basis);
    case ModelVariant::PPXPP_EFF: return build_effective_hamiltonian(spec, basis);
    case ModelVariant::LONGRANGE: return build_longrange_hamiltonian(spec, basis.n());
  }
  throw std::logic_error("unreachable");
}

SparseOperator build_on_sector(const ModelSpec& spec, const MomentumSector& sector) {
  switch (spec.variant) {
    case ModelVariant::UV_PXP: return build_uv_hamiltonian(spec, sector);
    case ModelVariant::PPXPP_EFF: return build_effective_hamiltonian(spec, sector);
    default: throw std::invalid_argument("long-range model has no momentum sectors");
  }
}

}  // namespace

QuenchResult run_quench(const QuenchProtocol& protocol) {
  const int n = protocol.n;
  if (protocol.t_max <= 0 || protocol.dt <= 0)
    throw std::invalid_argument("time grid needs t_max > 0 and dt > 0");
  if (protocol.initial_spec.boundary != protocol.final_spec.boundary)
    throw std::invalid_argument("initial and final specs must share the boundary");

  const bool longrange = protocol.final_spec.variant == ModelVariant::LONGRANGE ||
                         protocol.initial_spec.variant == ModelVariant::LONGRANGE;
  const bool sector_ok = !longrange && protocol.prefer_sector &&
                         protocol.final_spec.boundary == Boundary::PBC &&
                         protocol.initial_spec.translation_invariant() &&
                         protocol.final_spec.translation_invariant();

  // reference basis used for entanglement-type observables
  Basis basis = longrange ? Basis::full(n) : Basis::blockade(n, protocol.final_spec.boundary);
  std::optional<MomentumSector> sector;
  if (sector_ok) sector = MomentumSector::build(basis);

  auto build_h = [&](const ModelSpec& spec) {
    return sector ? build_on_sector(spec, *sector) : build_on_basis(spec, basis);
  };

  SparseOperator h_f = build_h(protocol.final_spec);

  StateVector psi0;
  switch (protocol.initial) {
    case InitialState::Ground: {
      SparseOperator h_i = build_h(protocol.initial_spec);
      psi0 = ground_state(h_i).second;
      break;
    }
    case InitialState::Z2:
      psi0 = z2_state(n, basis);
      if (sector) psi0 = to_sector(psi0, *sector, basis);
      break;
    case InitialState::Z3:
      psi0 = z3_state(n, basis);
      if (sector) psi0 = to_sector(psi0, *sector, basis);
      break;
  }

  QuenchResult res;
  res.space = sector ? "k0-sector" : (longrange ? "full" : "constrained");
  res.space_dim = sector ? sector->dim() : basis.dim();
  res.h_scale = h_f.norm_scale();
  res.initial_energy = h_f.expectation(psi0.amps);

  for (int k = 0; k * protocol.dt <= protocol.t_max + 1e-9; ++k)
    res.times.push_back(k * protocol.dt);
  for (auto o : protocol.observables) res.series[observable_column(o)] = {};

  WickTriple triple = protocol.triple;
  if (triple.s1 == 0) triple = default_wick_triple(basis);

  const bool needs_embedding =
      std::any_of(protocol.observables.begin(), protocol.observables.end(), [](Observable o) {
        return o == Observable::Entropy || o == Observable::InteractionDistance ||
               o == Observable::Wick || o == Observable::Correlator;
      });
  std::optional<SparseOperator> corr_op;
  if (std::count(protocol.observables.begin(), protocol.observables.end(),
                 Observable::Correlator))
    corr_op = zz_correlator_op(protocol.correlator_site, basis);

  Eigen::VectorXcd psi = psi0.amps;
  double now = 0.0;
  for (double t : res.times) {
    evolve_step(h_f, psi, t - now, protocol.krylov);
    now = t;

    res.max_norm_drift = std::max(res.max_norm_drift, std::abs(psi.norm() - 1.0));
    const double e_t = h_f.expectation(psi);
    res.max_energy_drift = std::max(res.max_energy_drift, std::abs(e_t - res.initial_energy));

    StateVector full{basis.tag(), psi};
    if (needs_embedding && sector)
      full.amps = embed_sector_vector(psi, *sector, basis);

    std::optional<EntanglementData> ent;
    for (auto o : protocol.observables) {
      double value = 0.0;
      switch (o) {
        case Observable::Entropy:
        case Observable::InteractionDistance:
          if (!ent) ent = reduced_density_matrix(full, basis, n / 2);
          value = (o == Observable::Entropy) ? ent->entropy
                                             : interaction_distance(*ent, protocol.df).value;
          break;
        case Observable::Wick:
          value = wick_violation(full, basis, triple);
          break;
        case Observable::Correlator:
          value = corr_op->expectation(full.amps);
          break;
        case Observable::Fidelity:
          value = std::norm(psi0.amps.dot(psi));
          break;
        case Observable::Energy:
          value = e_t;
          break;
      }
      res.series[observable_column(o)].push_back(value);
    }
  }
  return res;
}

std::vector<double> fidelity_compare(const SparseOperator& h_a, const SparseOperator& h_b,
                                     const StateVector& psi0, const std::vector<double>& times,
                                     const KrylovOptions& opts) {
  if (h_a.tag() != h_b.tag())
    throw std::invalid_argument("the two Hamiltonians act on different spaces");
  if (psi0.tag != h_a.tag()) throw std::invalid_argument("state/operator space mismatch");
  std::vector<double> out;
  out.reserve(times.size());
  Eigen::VectorXcd pa = psi0.amps, pb = psi0.amps;
  double now = 0.0;
  for (double t : times) {
    evolve_step(h_a, pa, t - now, opts);
    evolve_step(h_b, pb, t - now, opts);
    now = t;
    out.push_back(std::norm(pb.dot(pa)));
  }
  return out;
}

}  // namespace rydsim
