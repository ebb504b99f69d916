// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/gaussianity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rydsim/hamiltonian.hpp"

namespace rydsim {

std::vector<double> free_many_body_spectrum(const std::vector<double>& eps) {
  if (eps.size() > 16) throw std::invalid_argument("free spectrum limited to 16 modes");
  std::vector<double> probs{1.0};
  probs.reserve(std::size_t{1} << eps.size());
  for (double e : eps) {
    // logistic factors keep the product normalized for any magnitude of e
    const double occ = 1.0 / (1.0 + std::exp(e));
    const double emp = 1.0 - occ;
    const std::size_t m = probs.size();
    probs.resize(2 * m);
    for (std::size_t k = 0; k < m; ++k) {
      probs[m + k] = probs[k] * occ;
      probs[k] *= emp;
    }
  }
  std::sort(probs.begin(), probs.end(), std::greater<>());
  return probs;
}

namespace {

double objective_buf(const std::vector<double>& p, const std::vector<double>& eps,
                     std::vector<double>& q) {
  q.assign(1, 1.0);
  q.reserve(std::size_t{1} << eps.size());
  for (double e : eps) {
    const double occ = 1.0 / (1.0 + std::exp(e));
    const double emp = 1.0 - occ;
    const std::size_t m = q.size();
    q.resize(2 * m);
    for (std::size_t k = 0; k < m; ++k) {
      q[m + k] = q[k] * occ;
      q[k] *= emp;
    }
  }
  std::sort(q.begin(), q.end(), std::greater<>());
  const std::size_t common = std::min(p.size(), q.size());
  double d = 0.0;
  for (std::size_t k = 0; k < common; ++k) d += std::abs(p[k] - q[k]);
  for (std::size_t k = common; k < p.size(); ++k) d += p[k];
  for (std::size_t k = common; k < q.size(); ++k) d += q[k];
  return 0.5 * d;
}

// Classic Nelder-Mead simplex descent; terminates when the simplex function
// values agree to `tol` or the evaluation budget runs out.
std::pair<double, std::vector<double>> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
    double tol, int max_evals) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> pts(dim + 1, x0);
  std::vector<double> fv(dim + 1);
  for (std::size_t i = 0; i < dim; ++i)
    pts[i + 1][i] += std::max(0.25, 0.25 * std::abs(x0[i]));
  int evals = 0;
  for (std::size_t i = 0; i <= dim; ++i) {
    fv[i] = f(pts[i]);
    ++evals;
  }

  std::vector<std::size_t> order(dim + 1);
  auto sort_simplex = [&] {
    for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
  };

  std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
  while (evals < max_evals) {
    sort_simplex();
    const std::size_t best = order[0], worst = order[dim], second = order[dim - 1];
    if (fv[worst] - fv[best] < tol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[i][k];
    }
    for (double& c : centroid) c /= double(dim);

    for (std::size_t k = 0; k < dim; ++k) xr[k] = centroid[k] + (centroid[k] - pts[worst][k]);
    double fr = f(xr);
    ++evals;
    if (fr < fv[order[0]]) {
      for (std::size_t k = 0; k < dim; ++k) xe[k] = centroid[k] + 2.0 * (centroid[k] - pts[worst][k]);
      double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[worst] = xe;
        fv[worst] = fe;
      } else {
        pts[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      pts[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    // contraction (outside if the reflected point improved on the worst)
    if (fr < fv[worst]) {
      for (std::size_t k = 0; k < dim; ++k) xc[k] = centroid[k] + 0.5 * (xr[k] - centroid[k]);
    } else {
      for (std::size_t k = 0; k < dim; ++k) xc[k] = centroid[k] + 0.5 * (pts[worst][k] - centroid[k]);
    }
    double fc = f(xc);
    ++evals;
    if (fc < std::min(fr, fv[worst])) {
      pts[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    // shrink towards the best vertex
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < dim; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      fv[i] = f(pts[i]);
      ++evals;
    }
  }
  sort_simplex();
  return {fv[order[0]], pts[order[0]]};
}

}  // namespace

double df_objective(const std::vector<double>& target_desc, const std::vector<double>& eps) {
  std::vector<double> buf;
  return objective_buf(target_desc, eps, buf);
}

DfResult interaction_distance(const std::vector<double>& probabilities, DfOptions opts) {
  std::vector<double> p;
  p.reserve(probabilities.size());
  for (double x : probabilities)
    if (x > opts.truncation) p.push_back(x);
  std::sort(p.begin(), p.end(), std::greater<>());
  if (p.empty()) throw std::invalid_argument("empty entanglement spectrum");

  int modes = opts.modes;
  if (modes <= 0) {
    int needed = 0;
    while ((std::size_t{1} << needed) < p.size()) ++needed;
    modes = std::min(needed + 1, 10);
  }
  if (modes > 16) throw std::invalid_argument("mode count limited to 16");

  // level gaps of the target spectrum seed half the starts
  std::vector<double> gaps;
  for (std::size_t k = 1; k < p.size() && gaps.size() < std::size_t(modes); ++k)
    gaps.push_back(std::log(p[0] / p[k]));

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unif(0.0, 10.0);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);

  std::vector<double> q;  // workspace
  auto f = [&](const std::vector<double>& eps) { return objective_buf(p, eps, q); };

  DfResult best;
  best.value = std::numeric_limits<double>::infinity();
  best.modes = modes;
  const int evals_budget = 500 * (modes + 1);
  for (int s = 0; s < std::max(1, opts.starts); ++s) {
    std::vector<double> x0(static_cast<std::size_t>(modes));
    if (s % 2 == 0) {
      for (int l = 0; l < modes; ++l) {
        double base = (static_cast<std::size_t>(l) < gaps.size() && gaps[l] > 0.0)
                          ? gaps[l]
                          : 8.0 + 2.0 * l;
        x0[l] = (s == 0) ? base : base * (1.0 + jitter(rng)) + 0.1 * jitter(rng);
      }
    } else {
      for (int l = 0; l < modes; ++l) x0[l] = unif(rng);
    }
    auto [val, x] = nelder_mead(f, std::move(x0), opts.tol, evals_budget);
    if (val < best.value) {
      best.value = val;
      best.eps = x;
    }
  }
  std::sort(best.eps.begin(), best.eps.end());
  best.conjecture_warning = best.value > kDfConjecturedMax + 0.005;
  return best;
}

DfResult interaction_distance(const EntanglementData& ent, DfOptions opts) {
  return interaction_distance(ent.eigenvalues, opts);
}

WickTriple default_wick_triple(const Basis& basis) {
  if (basis.boundary() == Boundary::PBC || basis.n() < 5) return WickTriple{1, 2, 3};
  const int mid = (basis.n() + 1) / 2;  // (7,8,9) at N=15
  return WickTriple{mid - 1, mid, mid + 1};
}

namespace {

void check_triple(const WickTriple& t, int n) {
  if (t.s1 < 1 || t.s3 > n || t.s2 != t.s1 + 1 || t.s3 != t.s2 + 1)
    throw std::invalid_argument("Wick triple must be consecutive in-range sites");
}

}  // namespace

std::array<Complex, 4> wick_terms(const StateVector& psi, const Basis& basis, WickTriple t) {
  if (psi.tag != basis.tag()) throw std::invalid_argument("state/basis tag mismatch");
  check_triple(t, basis.n());
  const int a = t.s1, b = t.s2, c = t.s3;
  auto ev = [&](const std::vector<OpFactor>& ops) {
    return expectation_factors(psi.amps, basis, ops);
  };
  std::array<Complex, 4> out;
  out[0] = ev({{a, SiteOp::N}, {b, SiteOp::Plus}, {c, SiteOp::Minus}});
  out[1] = ev({{a, SiteOp::N}}) * ev({{b, SiteOp::Plus}, {c, SiteOp::Minus}});
  out[2] = ev({{a, SiteOp::Plus}, {b, SiteOp::Plus}}) *
           ev({{a, SiteOp::Minus}, {b, SiteOp::Z}, {c, SiteOp::Minus}});
  out[3] = ev({{a, SiteOp::Minus}, {b, SiteOp::Plus}}) *
           ev({{a, SiteOp::Plus}, {b, SiteOp::Z}, {c, SiteOp::Minus}});
  return out;
}

namespace {

using Mat2 = Eigen::Matrix2cd;

Mat2 site_matrix(SiteOp op) {
  Mat2 m = Mat2::Zero();
  switch (op) {
    case SiteOp::N: m(1, 1) = 1.0; break;
    case SiteOp::P: m(0, 0) = 1.0; break;
    case SiteOp::Plus: m(1, 0) = 1.0; break;
    case SiteOp::Minus: m(0, 1) = 1.0; break;
    case SiteOp::Z: m(0, 0) = -1.0; m(1, 1) = 1.0; break;
    case SiteOp::X: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
  }
  return m;
}

Mat2 identity2() { return Mat2::Identity(); }

Complex trace_term(const Eigen::Matrix<Complex, 8, 8>& rho, const Mat2& o1, const Mat2& o2,
                   const Mat2& o3) {
  Complex tr = 0.0;
  for (int r = 0; r < 8; ++r) {
    for (int col = 0; col < 8; ++col) {
      // O[r][col] with qubit 0 = triple site 1 as the least significant bit
      const Complex o = o1(r & 1, col & 1) * o2((r >> 1) & 1, (col >> 1) & 1) *
                        o3((r >> 2) & 1, (col >> 2) & 1);
      if (o != 0.0) tr += rho(col, r) * o;  // tr(rho O) = sum rho[col][r] O[r][col]
    }
  }
  return tr;
}

}  // namespace

std::array<Complex, 4> wick_terms_rdm(const Eigen::Matrix<Complex, 8, 8>& rho) {
  const Mat2 n = site_matrix(SiteOp::N), plus = site_matrix(SiteOp::Plus),
             minus = site_matrix(SiteOp::Minus), z = site_matrix(SiteOp::Z), id = identity2();
  std::array<Complex, 4> out;
  out[0] = trace_term(rho, n, plus, minus);
  out[1] = trace_term(rho, n, id, id) * trace_term(rho, id, plus, minus);
  out[2] = trace_term(rho, plus, plus, id) * trace_term(rho, minus, z, minus);
  out[3] = trace_term(rho, minus, plus, id) * trace_term(rho, plus, z, minus);
  return out;
}

double wick_violation(const StateVector& psi, const Basis& basis, WickTriple t) {
  auto w = wick_terms(psi, basis, t);
  return std::abs(w[0] - w[1] - w[2] + w[3]);
}

double wick_violation_rdm(const Eigen::Matrix<Complex, 8, 8>& rho) {
  auto w = wick_terms_rdm(rho);
  return std::abs(w[0] - w[1] - w[2] + w[3]);
}

}  // namespace rydsim
