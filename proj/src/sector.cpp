// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/sector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rydsim {

Config translate(Config s, int n, int r) {
  r %= n;
  if (r == 0) return s;
  const Config mask = (n == 32) ? ~Config{0} : ((Config{1} << n) - 1);
  return ((s << r) | (s >> (n - r))) & mask;
}

MomentumSector MomentumSector::build(const Basis& basis, int k) {
  if (!basis.constrained() || basis.boundary() != Boundary::PBC)
    throw std::invalid_argument("momentum sectors need a periodic constrained basis");
  if (k != 0) throw std::invalid_argument("only the k=0 sector is implemented");

  MomentumSector sec;
  sec.n_ = basis.n();
  const int n = sec.n_;
  for (Config s : basis.states()) {
    // keep s iff it is the smallest member of its orbit; record the period
    int period = 0;
    bool minimal = true;
    for (int r = 1; r <= n; ++r) {
      Config t = translate(s, n, r);
      if (t < s) {
        minimal = false;
        break;
      }
      if (t == s) {
        period = r;
        break;
      }
    }
    if (!minimal) continue;
    sec.reps_.push_back(s);
    sec.periods_.push_back(period);
  }
  return sec;  // reps inherit the ascending order of the basis
}

Config MomentumSector::canonical(Config s) const {
  Config best = s;
  for (int r = 1; r < n_; ++r) best = std::min(best, translate(s, n_, r));
  return best;
}

std::optional<std::size_t> MomentumSector::orbit_index(Config s) const {
  Config rep = canonical(s);
  auto it = std::lower_bound(reps_.begin(), reps_.end(), rep);
  if (it == reps_.end() || *it != rep) return std::nullopt;
  return static_cast<std::size_t>(it - reps_.begin());
}

Eigen::VectorXcd embed_sector_vector(const Eigen::VectorXcd& sector_vec,
                                     const MomentumSector& sector,
                                     const Basis& basis) {
  if (static_cast<std::size_t>(sector_vec.size()) != sector.dim())
    throw std::invalid_argument("sector vector length does not match sector dimension");
  if (!basis.constrained() || basis.boundary() != Boundary::PBC ||
      basis.n() != sector.n())
    throw std::invalid_argument("basis does not match the sector's parent space");

  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
  const int n = sector.n();
  for (std::size_t a = 0; a < sector.dim(); ++a) {
    const Config rep = sector.representatives()[a];
    const int p = sector.period(a);
    const std::complex<double> w = sector_vec[static_cast<Eigen::Index>(a)] / std::sqrt(double(p));
    for (int r = 0; r < p; ++r) {
      Config t = translate(rep, n, r);
      auto idx = basis.index_of(t);
      out[static_cast<Eigen::Index>(*idx)] = w;
    }
  }
  return out;
}

Eigen::VectorXcd project_to_sector(const Eigen::VectorXcd& full_vec,
                                   const MomentumSector& sector,
                                   const Basis& basis) {
  if (static_cast<std::size_t>(full_vec.size()) != basis.dim())
    throw std::invalid_argument("full vector length does not match basis dimension");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(sector.dim()));
  const int n = sector.n();
  for (std::size_t a = 0; a < sector.dim(); ++a) {
    const Config rep = sector.representatives()[a];
    const int p = sector.period(a);
    std::complex<double> acc = 0.0;
    for (int r = 0; r < p; ++r) {
      Config t = translate(rep, n, r);
      acc += full_vec[static_cast<Eigen::Index>(*basis.index_of(t))];
    }
    out[static_cast<Eigen::Index>(a)] = acc / std::sqrt(double(p));
  }
  return out;
}

}  // namespace rydsim
