// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "rydsim/basis.hpp"

namespace rydsim {

/// Zero-momentum sector of a periodic constrained basis. Representatives are
/// the smallest integer of each translation orbit, stored ascending; a k=0
/// sector state spreads weight 1/sqrt(period) over the distinct translates of
/// its representative.
class MomentumSector {
 public:
  /// Only k = 0 is supported; the basis must be periodic.
  static MomentumSector build(const Basis& basis, int k = 0);

  int n() const { return n_; }
  int k() const { return 0; }
  std::size_t dim() const { return reps_.size(); }
  BasisTag tag() const { return BasisTag{n_, Boundary::PBC, Space::SectorK0, dim()}; }

  const std::vector<Config>& representatives() const { return reps_; }
  const std::vector<int>& periods() const { return periods_; }

  /// Index of the orbit containing `s`, together with the representative.
  std::optional<std::size_t> orbit_index(Config s) const;
  Config canonical(Config s) const;  // smallest translate of s
  int period(std::size_t i) const { return periods_[i]; }

 private:
  int n_ = 0;
  std::vector<Config> reps_;
  std::vector<int> periods_;
};

/// Expand a sector vector onto the full constrained basis. Norm preserving.
Eigen::VectorXcd embed_sector_vector(const Eigen::VectorXcd& sector_vec,
                                     const MomentumSector& sector,
                                     const Basis& basis);

/// Adjoint of the embedding: project a translation-symmetric full-basis
/// vector back onto the sector representatives.
Eigen::VectorXcd project_to_sector(const Eigen::VectorXcd& full_vec,
                                   const MomentumSector& sector,
                                   const Basis& basis);

/// Left-rotate the N-bit configuration by r sites (translation by r).
Config translate(Config s, int n, int r);

}  // namespace rydsim
