// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "rydsim/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rydsim {

void StateVector::normalize() {
  double n = amps.norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  amps /= n;
}

Eigen::VectorXcd SparseOperator::operator*(const Eigen::VectorXcd& x) const {
  Eigen::VectorXcd y;
  apply(x, y);
  return y;
}

Eigen::VectorXd SparseOperator::operator*(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y;
  apply(x, y);
  return y;
}

double SparseOperator::expectation(const Eigen::VectorXcd& x) const {
  if (static_cast<std::size_t>(x.size()) != dim())
    throw std::invalid_argument("operator/vector dimension mismatch");
  return std::real(x.dot((*this) * x));
}

Eigen::MatrixXd SparseOperator::to_dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim()),
                                            static_cast<Eigen::Index>(dim()));
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t p = row_ptr_[a]; p < row_ptr_[a + 1]; ++p)
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(cols_[p])) = vals_[p];
  return m;
}

double SparseOperator::diagonal(std::size_t a) const {
  for (std::size_t p = row_ptr_[a]; p < row_ptr_[a + 1]; ++p)
    if (cols_[p] == a) return vals_[p];
  return 0.0;
}

double SparseOperator::norm_scale() const {
  double best = 0.0;
  for (std::size_t a = 0; a < dim(); ++a) {
    double row = 0.0;
    for (std::size_t p = row_ptr_[a]; p < row_ptr_[a + 1]; ++p) row += std::abs(vals_[p]);
    best = std::max(best, row);
  }
  return best;
}

SparseOperator SparseOperator::from_triplets(
    const BasisTag& tag,
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>& trip) {
  // Mirror every entry and average (a,b) with (b,a). The two directions are
  // accumulated as separate partial sums in emission order, so the final
  // (s_direct + s_mirrored)/2 is computed from the same pair of doubles on
  // both sides and the stored matrix is symmetric bit for bit.
  struct Entry {
    std::uint32_t row, col;
    std::uint8_t side;
    double val;
  };
  std::vector<Entry> all;
  all.reserve(2 * trip.size());
  for (const auto& [a, b, v] : trip) {
    all.push_back({a, b, 0, v});
    all.push_back({b, a, 1, v});
  }
  std::stable_sort(all.begin(), all.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.row, x.col) < std::tie(y.row, y.col);
  });

  SparseOperator op;
  op.tag_ = tag;
  op.row_ptr_.assign(tag.dim + 1, 0);
  std::size_t i = 0;
  while (i < all.size()) {
    const std::uint32_t a = all[i].row, b = all[i].col;
    double side_sum[2] = {0.0, 0.0};
    std::size_t j = i;
    for (; j < all.size() && all[j].row == a && all[j].col == b; ++j)
      side_sum[all[j].side] += all[j].val;
    const double val = (side_sum[0] + side_sum[1]) / 2.0;
    if (val != 0.0) {
      op.cols_.push_back(b);
      op.vals_.push_back(val);
      ++op.row_ptr_[a + 1];
    }
    i = j;
  }
  for (std::size_t a = 0; a < tag.dim; ++a) op.row_ptr_[a + 1] += op.row_ptr_[a];
  return op;
}

SparseOperator assemble_operator(const ConfigRule& rule, const Basis& basis) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> trip;
  trip.reserve(basis.dim() * 4);
  for (std::size_t a = 0; a < basis.dim(); ++a) {
    const Config s = basis.state(a);
    if (rule.diagonal) {
      double d = rule.diagonal(s);
      if (d != 0.0) trip.emplace_back(a, a, d);
    }
    if (rule.offdiagonal) {
      rule.offdiagonal(s, [&](Config t, double amp) {
        auto idx = basis.index_of(t);
        if (!idx)
          throw std::logic_error("operator leaves the basis: target " +
                                 format_config(t, basis.n()));
        trip.emplace_back(a, static_cast<std::uint32_t>(*idx), amp);
      });
    }
  }
  return SparseOperator::from_triplets(basis.tag(), std::move(trip));
}

SparseOperator assemble_operator(const ConfigRule& rule, const MomentumSector& sector) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> trip;
  trip.reserve(sector.dim() * 4);
  for (std::size_t a = 0; a < sector.dim(); ++a) {
    const Config rep = sector.representatives()[a];
    const double pa = sector.period(a);
    if (rule.diagonal) {
      double d = rule.diagonal(rep);  // diagonal is translation invariant
      if (d != 0.0) trip.emplace_back(a, a, d);
    }
    if (rule.offdiagonal) {
      rule.offdiagonal(rep, [&](Config t, double amp) {
        auto b = sector.orbit_index(t);
        if (!b)
          throw std::logic_error("operator leaves the sector: target " +
                                 format_config(t, sector.n()));
        const double pb = sector.period(*b);
        // <b|H|a> = sqrt(pa/pb) * sum of amplitudes from rep_a into orbit b
        trip.emplace_back(static_cast<std::uint32_t>(*b), a, amp * std::sqrt(pa / pb));
      });
    }
  }
  return SparseOperator::from_triplets(sector.tag(), std::move(trip));
}

}  // namespace rydsim
