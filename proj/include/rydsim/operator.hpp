// Copyright 2026 The rydsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "rydsim/basis.hpp"
#include "rydsim/sector.hpp"

namespace rydsim {

using Complex = std::complex<double>;

/// Normalized complex amplitudes over a tagged basis or sector.
struct StateVector {
  BasisTag tag;
  Eigen::VectorXcd amps;

  double norm() const { return amps.norm(); }
  void normalize();
};

/// Real symmetric sparse matrix in row-compressed layout, tagged with the
/// space it acts on. Storage is exactly symmetric: vals(a,b) == vals(b,a)
/// bit for bit.
class SparseOperator {
 public:
  SparseOperator() = default;

  const BasisTag& tag() const { return tag_; }
  std::size_t dim() const { return tag_.dim; }
  std::size_t nnz() const { return cols_.size(); }

  template <typename Scalar>
  void apply(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
             Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) const {
    y.resize(x.size());
    for (std::size_t a = 0; a < dim(); ++a) {
      Scalar acc{};
      for (std::size_t p = row_ptr_[a]; p < row_ptr_[a + 1]; ++p)
        acc += vals_[p] * x[static_cast<Eigen::Index>(cols_[p])];
      y[static_cast<Eigen::Index>(a)] = acc;
    }
  }

  Eigen::VectorXcd operator*(const Eigen::VectorXcd& x) const;
  Eigen::VectorXd operator*(const Eigen::VectorXd& x) const;

  double expectation(const Eigen::VectorXcd& x) const;  // real part of <x|H|x>
  Eigen::MatrixXd to_dense() const;
  double diagonal(std::size_t a) const;

  /// One-norm-ish magnitude scale (max row sum), used for drift tolerances.
  double norm_scale() const;

  /// Build from unordered triplets; duplicates are summed and the result is
  /// symmetrized exactly so that H == H^T holds bitwise.
  static SparseOperator from_triplets(
      const BasisTag& tag,
      const std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>& triplets);

 private:
  BasisTag tag_;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<double> vals_;
};

/// Local action of an operator on single configurations: a diagonal value
/// plus off-diagonal terms H|s> += amp |target>. Builders express every
/// model through this interface and the assemblers below map it onto a
/// concrete space.
struct ConfigRule {
  std::function<double(Config)> diagonal;
  std::function<void(Config, const std::function<void(Config, double)>&)> offdiagonal;
};

SparseOperator assemble_operator(const ConfigRule& rule, const Basis& basis);
SparseOperator assemble_operator(const ConfigRule& rule, const MomentumSector& sector);

}  // namespace rydsim
