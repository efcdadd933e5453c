#pragma once

#include <Eigen/Dense>

#include <utility>

#include "coxwave/common.hpp"

namespace coxwave {

/// Coordinate frame for box regions. Columns of `basis` are the coordinate
/// directions (typically the dual basis of a simple root system); a frame
/// point t corresponds to the ambient point basis * t.
class Frame {
 public:
  explicit Frame(Eigen::MatrixXd basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols() || basis_.rows() == 0)
      throw InvalidInputError("frame basis must be square and nonempty");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_);
    if (!lu.isInvertible())
      throw RankError("frame basis is singular");
    inverse_ = lu.inverse();
    det_abs_ = std::abs(lu.determinant());
    double residual =
        (basis_ * inverse_ - Eigen::MatrixXd::Identity(dim(), dim())).norm();
    if (residual > 1e-12)
      throw RankError("frame basis is numerically singular");
  }

  static Frame identity(int dim) {
    return Frame(Eigen::MatrixXd::Identity(dim, dim));
  }

  int dim() const { return int(basis_.rows()); }
  const Eigen::MatrixXd& basis() const { return basis_; }
  const Eigen::MatrixXd& inverse() const { return inverse_; }
  double det_abs() const { return det_abs_; }

  Eigen::VectorXd to_ambient(const Eigen::VectorXd& frame_coords) const {
    return basis_ * frame_coords;
  }
  Eigen::VectorXd to_frame(const Eigen::VectorXd& ambient) const {
    return inverse_ * ambient;
  }

  bool same_as(const Frame& other, double tol = 1e-12) const {
    return basis_.rows() == other.basis_.rows() &&
           (basis_ - other.basis_).norm() <= tol;
  }

 private:
  Eigen::MatrixXd basis_;
  Eigen::MatrixXd inverse_;
  double det_abs_ = 0.0;
};

inline void require_same_frame(const Frame& a, const Frame& b) {
  if (!a.same_as(b)) throw FrameMismatchError("regions live in different frames");
}

}  // namespace coxwave
