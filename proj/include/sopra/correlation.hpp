#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "error.hpp"

namespace sopra {

/// Symmetric, unit-diagonal, positive semi-definite correlation matrix over
/// the value vocabulary, stored row-major.
class ValueCorrelationMatrix {
 public:
  /// Eigenvalues down to -kRepairTolerance are clipped to zero; anything
  /// more negative is rejected.
  static constexpr double kRepairTolerance = 1e-6;

  ValueCorrelationMatrix() = default;

  static ValueCorrelationMatrix identity(std::size_t dim) {
    std::vector<double> e(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return from_entries(dim, std::move(e));
  }

  /// Default structure for the seven value labels, placed on the value
  /// circle at their 36-degree positions: r = 0.5 cos(angle difference).
  /// Neighbours correlate positively, opposites negatively (universalism vs
  /// achievement is about -0.40).
  static ValueCorrelationMatrix circumplex() {
    // self_direction, power, hedonism, achievement, benevolence, universalism, tradition
    constexpr double kDegrees[] = {0.0, 144.0, 72.0, 108.0, 288.0, 324.0, 252.0};
    constexpr std::size_t n = std::size(kDegrees);
    std::vector<double> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        e[i * n + j] = i == j ? 1.0 : 0.5 * std::cos((kDegrees[i] - kDegrees[j]) * std::numbers::pi / 180.0);
    return from_entries(n, std::move(e));
  }

  /// Validates shape, symmetry, unit diagonal and [-1, 1] range, then
  /// checks semi-definiteness and repairs small violations.
  static ValueCorrelationMatrix from_entries(std::size_t dim, std::vector<double> entries) {
    if (dim == 0) throw ConstraintError("correlation matrix must be non-empty");
    if (entries.size() != dim * dim)
      throw ConstraintError("correlation matrix needs " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(entries.size()));
    for (std::size_t i = 0; i < dim; ++i) {
      if (entries[i * dim + i] != 1.0) throw ConstraintError("correlation matrix diagonal must be 1");
      for (std::size_t j = 0; j < dim; ++j) {
        const double v = entries[i * dim + j];
        if (!std::isfinite(v) || v < -1.0 || v > 1.0)
          throw ConstraintError("correlation entries must lie in [-1,1]");
        if (std::abs(v - entries[j * dim + i]) > 1e-12) throw ConstraintError("correlation matrix must be symmetric");
      }
    }
    ValueCorrelationMatrix m;
    m.dim_ = dim;
    m.entries_ = std::move(entries);
    m.repair_if_needed();
    return m;
  }

  std::size_t dimension() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::span<const double> entries() const noexcept { return entries_; }
  bool repaired() const noexcept { return repaired_; }

  /// Lower-triangular factor L with L L^T equal to the matrix, row-major.
  /// Zero pivots (rank-deficient input) yield zero columns.
  std::vector<double> cholesky() const {
    const std::size_t n = dim_;
    std::vector<double> l(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      double d = entries_[j * n + j];
      for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
      if (d <= 1e-12) continue;
      const double ljj = std::sqrt(d);
      l[j * n + j] = ljj;
      for (std::size_t i = j + 1; i < n; ++i) {
        double s = entries_[i * n + j];
        for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
        l[i * n + j] = s / ljj;
      }
    }
    return l;
  }

  bool operator==(const ValueCorrelationMatrix& o) const { return dim_ == o.dim_ && entries_ == o.entries_; }

 private:
  void repair_if_needed() {
    const auto n = static_cast<Eigen::Index>(dim_);
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = entries_[static_cast<std::size_t>(i * n + j)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    if (eig.info() != Eigen::Success) throw ConstraintError("correlation matrix eigendecomposition failed");
    const double min_eig = eig.eigenvalues().minCoeff();
    // Round-off of an already-repaired matrix stays well above this.
    if (min_eig >= -1e-10) return;
    if (min_eig < -kRepairTolerance)
      throw ConstraintError("correlation matrix is not positive semi-definite (min eigenvalue " +
                            std::to_string(min_eig) + ")");
    Eigen::VectorXd clipped = eig.eigenvalues().cwiseMax(0.0);
    Eigen::MatrixXd r = eig.eigenvectors() * clipped.asDiagonal() * eig.eigenvectors().transpose();
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        entries_[static_cast<std::size_t>(i * n + j)] =
            i == j ? 1.0 : std::clamp(r(i, j) / std::sqrt(r(i, i) * r(j, j)), -1.0, 1.0);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < i; ++j) entries_[j * dim_ + i] = entries_[i * dim_ + j];
    repaired_ = true;
  }

  std::size_t dim_ = 0;
  std::vector<double> entries_;
  bool repaired_ = false;
};

}  // namespace sopra
