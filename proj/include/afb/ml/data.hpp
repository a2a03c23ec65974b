#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "afb/core/error.hpp"

namespace afb::ml {

/// Row-major sample matrix: one row per sample.
class DataMatrix {
 public:
  DataMatrix() = default;
  DataMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<double> row(std::size_t i) {
    return {values_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }

  double& at(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

  void push_row(std::span<const double> row) {
    if (cols_ == 0) cols_ = row.size();
    if (row.size() != cols_)
      raise(ErrorCode::DimensionMismatch, "push_row width mismatch");
    values_.insert(values_.end(), row.begin(), row.end());
    ++rows_;
  }
  void push_row(std::initializer_list<double> row) {
    push_row(std::span<const double>(row.begin(), row.size()));
  }

  /// Copy of the selected rows, in the given order.
  DataMatrix select(const std::vector<std::size_t>& indices) const {
    DataMatrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      auto src = row(indices[i]);
      std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// +-1 labels with basic sanity checks.
inline void check_binary_labels(const DataMatrix& X, const std::vector<int>& y) {
  if (X.rows() != y.size())
    raise(ErrorCode::DimensionMismatch, "label count != sample count");
  bool has_pos = false, has_neg = false;
  for (int v : y) {
    if (v == 1) has_pos = true;
    else if (v == -1) has_neg = true;
    else raise(ErrorCode::InvalidArgument, "labels must be +1 or -1");
  }
  if (!has_pos || !has_neg)
    raise(ErrorCode::SingleClass, "training data contains a single class");
}

}  // namespace afb::ml
