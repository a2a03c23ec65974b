#pragma once

#include <span>
#include <vector>

#include "afb/ml/data.hpp"

namespace afb::ml {

/// Fisher's linear discriminant: w = S_W^-1 (mu_pos - mu_neg), threshold at
/// the midpoint of the projected class means.
struct FisherModel {
  std::vector<double> w;
  double b = 0.0;
  bool regularized = false;  // scatter was singular; lambda*I was added

  bool trained() const { return !w.empty(); }
  double score(std::span<const double> x) const;
  int predict(std::span<const double> x) const;  // +1 when w.x > b
};

FisherModel fisher_train(const DataMatrix& X, const std::vector<int>& y);

}  // namespace afb::ml
