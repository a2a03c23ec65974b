#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "afb/ml/data.hpp"

namespace afb::ml {

enum class KernelKind { Linear, Rbf };

struct Kernel {
  KernelKind kind = KernelKind::Rbf;
  double gamma = 1.0;  // rbf only

  double operator()(std::span<const double> a, std::span<const double> b) const;
};

/// Cost-asymmetric soft-margin SVM parameters. The per-class slack penalty
/// is C * cost(class): cost_neg guards the negative class against false
/// positives, cost_pos guards the positive class against false negatives.
struct SvmParams {
  double C = 1.0;
  Kernel kernel;
  double cost_pos = 1.0;
  double cost_neg = 1.0;
  double kkt_tol = 1e-3;
  long max_pair_updates = 1'000'000;
};

struct SvmModel {
  Kernel kernel;
  DataMatrix support_vectors;
  std::vector<double> alpha_y;  // dual weight * label, per support vector
  double bias = 0.0;
  double cost_pos = 1.0;
  double cost_neg = 1.0;
  double kkt_residual = 0.0;  // violation at termination

  bool trained() const { return support_vectors.rows() > 0; }
  /// Raw decision value f(x) = sum_i alpha_y_i K(sv_i, x) + bias.
  double decision(std::span<const double> x) const;
  /// Sign of the decision value; 0 maps to +1.
  int predict(std::span<const double> x) const;
};

/// SMO dual solver with per-class box constraints. Working-set selection is
/// the maximal KKT-violating pair; converged when the violation drops to
/// kkt_tol. Raises SingleClass and, at the update cap, NoConvergence.
SvmModel svm_train(const DataMatrix& X, const std::vector<int>& y, const SvmParams& params);

/// Value of the dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij
/// for an explicit alpha vector (used by solver-equivalence checks).
double svm_dual_objective(const DataMatrix& X, const std::vector<int>& y,
                          const Kernel& kernel, const std::vector<double>& alpha);

}  // namespace afb::ml
