#include "afb/ml/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <unordered_map>

namespace afb::ml {

double Kernel::operator()(std::span<const double> a, std::span<const double> b) const {
  if (a.size() != b.size())
    raise(ErrorCode::DimensionMismatch, "kernel operands differ in size");
  if (kind == KernelKind::Linear) {
    double dot = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) dot += a[k] * b[k];
    return dot;
  }
  double d2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    d2 += d * d;
  }
  return std::exp(-gamma * d2);
}

double SvmModel::decision(std::span<const double> x) const {
  double f = bias;
  for (std::size_t i = 0; i < support_vectors.rows(); ++i)
    f += alpha_y[i] * kernel(support_vectors.row(i), x);
  return f;
}

int SvmModel::predict(std::span<const double> x) const {
  return decision(x) < 0.0 ? -1 : 1;
}

namespace {

// LRU cache of kernel matrix rows; the violating-pair selection keeps
// revisiting a small active set, so a modest cap gets a high hit rate.
class KernelRowCache {
 public:
  KernelRowCache(const DataMatrix& X, const Kernel& kernel, std::size_t max_rows)
      : X_(X), kernel_(kernel), max_rows_(std::max<std::size_t>(max_rows, 2)) {}

  const std::vector<double>& row(std::size_t i) {
    auto it = map_.find(i);
    if (it != map_.end()) {
      order_.splice(order_.begin(), order_, it->second.second);
      return it->second.first;
    }
    if (map_.size() >= max_rows_) {
      map_.erase(order_.back());
      order_.pop_back();
    }
    std::vector<double> values(X_.rows());
    const auto xi = X_.row(i);
    for (std::size_t j = 0; j < X_.rows(); ++j) values[j] = kernel_(xi, X_.row(j));
    order_.push_front(i);
    auto [pos, inserted] =
        map_.emplace(i, std::make_pair(std::move(values), order_.begin()));
    return pos->second.first;
  }

 private:
  const DataMatrix& X_;
  const Kernel& kernel_;
  std::size_t max_rows_;
  std::list<std::size_t> order_;
  std::unordered_map<std::size_t, std::pair<std::vector<double>, std::list<std::size_t>::iterator>> map_;
};

}  // namespace

SvmModel svm_train(const DataMatrix& X, const std::vector<int>& y, const SvmParams& params) {
  check_binary_labels(X, y);
  if (params.C <= 0.0 || params.cost_pos <= 0.0 || params.cost_neg <= 0.0)
    raise(ErrorCode::InvalidArgument, "svm C and class costs must be > 0");

  const std::size_t n = X.rows();
  std::vector<double> box(n);  // per-sample upper bound C * cost(class)
  for (std::size_t i = 0; i < n; ++i)
    box[i] = params.C * (y[i] > 0 ? params.cost_pos : params.cost_neg);

  std::vector<double> alpha(n, 0.0);
  // Dual gradient of 1/2 a'Qa - e'a, Q_ij = y_i y_j K_ij; alpha = 0 -> -1.
  std::vector<double> grad(n, -1.0);
  std::vector<double> kdiag(n);
  for (std::size_t i = 0; i < n; ++i) kdiag[i] = params.kernel(X.row(i), X.row(i));

  KernelRowCache cache(X, params.kernel, 512);

  const auto in_up = [&](std::size_t t) {
    return (y[t] > 0 && alpha[t] < box[t]) || (y[t] < 0 && alpha[t] > 0.0);
  };
  const auto in_low = [&](std::size_t t) {
    return (y[t] < 0 && alpha[t] < box[t]) || (y[t] > 0 && alpha[t] > 0.0);
  };

  double violation = std::numeric_limits<double>::infinity();
  long updates = 0;
  while (true) {
    // Maximal violating pair.
    double m_up = -std::numeric_limits<double>::infinity();
    double m_low = std::numeric_limits<double>::infinity();
    std::size_t i = n, j = n;
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * grad[t];
      if (in_up(t) && v > m_up) {
        m_up = v;
        i = t;
      }
      if (in_low(t) && v < m_low) {
        m_low = v;
        j = t;
      }
    }
    violation = m_up - m_low;
    if (!(i < n) || !(j < n) || violation <= params.kkt_tol) break;
    if (++updates > params.max_pair_updates)
      raise(ErrorCode::NoConvergence,
            "SMO update cap reached (violation " + std::to_string(violation) + ")");

    const auto& K_i = cache.row(i);
    const auto& K_j = cache.row(j);

    // Two-variable analytic step (bias-free Platt form).
    const double s = static_cast<double>(y[i] * y[j]);
    double L, H;
    if (y[i] != y[j]) {
      L = std::max(0.0, alpha[j] - alpha[i]);
      H = std::min(box[j], box[i] + alpha[j] - alpha[i]);
    } else {
      L = std::max(0.0, alpha[i] + alpha[j] - box[i]);
      H = std::min(box[j], alpha[i] + alpha[j]);
    }
    double eta = kdiag[i] + kdiag[j] - 2.0 * K_i[j];
    if (eta <= 1e-12) eta = 1e-12;
    // u_t - y_t expressed through the gradient: y_t * grad_t = u_t - y_t.
    const double E_i = y[i] * grad[i];
    const double E_j = y[j] * grad[j];
    double aj_new = alpha[j] + y[j] * (E_i - E_j) / eta;
    aj_new = std::clamp(aj_new, L, H);
    const double aj_delta = aj_new - alpha[j];
    if (aj_delta == 0.0) break;  // numerically stuck; stop at current violation
    const double ai_new = alpha[i] - s * aj_delta;
    const double ai_delta = ai_new - alpha[i];
    alpha[i] = ai_new;
    alpha[j] = aj_new;

    for (std::size_t t = 0; t < n; ++t)
      grad[t] += y[t] * (y[i] * K_i[t] * ai_delta + y[j] * K_j[t] * aj_delta);
  }

  // Bias from free support vectors; fall back to the violation midpoint.
  double bias_sum = 0.0;
  std::size_t bias_n = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0.0 && alpha[t] < box[t]) {
      bias_sum += -y[t] * grad[t];
      ++bias_n;
    }
  }
  double bias;
  if (bias_n > 0) {
    bias = bias_sum / static_cast<double>(bias_n);
  } else {
    double m_up = -std::numeric_limits<double>::infinity();
    double m_low = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * grad[t];
      if (in_up(t)) m_up = std::max(m_up, v);
      if (in_low(t)) m_low = std::min(m_low, v);
    }
    bias = (m_up + m_low) / 2.0;
  }

  SvmModel model;
  model.kernel = params.kernel;
  model.cost_pos = params.cost_pos;
  model.cost_neg = params.cost_neg;
  model.bias = bias;
  model.kkt_residual = std::max(violation, 0.0);
  DataMatrix sv(0, X.cols());
  for (std::size_t t = 0; t < n; ++t) {
    if (alpha[t] > 0.0) {
      sv.push_row(X.row(t));
      model.alpha_y.push_back(alpha[t] * y[t]);
    }
  }
  model.support_vectors = std::move(sv);
  return model;
}

double svm_dual_objective(const DataMatrix& X, const std::vector<int>& y,
                          const Kernel& kernel, const std::vector<double>& alpha) {
  const std::size_t n = X.rows();
  double linear = 0.0;
  for (double a : alpha) linear += a;
  double quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha[j] == 0.0) continue;
      quad += alpha[i] * alpha[j] * y[i] * y[j] * kernel(X.row(i), X.row(j));
    }
  }
  return linear - 0.5 * quad;
}

}  // namespace afb::ml
