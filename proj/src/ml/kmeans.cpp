#include "afb/ml/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "afb/core/rng.hpp"

namespace afb::ml {

namespace {

double sq_dist(std::span<const double> a, std::span<const double> b) {
  double d2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    d2 += d * d;
  }
  return d2;
}

}  // namespace

KMeansResult kmeans(const DataMatrix& X, int k, std::uint64_t seed) {
  const std::size_t n = X.rows();
  if (k <= 0) raise(ErrorCode::InvalidArgument, "kmeans needs k > 0");
  std::set<std::vector<double>> distinct;
  for (std::size_t i = 0; i < n && distinct.size() < static_cast<std::size_t>(k); ++i)
    distinct.emplace(X.row(i).begin(), X.row(i).end());
  if (distinct.size() < static_cast<std::size_t>(k))
    raise(ErrorCode::DegenerateData, "kmeans needs at least k distinct points");

  Rng rng(seed);

  // k-means++ seeding.
  DataMatrix centroids(static_cast<std::size_t>(k), X.cols());
  std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());
  {
    const std::size_t first = static_cast<std::size_t>(rng.uniform_index(n));
    std::copy(X.row(first).begin(), X.row(first).end(), centroids.row(0).begin());
  }
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      min_d2[i] = std::min(min_d2[i], sq_dist(X.row(i), centroids.row(c - 1)));
      total += min_d2[i];
    }
    std::size_t chosen = 0;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += min_d2[i];
        if (acc >= target) {
          chosen = i;
          break;
        }
      }
      // Duplicate centroid guard: pick the farthest point instead.
      if (min_d2[chosen] == 0.0) {
        chosen = static_cast<std::size_t>(
            std::max_element(min_d2.begin(), min_d2.end()) - min_d2.begin());
      }
    }
    std::copy(X.row(chosen).begin(), X.row(chosen).end(), centroids.row(c).begin());
  }

  std::vector<int> assign(n, -1);
  KMeansResult result;
  for (int iter = 1;; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d = sq_dist(X.row(i), centroids.row(c));
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    if (!changed || iter > 1000) {
      result.iterations = iter;
      break;
    }
    // Update step; an emptied cluster keeps its centroid.
    DataMatrix sums(static_cast<std::size_t>(k), X.cols());
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto xi = X.row(i);
      auto s = sums.row(static_cast<std::size_t>(assign[i]));
      for (std::size_t d = 0; d < X.cols(); ++d) s[d] += xi[d];
      ++counts[static_cast<std::size_t>(assign[i])];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] == 0) continue;
      auto dst = centroids.row(static_cast<std::size_t>(c));
      auto s = sums.row(static_cast<std::size_t>(c));
      for (std::size_t d = 0; d < X.cols(); ++d)
        dst[d] = s[d] / static_cast<double>(counts[static_cast<std::size_t>(c)]);
    }
  }

  result.centroids = std::move(centroids);
  result.assignments = std::move(assign);
  result.sse = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    result.sse += sq_dist(X.row(i),
                          result.centroids.row(static_cast<std::size_t>(result.assignments[i])));
  return result;
}

std::vector<int> rank_by_centroid_intensity(const KMeansResult& result) {
  std::vector<int> order(result.centroids.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return result.centroids.at(static_cast<std::size_t>(a), 0) <
           result.centroids.at(static_cast<std::size_t>(b), 0);
  });
  return order;
}

}  // namespace afb::ml
