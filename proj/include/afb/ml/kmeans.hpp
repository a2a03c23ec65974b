#pragma once

#include <cstdint>
#include <vector>

#include "afb/ml/data.hpp"

namespace afb::ml {

struct KMeansResult {
  DataMatrix centroids;             // k rows
  std::vector<int> assignments;     // per sample, 0..k-1
  double sse = 0.0;                 // within-cluster sum of squares
  int iterations = 0;
};

/// Lloyd's algorithm with k-means++ style seeding; runs to an assignment
/// fixpoint. Deterministic for a given seed. Raises DegenerateData when the
/// data has fewer than k distinct points.
KMeansResult kmeans(const DataMatrix& X, int k, std::uint64_t seed);

/// Cluster indices ordered by ascending first-coordinate centroid value
/// (used to name intensity clusters dark / mid / high).
std::vector<int> rank_by_centroid_intensity(const KMeansResult& result);

}  // namespace afb::ml
