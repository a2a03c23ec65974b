#pragma once

#include <cstdint>
#include <vector>

#include "afb/core/image.hpp"

namespace afb::preprocess {

enum class OtsuClass : std::uint8_t { Background = 0, Normal = 1, Overexposed = 2 };

/// Three-class threshold partition. The bin pair (bin_t1, bin_t2) is the
/// exact argmax over the histogram; t1/t2 are the scalar bin edges and the
/// label image is assigned directly from bin membership.
struct OtsuPartition {
  double t1 = 0.0;
  double t2 = 0.0;
  int bin_t1 = 0;  // last bin of the background class
  int bin_t2 = 0;  // last bin of the normal class
  std::vector<OtsuClass> labels;
  int width = 0;
  int height = 0;

  BinaryMask mask_of(OtsuClass cls) const;
  /// Union of the normal and overexposed classes (the active-contour init).
  BinaryMask foreground_init() const;
};

/// Multi-level (3-class) Otsu thresholding: exhaustive search over all bin
/// pairs for the maximum between-class variance. Class statistics are exact
/// integer moments over the histogram, so the argmax is reproducible; ties
/// break toward the smallest (t1, t2). Raises DegenerateHistogram when the
/// image has fewer than 3 distinct values.
OtsuPartition multi_otsu3(const GrayImage& img, int bins = 256);

}  // namespace afb::preprocess
