#include "afb/preprocess/otsu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace afb::preprocess {

BinaryMask OtsuPartition::mask_of(OtsuClass cls) const {
  BinaryMask mask(width, height);
  for (std::size_t i = 0; i < labels.size(); ++i)
    mask.raw()[i] = labels[i] == cls ? 1u : 0u;
  return mask;
}

BinaryMask OtsuPartition::foreground_init() const {
  BinaryMask mask(width, height);
  for (std::size_t i = 0; i < labels.size(); ++i)
    mask.raw()[i] = labels[i] != OtsuClass::Background ? 1u : 0u;
  return mask;
}

OtsuPartition multi_otsu3(const GrayImage& img, int bins) {
  if (bins < 8) raise(ErrorCode::InvalidArgument, "multi_otsu3 needs bins >= 8");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : img.data()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  // Distinct-value precondition: scan until three are seen.
  double first = img.data()[0];
  double second = first;
  bool has_second = false, has_third = false;
  for (double v : img.data()) {
    if (v != first && !has_second) {
      second = v;
      has_second = true;
    } else if (has_second && v != first && v != second) {
      has_third = true;
      break;
    }
  }
  if (!has_third)
    raise(ErrorCode::DegenerateHistogram, "image has fewer than 3 distinct values");

  const double range = hi - lo;
  std::vector<std::int64_t> count(static_cast<std::size_t>(bins), 0);
  std::vector<int> bin_of(img.pixel_count());
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    int b = static_cast<int>(std::floor((img.data()[i] - lo) / range * bins));
    b = std::clamp(b, 0, bins - 1);
    bin_of[i] = b;
    ++count[static_cast<std::size_t>(b)];
  }

  // Prefix sums of counts and bin-index moments (both exact integers).
  std::vector<std::int64_t> cum_n(static_cast<std::size_t>(bins) + 1, 0);
  std::vector<std::int64_t> cum_m(static_cast<std::size_t>(bins) + 1, 0);
  for (int b = 0; b < bins; ++b) {
    cum_n[b + 1] = cum_n[b] + count[b];
    cum_m[b + 1] = cum_m[b] + count[b] * b;
  }
  const auto class_term = [&](int from, int to) -> long double {
    // Contribution sum(w_k * mu_k^2) of bins [from, to]; empty class -> 0.
    const std::int64_t n = cum_n[to + 1] - cum_n[from];
    if (n == 0) return 0.0L;
    const std::int64_t m = cum_m[to + 1] - cum_m[from];
    return static_cast<long double>(m) * static_cast<long double>(m) /
           static_cast<long double>(n);
  };

  // Maximizing between-class variance is maximizing sum(w_k mu_k^2): the
  // grand term W*mu_T^2 is constant across pairs.
  long double best = -1.0L;
  int best_i = 0, best_j = 1;
  for (int i = 0; i + 2 < bins; ++i) {
    const long double t0 = class_term(0, i);
    for (int j = i + 1; j + 1 < bins; ++j) {
      const long double f = t0 + class_term(i + 1, j) + class_term(j + 1, bins - 1);
      if (f > best) {  // strict: first (smallest) pair wins ties
        best = f;
        best_i = i;
        best_j = j;
      }
    }
  }

  OtsuPartition part;
  part.width = img.width();
  part.height = img.height();
  part.bin_t1 = best_i;
  part.bin_t2 = best_j;
  part.t1 = lo + (best_i + 1) * range / bins;
  part.t2 = lo + (best_j + 1) * range / bins;
  part.labels.resize(img.pixel_count());
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    const int b = bin_of[i];
    part.labels[i] = b <= best_i   ? OtsuClass::Background
                     : b <= best_j ? OtsuClass::Normal
                                   : OtsuClass::Overexposed;
  }
  return part;
}

}  // namespace afb::preprocess
