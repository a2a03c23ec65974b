#include "afb/preprocess/chan_vese.hpp"

#include <cstddef>

namespace afb::preprocess {

namespace {

struct Means {
  double inside;
  double outside;
};

Means region_means(const GrayImage& img, const BinaryMask& labels) {
  double sum_in = 0.0, sum_out = 0.0, total = 0.0;
  std::size_t n_in = 0, n_out = 0;
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    const double v = img.data()[i];
    total += v;
    if (labels.raw()[i]) {
      sum_in += v;
      ++n_in;
    } else {
      sum_out += v;
      ++n_out;
    }
  }
  const double global = total / static_cast<double>(img.pixel_count());
  // An emptied phase gets the global mean as a neutral target.
  return {n_in ? sum_in / static_cast<double>(n_in) : global,
          n_out ? sum_out / static_cast<double>(n_out) : global};
}

}  // namespace

BinaryMask chan_vese_foreground(
    const GrayImage& img, const BinaryMask& init, const ChanVeseParams& params,
    const std::function<void(const BinaryMask&)>& on_iteration) {
  if (init.width() != img.width() || init.height() != img.height())
    raise(ErrorCode::DimensionMismatch, "chan_vese init size differs from image");
  const std::size_t count = init.count();
  if (count == 0 || count == init.pixel_count())
    raise(ErrorCode::InitDegenerate, "chan_vese init mask is empty or full");

  const int w = img.width();
  const int h = img.height();
  BinaryMask labels = init;
  const std::size_t flip_threshold =
      static_cast<std::size_t>(params.tol * static_cast<double>(img.pixel_count()));

  for (int iter = 0; iter < params.max_iters; ++iter) {
    const Means c = region_means(img, labels);
    std::size_t flips = 0;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double v = img.at(x, y);
        const bool inside = labels.get(x, y);
        const double err_in = (v - c.inside) * (v - c.inside);
        const double err_out = (v - c.outside) * (v - c.outside);
        const double data_delta = inside ? err_out - err_in : err_in - err_out;

        int same = 0, diff = 0;
        if (x > 0) (labels.get(x - 1, y) == inside ? same : diff)++;
        if (x + 1 < w) (labels.get(x + 1, y) == inside ? same : diff)++;
        if (y > 0) (labels.get(x, y - 1) == inside ? same : diff)++;
        if (y + 1 < h) (labels.get(x, y + 1) == inside ? same : diff)++;
        const double length_delta = params.mu * static_cast<double>(same - diff);

        if (data_delta + length_delta < 0.0) {
          labels.set(x, y, !inside);
          ++flips;
        }
      }
    }
    if (on_iteration) on_iteration(labels);
    if (flips <= flip_threshold) break;
  }
  return labels;
}

}  // namespace afb::preprocess
