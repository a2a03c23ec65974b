#include "afb/imaging/ops.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <vector>

namespace afb::imaging {

GrayImage to_intensity(const RgbFrame& frame) {
  GrayImage out(frame.width(), frame.height());
  const auto& r = frame.rdata();
  const auto& g = frame.gdata();
  const auto& b = frame.bdata();
  for (std::size_t i = 0; i < out.pixel_count(); ++i)
    out.data()[i] = (r[i] + g[i] + b[i]) / 3.0;
  return out;
}

GrayImage green_channel(const RgbFrame& frame) {
  GrayImage out(frame.width(), frame.height());
  out.data() = frame.gdata();
  return out;
}

namespace {

// Exact 1-D area-average weights: out cell [o*scale, (o+1)*scale) vs source
// cells [c, c+1). Returned as (first source cell, weights summing to scale).
struct AxisWeights {
  std::vector<int> first;
  std::vector<std::vector<double>> weights;
};

AxisWeights area_weights(int in_n, int out_n) {
  AxisWeights aw;
  aw.first.resize(out_n);
  aw.weights.resize(out_n);
  const double scale = static_cast<double>(in_n) / out_n;
  for (int o = 0; o < out_n; ++o) {
    const double lo = o * scale;
    const double hi = (o + 1) * scale;
    int c0 = static_cast<int>(std::floor(lo));
    int c1 = static_cast<int>(std::ceil(hi)) - 1;
    c0 = std::clamp(c0, 0, in_n - 1);
    c1 = std::clamp(c1, c0, in_n - 1);
    aw.first[o] = c0;
    auto& w = aw.weights[o];
    w.resize(static_cast<std::size_t>(c1 - c0 + 1));
    for (int c = c0; c <= c1; ++c) {
      const double overlap = std::min(hi, static_cast<double>(c + 1)) -
                             std::max(lo, static_cast<double>(c));
      w[static_cast<std::size_t>(c - c0)] = std::max(overlap, 0.0);
    }
  }
  return aw;
}

GrayImage downsample_plane(const std::vector<double>& src, int in_w, int in_h,
                           int out_w, int out_h) {
  const AxisWeights wx = area_weights(in_w, out_w);
  const AxisWeights wy = area_weights(in_h, out_h);
  const double scale_x = static_cast<double>(in_w) / out_w;
  const double scale_y = static_cast<double>(in_h) / out_h;

  // Horizontal pass.
  std::vector<double> tmp(static_cast<std::size_t>(out_w) * in_h);
  for (int y = 0; y < in_h; ++y) {
    const double* row = src.data() + static_cast<std::size_t>(y) * in_w;
    for (int ox = 0; ox < out_w; ++ox) {
      double acc = 0.0;
      const auto& w = wx.weights[ox];
      const int c0 = wx.first[ox];
      for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * row[c0 + static_cast<int>(k)];
      tmp[static_cast<std::size_t>(y) * out_w + ox] = acc / scale_x;
    }
  }
  // Vertical pass.
  GrayImage out(out_w, out_h);
  for (int oy = 0; oy < out_h; ++oy) {
    const auto& w = wy.weights[oy];
    const int c0 = wy.first[oy];
    for (int ox = 0; ox < out_w; ++ox) {
      double acc = 0.0;
      for (std::size_t k = 0; k < w.size(); ++k)
        acc += w[k] * tmp[static_cast<std::size_t>(c0 + static_cast<int>(k)) * out_w + ox];
      out.at(ox, oy) = acc / scale_y;
    }
  }
  return out;
}

void check_downsample_args(int in_w, int in_h, int out_w, int out_h) {
  if (out_w <= 0 || out_h <= 0)
    raise(ErrorCode::InvalidArgument, "downsample target dimensions must be > 0");
  if (out_w > in_w || out_h > in_h)
    raise(ErrorCode::InvalidArgument, "downsample target exceeds source size");
}

}  // namespace

GrayImage downsample_area(const GrayImage& img, int out_width, int out_height) {
  check_downsample_args(img.width(), img.height(), out_width, out_height);
  return downsample_plane(img.data(), img.width(), img.height(), out_width, out_height);
}

RgbFrame downsample_area(const RgbFrame& frame, int out_width, int out_height) {
  check_downsample_args(frame.width(), frame.height(), out_width, out_height);
  RgbFrame out(out_width, out_height);
  out.rdata() = downsample_plane(frame.rdata(), frame.width(), frame.height(),
                                 out_width, out_height).data();
  out.gdata() = downsample_plane(frame.gdata(), frame.width(), frame.height(),
                                 out_width, out_height).data();
  out.bdata() = downsample_plane(frame.bdata(), frame.width(), frame.height(),
                                 out_width, out_height).data();
  return out;
}

SobelResult sobel_gradient(const GrayImage& img) {
  if (img.width() < 3 || img.height() < 3)
    raise(ErrorCode::InvalidArgument, "sobel_gradient needs at least 3x3 input");
  const int w = img.width();
  const int h = img.height();
  SobelResult res{GrayImage(w, h), GrayImage(w, h), GrayImage(w, h)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double p00 = img.at_clamped(x - 1, y - 1);
      const double p10 = img.at_clamped(x, y - 1);
      const double p20 = img.at_clamped(x + 1, y - 1);
      const double p01 = img.at_clamped(x - 1, y);
      const double p21 = img.at_clamped(x + 1, y);
      const double p02 = img.at_clamped(x - 1, y + 1);
      const double p12 = img.at_clamped(x, y + 1);
      const double p22 = img.at_clamped(x + 1, y + 1);
      const double gx = (p20 + 2.0 * p21 + p22) - (p00 + 2.0 * p01 + p02);
      const double gy = (p02 + 2.0 * p12 + p22) - (p00 + 2.0 * p10 + p20);
      res.gx.at(x, y) = gx;
      res.gy.at(x, y) = gy;
      res.magnitude.at(x, y) = std::sqrt(gx * gx + gy * gy);
    }
  }
  return res;
}

GrayImage gaussian_smooth(const GrayImage& img, double sigma, int ksize) {
  if (ksize <= 0 || ksize % 2 == 0)
    raise(ErrorCode::InvalidArgument, "gaussian ksize must be odd and positive");
  if (sigma <= 0.0)
    raise(ErrorCode::InvalidArgument, "gaussian sigma must be > 0");
  const int r = ksize / 2;
  std::vector<double> kernel(static_cast<std::size_t>(ksize));
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    const double v = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    kernel[static_cast<std::size_t>(i + r)] = v;
    sum += v;
  }
  for (auto& v : kernel) v /= sum;

  const int w = img.width();
  const int h = img.height();
  GrayImage tmp(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -r; i <= r; ++i)
        acc += kernel[static_cast<std::size_t>(i + r)] * img.at_clamped(x + i, y);
      tmp.at(x, y) = acc;
    }
  GrayImage out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -r; i <= r; ++i)
        acc += kernel[static_cast<std::size_t>(i + r)] * tmp.at_clamped(x, y + i);
      out.at(x, y) = acc;
    }
  return out;
}

namespace {

enum class MorphMode { Dilate, Erode };

// Domain-restricted flat morphology: samples falling off the image do not
// participate. Dilation looks backwards along the offsets, erosion forwards,
// forming the adjunction that makes closing a closure operator.
GrayImage gray_morph(const GrayImage& img, const StructuringElement& se, MorphMode mode) {
  se.validate();
  const int w = img.width();
  const int h = img.height();
  GrayImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double best = mode == MorphMode::Dilate
                        ? -std::numeric_limits<double>::infinity()
                        : std::numeric_limits<double>::infinity();
      bool any = false;
      for (const auto& [dx, dy] : se.offsets) {
        const int sx = mode == MorphMode::Dilate ? x - dx : x + dx;
        const int sy = mode == MorphMode::Dilate ? y - dy : y + dy;
        if (!img.in_bounds(sx, sy)) continue;
        const double v = img.at(sx, sy);
        best = mode == MorphMode::Dilate ? std::max(best, v) : std::min(best, v);
        any = true;
      }
      out.at(x, y) = any ? best : img.at(x, y);
    }
  }
  return out;
}

}  // namespace

GrayImage gray_dilate(const GrayImage& img, const StructuringElement& se) {
  return gray_morph(img, se, MorphMode::Dilate);
}

GrayImage gray_erode(const GrayImage& img, const StructuringElement& se) {
  return gray_morph(img, se, MorphMode::Erode);
}

GrayImage gray_closing(const GrayImage& img, const StructuringElement& se) {
  return gray_erode(gray_dilate(img, se), se);
}

BinaryMask binary_erode(const BinaryMask& mask, const StructuringElement& se) {
  se.validate();
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bool keep = true;
      for (const auto& [dx, dy] : se.offsets) {
        const int sx = x + dx;
        const int sy = y + dy;
        if (!mask.in_bounds(sx, sy) || !mask.get(sx, sy)) {
          keep = false;
          break;
        }
      }
      out.set(x, y, keep);
    }
  }
  return out;
}

BinaryMask canny_edges(const GrayImage& img, double low_frac, double high_frac) {
  if (!(low_frac > 0.0 && low_frac < high_frac && high_frac <= 1.0))
    raise(ErrorCode::InvalidArgument, "canny thresholds need 0 < low < high <= 1");
  const SobelResult grad = sobel_gradient(img);
  const int w = img.width();
  const int h = img.height();

  double max_mag = 0.0;
  for (double v : grad.magnitude.data()) max_mag = std::max(max_mag, v);
  BinaryMask out(w, h);
  if (max_mag <= 0.0) return out;  // flat image: no edges
  const double low = low_frac * max_mag;
  const double high = high_frac * max_mag;

  // Nonmaxima suppression along the quantized gradient direction. The
  // asymmetric > / >= comparison keeps exactly one pixel of a two-wide
  // plateau straddling a step edge.
  constexpr int kDirX[4] = {1, 1, 0, -1};
  constexpr int kDirY[4] = {0, 1, 1, 1};
  std::vector<std::uint8_t> state(static_cast<std::size_t>(w) * h, 0);  // 0 none, 1 weak, 2 strong
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double m = grad.magnitude.at(x, y);
      if (m < low) continue;
      double angle = std::atan2(grad.gy.at(x, y), grad.gx.at(x, y));
      if (angle < 0.0) angle += 3.14159265358979323846;
      int sector = static_cast<int>(std::lround(angle / 3.14159265358979323846 * 4.0)) & 3;
      const double before =
          grad.magnitude.at_clamped(x - kDirX[sector], y - kDirY[sector]);
      const double after =
          grad.magnitude.at_clamped(x + kDirX[sector], y + kDirY[sector]);
      if (m > before && m >= after)
        state[static_cast<std::size_t>(y) * w + x] = m >= high ? 2 : 1;
    }
  }

  // Hysteresis: keep weak pixels 8-connected to a strong pixel.
  std::deque<std::pair<int, int>> frontier;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (state[static_cast<std::size_t>(y) * w + x] == 2) {
        out.set(x, y, true);
        frontier.emplace_back(x, y);
      }
  while (!frontier.empty()) {
    const auto [x, y] = frontier.front();
    frontier.pop_front();
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const int nx = x + dx;
        const int ny = y + dy;
        if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
        if (state[static_cast<std::size_t>(ny) * w + nx] == 1 && !out.get(nx, ny)) {
          out.set(nx, ny, true);
          frontier.emplace_back(nx, ny);
        }
      }
  }
  return out;
}

BinaryMask upsample_nearest(const BinaryMask& mask, int out_width, int out_height) {
  if (out_width <= 0 || out_height <= 0)
    raise(ErrorCode::InvalidArgument, "upsample target dimensions must be > 0");
  BinaryMask out(out_width, out_height);
  for (int y = 0; y < out_height; ++y) {
    int sy = static_cast<int>((static_cast<long long>(y) * mask.height()) / out_height);
    sy = std::min(sy, mask.height() - 1);
    for (int x = 0; x < out_width; ++x) {
      int sx = static_cast<int>((static_cast<long long>(x) * mask.width()) / out_width);
      sx = std::min(sx, mask.width() - 1);
      out.set(x, y, mask.get(sx, sy));
    }
  }
  return out;
}

}  // namespace afb::imaging
