#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "afb/core/error.hpp"

namespace afb {

/// Single-channel scalar field. Pixels are doubles, row-major, origin at the
/// top-left, x to the right, y down.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, double fill = 0.0)
      : width_(width), height_(height),
        data_(static_cast<std::size_t>(width) * height, fill) {
    if (width <= 0 || height <= 0)
      raise(ErrorCode::InvalidArgument, "GrayImage dimensions must be > 0");
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return data_.size(); }

  double& at(int x, int y) {
    assert(in_bounds(x, y));
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }
  double at(int x, int y) const {
    assert(in_bounds(x, y));
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  /// Replicate-border access: coordinates are clamped into the image.
  double at_clamped(int x, int y) const {
    if (x < 0) x = 0; else if (x >= width_) x = width_ - 1;
    if (y < 0) y = 0; else if (y >= height_) y = height_ - 1;
    return data_[static_cast<std::size_t>(y) * width_ + x];
  }

  bool in_bounds(int x, int y) const noexcept {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  std::vector<double>& data() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

  bool same_size(const GrayImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

/// Per-pixel boolean membership mask.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, bool fill = false)
      : width_(width), height_(height),
        set_(static_cast<std::size_t>(width) * height, fill ? 1u : 0u) {
    if (width <= 0 || height <= 0)
      raise(ErrorCode::InvalidArgument, "BinaryMask dimensions must be > 0");
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return set_.size(); }

  bool get(int x, int y) const {
    assert(in_bounds(x, y));
    return set_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y, bool value) {
    assert(in_bounds(x, y));
    set_[static_cast<std::size_t>(y) * width_ + x] = value ? 1u : 0u;
  }

  bool in_bounds(int x, int y) const noexcept {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto v : set_) n += v;
    return n;
  }

  bool same_size(const BinaryMask& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  std::vector<std::uint8_t>& raw() noexcept { return set_; }
  const std::vector<std::uint8_t>& raw() const noexcept { return set_; }

  bool operator==(const BinaryMask& other) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> set_;
};

/// Full-resolution three-channel frame, channels as planes in [0,1].
class RgbFrame {
 public:
  RgbFrame() = default;
  RgbFrame(int width, int height)
      : width_(width), height_(height) {
    if (width <= 0 || height <= 0)
      raise(ErrorCode::InvalidArgument, "RgbFrame dimensions must be > 0");
    const std::size_t n = static_cast<std::size_t>(width) * height;
    r_.assign(n, 0.0);
    g_.assign(n, 0.0);
    b_.assign(n, 0.0);
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return r_.size(); }

  double& r(int x, int y) { return r_[index(x, y)]; }
  double& g(int x, int y) { return g_[index(x, y)]; }
  double& b(int x, int y) { return b_[index(x, y)]; }
  double r(int x, int y) const { return r_[index(x, y)]; }
  double g(int x, int y) const { return g_[index(x, y)]; }
  double b(int x, int y) const { return b_[index(x, y)]; }

  std::vector<double>& rdata() noexcept { return r_; }
  std::vector<double>& gdata() noexcept { return g_; }
  std::vector<double>& bdata() noexcept { return b_; }
  const std::vector<double>& rdata() const noexcept { return r_; }
  const std::vector<double>& gdata() const noexcept { return g_; }
  const std::vector<double>& bdata() const noexcept { return b_; }

 private:
  std::size_t index(int x, int y) const {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> r_, g_, b_;
};

/// Flat structuring element given as integer pixel offsets.
struct StructuringElement {
  std::vector<std::pair<int, int>> offsets;  // (dx, dy)

  /// Centered 1x3 line inside a 3x3 neighborhood. Directions are indexed
  /// 0..3 for 0, 45, 90 and 135 degrees (y axis pointing down).
  static StructuringElement line3(int direction_index);

  /// Full (2*half+1)^2 square block centered at the origin.
  static StructuringElement square(int half);

  void validate() const;
};

// Set algebra over same-size masks. Dimension mismatch raises.
BinaryMask mask_union(const BinaryMask& a, const BinaryMask& b);
BinaryMask mask_intersection(const BinaryMask& a, const BinaryMask& b);
BinaryMask mask_difference(const BinaryMask& a, const BinaryMask& b);
bool mask_subset(const BinaryMask& inner, const BinaryMask& outer);

}  // namespace afb
