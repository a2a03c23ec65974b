#pragma once

#include "afb/core/image.hpp"

namespace afb::imaging {

/// Intensity component: per-pixel (r+g+b)/3.
GrayImage to_intensity(const RgbFrame& frame);

/// Copy of the green plane.
GrayImage green_channel(const RgbFrame& frame);

/// Area-averaging (box) downsampler. Each output pixel is the mean of its
/// source box; fractional boxes use exact overlap weights, so integer ratios
/// reduce to plain box means and constants are preserved.
GrayImage downsample_area(const GrayImage& img, int out_width, int out_height);
RgbFrame downsample_area(const RgbFrame& frame, int out_width, int out_height);

struct SobelResult {
  GrayImage gx;
  GrayImage gy;
  GrayImage magnitude;
};

/// 3x3 Sobel with replicate border padding, magnitude = sqrt(gx^2 + gy^2).
SobelResult sobel_gradient(const GrayImage& img);

/// Separable normalized Gaussian, replicate padding. ksize must be odd.
GrayImage gaussian_smooth(const GrayImage& img, double sigma, int ksize);

/// Flat grayscale dilation / erosion / closing. Off-image samples are
/// ignored (domain-restricted morphology), which keeps closing extensive and
/// idempotent at the borders for every structuring element.
GrayImage gray_dilate(const GrayImage& img, const StructuringElement& se);
GrayImage gray_erode(const GrayImage& img, const StructuringElement& se);
GrayImage gray_closing(const GrayImage& img, const StructuringElement& se);

/// Binary erosion; pixels outside the image are treated as outside the mask.
BinaryMask binary_erode(const BinaryMask& mask, const StructuringElement& se);

/// Canny edges: Sobel gradient, nonmaxima suppression along the quantized
/// gradient direction, hysteresis linking. Thresholds are fractions of the
/// per-image maximum gradient magnitude; a zero-gradient image yields an
/// empty mask.
BinaryMask canny_edges(const GrayImage& img, double low_frac, double high_frac);

/// Nearest-neighbor mask upsampling (masks are categorical).
BinaryMask upsample_nearest(const BinaryMask& mask, int out_width, int out_height);

}  // namespace afb::imaging
