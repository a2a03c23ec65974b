#pragma once

#include <functional>

#include "afb/core/image.hpp"

namespace afb::preprocess {

struct ChanVeseParams {
  double mu = 0.2;        // boundary-length weight
  int max_iters = 200;
  double tol = 0.001;     // stop when flipped pixels < tol * pixel count
};

/// Two-phase piecewise-constant (Chan-Vese) segmentation by direct energy
/// descent: alternate region-mean updates with Gauss-Seidel label flips that
/// are only taken when they lower
///   E = sum_in (v - c_in)^2 + sum_out (v - c_out)^2 + mu * |boundary|
/// where |boundary| counts 4-neighbor label disagreements. The energy is
/// non-increasing across iterations by construction.
///
/// `on_iteration`, when set, is invoked with the labels after every sweep
/// (instrumentation for energy audits).
BinaryMask chan_vese_foreground(
    const GrayImage& img, const BinaryMask& init, const ChanVeseParams& params,
    const std::function<void(const BinaryMask&)>& on_iteration = nullptr);

}  // namespace afb::preprocess
