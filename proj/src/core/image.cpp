#include "afb/core/image.hpp"

#include <set>

namespace afb {

StructuringElement StructuringElement::line3(int direction_index) {
  StructuringElement se;
  switch (direction_index & 3) {
    case 0: se.offsets = {{-1, 0}, {0, 0}, {1, 0}}; break;    // 0 deg
    case 1: se.offsets = {{-1, 1}, {0, 0}, {1, -1}}; break;   // 45 deg
    case 2: se.offsets = {{0, -1}, {0, 0}, {0, 1}}; break;    // 90 deg
    case 3: se.offsets = {{-1, -1}, {0, 0}, {1, 1}}; break;   // 135 deg
  }
  return se;
}

StructuringElement StructuringElement::square(int half) {
  if (half < 0) raise(ErrorCode::InvalidArgument, "square SE half-size < 0");
  StructuringElement se;
  for (int dy = -half; dy <= half; ++dy)
    for (int dx = -half; dx <= half; ++dx)
      se.offsets.emplace_back(dx, dy);
  return se;
}

void StructuringElement::validate() const {
  if (offsets.empty())
    raise(ErrorCode::InvalidArgument, "structuring element has no offsets");
  std::set<std::pair<int, int>> seen(offsets.begin(), offsets.end());
  if (seen.size() != offsets.size())
    raise(ErrorCode::InvalidArgument, "structuring element has duplicate offsets");
}

namespace {
void require_same_size(const BinaryMask& a, const BinaryMask& b) {
  if (!a.same_size(b))
    raise(ErrorCode::DimensionMismatch, "mask dimensions differ");
}
}  // namespace

BinaryMask mask_union(const BinaryMask& a, const BinaryMask& b) {
  require_same_size(a, b);
  BinaryMask out = a;
  auto& o = out.raw();
  const auto& bb = b.raw();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = o[i] | bb[i];
  return out;
}

BinaryMask mask_intersection(const BinaryMask& a, const BinaryMask& b) {
  require_same_size(a, b);
  BinaryMask out = a;
  auto& o = out.raw();
  const auto& bb = b.raw();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = o[i] & bb[i];
  return out;
}

BinaryMask mask_difference(const BinaryMask& a, const BinaryMask& b) {
  require_same_size(a, b);
  BinaryMask out = a;
  auto& o = out.raw();
  const auto& bb = b.raw();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = o[i] & static_cast<std::uint8_t>(1u - bb[i]);
  return out;
}

bool mask_subset(const BinaryMask& inner, const BinaryMask& outer) {
  require_same_size(inner, outer);
  const auto& a = inner.raw();
  const auto& b = outer.raw();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace afb
