#include "nestpart/morton.hpp"

#include "nestpart/error.hpp"

namespace nestpart {

namespace {

// Spreads the low 21 bits of v so bit i lands at position 3*i.
std::uint64_t dilate(std::uint64_t v) {
  v &= 0x1fffff;
  v = (v | v << 32) & 0x1f00000000ffff;
  v = (v | v << 16) & 0x1f0000ff0000ff;
  v = (v | v << 8) & 0x100f00f00f00f00f;
  v = (v | v << 4) & 0x10c30c30c30c30c3;
  v = (v | v << 2) & 0x1249249249249249;
  return v;
}

std::uint64_t compact(std::uint64_t v) {
  v &= 0x1249249249249249;
  v = (v ^ (v >> 2)) & 0x10c30c30c30c30c3;
  v = (v ^ (v >> 4)) & 0x100f00f00f00f00f;
  v = (v ^ (v >> 8)) & 0x1f0000ff0000ff;
  v = (v ^ (v >> 16)) & 0x1f00000000ffff;
  v = (v ^ (v >> 32)) & 0x1fffff;
  return v;
}

} // namespace

MortonKey morton_encode(std::uint32_t x, std::uint32_t y, std::uint32_t z, int level) {
  if (level < 0 || level > kMaxMortonLevel) {
    throw ValidationError("morton level must be in [0, " + std::to_string(kMaxMortonLevel) +
                          "], got " + std::to_string(level));
  }
  const std::uint64_t side = std::uint64_t{1} << level;
  if (x >= side || y >= side || z >= side) {
    throw ValidationError("morton coordinate out of range for level " + std::to_string(level));
  }
  return MortonKey{dilate(x) | dilate(y) << 1 | dilate(z) << 2, level};
}

std::array<std::uint32_t, 3> morton_decode(const MortonKey& key) {
  return {static_cast<std::uint32_t>(compact(key.code)),
          static_cast<std::uint32_t>(compact(key.code >> 1)),
          static_cast<std::uint32_t>(compact(key.code >> 2))};
}

} // namespace nestpart
