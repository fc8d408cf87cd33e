#pragma once

#include <array>
#include <compare>
#include <cstdint>

namespace nestpart {

// Z-order key for a cell at a given refinement level. The code interleaves
// the bits of the (x, y, z) cell coordinates with x in the least significant
// position of each bit triple, so sorting by code traverses the space-filling
// curve.
struct MortonKey {
  std::uint64_t code = 0;
  int level = 0;

  auto operator<=>(const MortonKey&) const = default;
};

inline constexpr int kMaxMortonLevel = 20; // 3 * 20 bits fit a 64-bit code

// Interleaves the coordinate bits. Requires x, y, z < 2^level and
// level <= kMaxMortonLevel.
MortonKey morton_encode(std::uint32_t x, std::uint32_t y, std::uint32_t z, int level);

// Inverse of morton_encode.
std::array<std::uint32_t, 3> morton_decode(const MortonKey& key);

} // namespace nestpart
