#ifndef KNOTMOSAIC_TILE_HPP
#define KNOTMOSAIC_TILE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotmosaic {

enum class Side : std::uint8_t { left, right, top, bottom };

/// One of the eleven mosaic tiles together with its connection points.
///
/// Labeling convention (also documented for the mosaic text format):
///   T0  blank
///   T1  arc left-bottom     T2  arc right-bottom
///   T3  arc right-top       T4  arc left-top
///   T5  horizontal line     T6  vertical line
///   T7  double arc (left-top + right-bottom)
///   T8  double arc (left-bottom + right-top)
///   T9  crossing, horizontal strand over
///   T10 crossing, vertical strand over
///
/// T7..T10 share the flag pattern lrtb, so no count depends on which of
/// them is a crossing; only catalogs and renderings do.
struct Tile {
  std::uint8_t id;
  bool cp_left;
  bool cp_right;
  bool cp_top;
  bool cp_bottom;

  constexpr bool has(Side s) const {
    switch (s) {
      case Side::left: return cp_left;
      case Side::right: return cp_right;
      case Side::top: return cp_top;
      case Side::bottom: return cp_bottom;
    }
    return false;
  }

  constexpr int connection_points() const {
    return int(cp_left) + int(cp_right) + int(cp_top) + int(cp_bottom);
  }
};

inline constexpr std::size_t kTileCount = 11;

inline constexpr std::array<Tile, kTileCount> kTiles{{
    {0, false, false, false, false},
    {1, true, false, false, true},
    {2, false, true, false, true},
    {3, false, true, true, false},
    {4, true, false, true, false},
    {5, true, true, false, false},
    {6, false, false, true, true},
    {7, true, true, true, true},
    {8, true, true, true, true},
    {9, true, true, true, true},
    {10, true, true, true, true},
}};

inline constexpr std::array<char, kTileCount> kTileGlyphs{
    {'.', '7', 'r', 'L', 'J', '-', '|', '/', '\\', '+', 'x'}};

constexpr bool is_valid_tile_id(int id) { return id >= 0 && id < int(kTileCount); }

inline const Tile& tile(int id) {
  if (!is_valid_tile_id(id)) throw std::out_of_range("tile id out of range: " + std::to_string(id));
  return kTiles[std::size_t(id)];
}

inline char glyph(int id) { return kTileGlyphs[tile(id).id]; }

}  // namespace knotmosaic

#endif  // KNOTMOSAIC_TILE_HPP
