#ifndef KNOTMOSAIC_TESTS_FIXTURES_HPP
#define KNOTMOSAIC_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "knotmosaic/mosaic.hpp"
#include "knotmosaic/oracle.hpp"

namespace knotmosaic::fixtures {

// Tile ids follow the convention in tile.hpp; 7..10 are the four-point tiles.

/// Suitably connected (3,5)-mosaic with boundary words
/// left oxx, right oox, top oxoxo, bottom oxxox.
inline Mosaic suitable_3x5() {
  return Mosaic(3, 5, {7, 5, 7, 5, 7,  //
                       6, 0, 6, 2, 7,  //
                       6, 0, 3, 7, 4});
}

/// Period (4,3)-mosaic with connection points across the side boundary.
inline Mosaic period_4x3() {
  return Mosaic(4, 3, {2, 5, 1,  //
                       7, 5, 8,  //
                       3, 1, 6,  //
                       0, 3, 4});
}

/// Knot (4,3)-mosaic: a single unknotted loop.
inline Mosaic unknot_4x3() {
  return Mosaic(4, 3, {2, 5, 1,  //
                       6, 0, 6,  //
                       6, 0, 6,  //
                       3, 5, 4});
}

/// Knot (4,4)-mosaic with three crossings (trefoil diagram).
inline Mosaic trefoil_4x4() {
  return Mosaic(4, 4, {0, 2, 1, 0,    //
                       2, 9, 10, 1,   //
                       3, 10, 4, 6,   //
                       0, 3, 5, 4});
}

/// (4,6)-mosaic made of 2x2 copies of a period (2,3)-patch, so its
/// fundamental period is (2,3).
inline Mosaic fperiod_2x3_in_4x6() {
  const int patch[2][3] = {{2, 1, 0}, {3, 4, 0}};
  std::vector<std::uint8_t> ids;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 6; ++j) ids.push_back(std::uint8_t(patch[i % 2][j % 3]));
  }
  return Mosaic(4, 6, std::move(ids));
}

/// All period mosaics of one size, via the oracle.
inline std::vector<Mosaic> all_period(int m, int n) {
  std::vector<Mosaic> out;
  oracle::enumerate(m, n, oracle::Predicate::period, [&](const Mosaic& mosaic) { out.push_back(mosaic); });
  return out;
}

/// `count` period mosaics drawn uniformly (with replacement) from all
/// period mosaics of one size.
inline std::vector<Mosaic> sample_period(int m, int n, std::size_t count, std::uint32_t seed) {
  const auto all = all_period(m, n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<Mosaic> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(all[pick(rng)]);
  return out;
}

inline Mosaic random_mosaic(int m, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> tile(0, 10);
  std::vector<std::uint8_t> ids(std::size_t(m) * std::size_t(n));
  for (auto& id : ids) id = std::uint8_t(tile(rng));
  return Mosaic(m, n, std::move(ids));
}

}  // namespace knotmosaic::fixtures

#endif  // KNOTMOSAIC_TESTS_FIXTURES_HPP
