#ifndef KNOTMOSAIC_CENSUS_HPP
#define KNOTMOSAIC_CENSUS_HPP

#include <map>
#include <optional>
#include <vector>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

/// Period mosaics grouped by fundamental period. For m == n == p prime the
/// shift classes p_(k,1) (fixed by t_{k,1}, not constant) and the free part
/// p^2 are filled in as well.
struct FPeriodCensus {
  int m = 0;
  int n = 0;
  std::map<Period, BigInt> by_period;
  std::vector<BigInt> shift_classes;  // index k: d_{p(k,1)}
  std::optional<BigInt> free_part;    // d_{p^2}

  BigInt total() const {
    BigInt s = 0;
    for (const auto& [key, v] : by_period) s += v;
    return s;
  }
};

}  // namespace knotmosaic

#endif  // KNOTMOSAIC_CENSUS_HPP
