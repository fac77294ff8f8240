#ifndef KNOTMOSAIC_ORACLE_HPP
#define KNOTMOSAIC_ORACLE_HPP

// Brute-force enumeration. Depends on the mosaic predicates only and never
// on state matrices, so it can serve as ground truth for the theorems.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/census.hpp"
#include "knotmosaic/errors.hpp"
#include "knotmosaic/mosaic.hpp"
#include "knotmosaic/tile.hpp"

namespace knotmosaic::oracle {

enum class Predicate { suitably_connected, knot, period };

struct Limits {
  int max_cells = 9;        // all predicates
  int max_knot_cells = 12;  // knot search prunes hard on the boundary
};

using TileOrder = std::array<std::uint8_t, kTileCount>;

inline constexpr TileOrder kNaturalOrder{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}};

inline void check_cap(int m, int n, Predicate predicate, const Limits& limits) {
  if (m < 1 || n < 1) throw std::invalid_argument("mosaic dimensions must be positive");
  const long cells = long(m) * long(n);
  if (cells <= limits.max_cells) return;
  if (predicate == Predicate::knot && cells <= limits.max_knot_cells) return;
  if (predicate == Predicate::period && std::min(m, n) == 2 && std::max(m, n) <= 5) return;
  throw CapExceeded("brute-force enumeration of " + std::to_string(m) + "x" + std::to_string(n) +
                    " mosaics exceeds the configured cap");
}

/// Calls `visit(const Mosaic&)` once per qualifying mosaic and returns the
/// number visited. Tiles are placed row-major; each placement is checked
/// against its left and upper neighbours, and boundary constraints are
/// applied as soon as the tile on the relevant edge is placed. The mosaic
/// passed to `visit` is reused between calls.
template <class Visitor>
std::uint64_t enumerate(int m, int n, Predicate predicate, Visitor&& visit, const Limits& limits = {},
                        const TileOrder& order = kNaturalOrder) {
  check_cap(m, n, predicate, limits);
  Mosaic mosaic(m, n);
  std::uint64_t count = 0;
  const bool knot = predicate == Predicate::knot;
  const bool period = predicate == Predicate::period;

  auto place = [&](auto&& self, int cell) -> void {
    if (cell == m * n) {
      ++count;
      visit(static_cast<const Mosaic&>(mosaic));
      return;
    }
    const int i = cell / n;
    const int j = cell % n;
    for (std::uint8_t id : order) {
      const Tile& t = kTiles[id];
      if (j > 0) {
        if (mosaic.at(i, j - 1).cp_right != t.cp_left) continue;
      } else if (knot && t.cp_left) {
        continue;
      }
      if (i > 0) {
        if (mosaic.at(i - 1, j).cp_bottom != t.cp_top) continue;
      } else if (knot && t.cp_top) {
        continue;
      }
      if (j == n - 1) {
        if (knot && t.cp_right) continue;
        if (period && t.cp_right != (n == 1 ? t.cp_left : mosaic.at(i, 0).cp_left)) continue;
      }
      if (i == m - 1) {
        if (knot && t.cp_bottom) continue;
        if (period && t.cp_bottom != (m == 1 ? t.cp_top : mosaic.at(0, j).cp_top)) continue;
      }
      mosaic.set(i, j, id);
      self(self, cell + 1);
    }
  };
  place(place, 0);
  return count;
}

inline std::uint64_t count_mosaics(int m, int n, Predicate predicate, const Limits& limits = {},
                                   const TileOrder& order = kNaturalOrder) {
  return enumerate(m, n, predicate, [](const Mosaic&) {}, limits, order);
}

/// Row-major tile ids packed four bits each, first tile most significant,
/// so integer order equals lexicographic order.
inline std::uint64_t pack(const Mosaic& mosaic) {
  if (mosaic.size() > 16) throw CapExceeded("packed mosaic keys hold at most 16 tiles");
  std::uint64_t key = 0;
  for (auto id : mosaic.ids()) key = (key << 4) | id;
  return key;
}

inline BigInt count_toroidal_by_canonicalization(int m, int n, const Limits& limits = {}) {
  std::unordered_set<std::uint64_t> classes;
  enumerate(m, n, Predicate::period, [&](const Mosaic& mosaic) { classes.insert(pack(canonical_form(mosaic))); },
            limits);
  return BigInt(static_cast<unsigned long>(classes.size()));
}

/// For a period (p,p)-mosaic with p prime that is neither (1,1)- nor
/// (1,p)-periodic: the smallest k with t_{k,1}(M) = M, or -1 if none.
inline int shift_class(const Mosaic& mosaic) {
  for (int k = 0; k < mosaic.rows(); ++k) {
    if (is_fixed_by(mosaic, {k, 1})) return k;
  }
  return -1;
}

namespace detail {
inline bool is_prime_dim(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}
}  // namespace detail

/// Fundamental-period histogram of all period (m,n)-mosaics, including the
/// shift classes and free part when m == n is prime.
inline FPeriodCensus fperiod_histogram(int m, int n, const Limits& limits = {}) {
  const bool prime_square = m == n && detail::is_prime_dim(m);
  std::map<Period, std::uint64_t> by_period;
  std::vector<std::uint64_t> shift_classes(prime_square ? std::size_t(m) : 0, 0);
  std::uint64_t free_part = 0;
  enumerate(
      m, n, Predicate::period,
      [&](const Mosaic& mosaic) {
        const Period period = fundamental_period(mosaic);
        ++by_period[period];
        if (!prime_square || period == Period{1, 1} || period == Period{1, m}) return;
        const int k = shift_class(mosaic);
        if (k < 0) {
          ++free_part;
        } else {
          ++shift_classes[std::size_t(k)];
        }
      },
      limits);

  FPeriodCensus census{m, n, {}, {}, std::nullopt};
  // every divisor pair gets a key, even when nothing has that period
  for (int p = 1; p <= m; ++p) {
    if (m % p) continue;
    for (int q = 1; q <= n; ++q) {
      if (n % q) continue;
      census.by_period[{p, q}] = BigInt(static_cast<unsigned long>(by_period[{p, q}]));
    }
  }
  if (prime_square) {
    for (auto c : shift_classes) census.shift_classes.emplace_back(static_cast<unsigned long>(c));
    census.free_part = BigInt(static_cast<unsigned long>(free_part));
  }
  return census;
}

/// Everything the oracle knows about one size.
struct EnumerationReport {
  int m = 0;
  int n = 0;
  BigInt knot;
  BigInt period;
  BigInt toroidal;
  std::map<Period, BigInt> fperiod;
  std::map<Shift, BigInt> fixed;  // shift -> number of period mosaics it fixes

  /// mn * toroidal == sum of fixed counts.
  bool burnside_consistent() const {
    BigInt sum = 0;
    for (const auto& [s, c] : fixed) sum += c;
    return sum == toroidal * (m * n);
  }
};

inline EnumerationReport enumerate_report(int m, int n, const Limits& limits = {}) {
  std::unordered_set<std::uint64_t> classes;
  std::map<Period, std::uint64_t> fperiod;
  std::vector<std::uint64_t> fixed(std::size_t(m) * std::size_t(n), 0);
  const std::uint64_t period_count = enumerate(
      m, n, Predicate::period,
      [&](const Mosaic& mosaic) {
        classes.insert(pack(canonical_form(mosaic)));
        ++fperiod[fundamental_period(mosaic)];
        for (int x = 0; x < m; ++x) {
          for (int y = 0; y < n; ++y) {
            if (is_fixed_by(mosaic, {x, y})) ++fixed[std::size_t(x) * std::size_t(n) + std::size_t(y)];
          }
        }
      },
      limits);

  EnumerationReport report;
  report.m = m;
  report.n = n;
  report.period = BigInt(static_cast<unsigned long>(period_count));
  report.toroidal = BigInt(static_cast<unsigned long>(classes.size()));
  report.knot = BigInt(static_cast<unsigned long>(count_mosaics(m, n, Predicate::knot, limits)));
  for (const auto& [p, c] : fperiod) report.fperiod[p] = BigInt(static_cast<unsigned long>(c));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < n; ++y) {
      report.fixed[{x, y}] = BigInt(static_cast<unsigned long>(fixed[std::size_t(x) * std::size_t(n) + std::size_t(y)]));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Toroidal (2,2) catalog
// ---------------------------------------------------------------------------

struct CatalogEntry {
  Mosaic representative;
  std::string kind;  // "constant", "(1,2)", "(2,1)", "2_(1,1)" or "free"
  int orbit_size = 0;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::map<std::string, int> class_counts;

  // An earlier published catalog listed 98 mosaics, 10 of them twice, and
  // missed 22.
  static constexpr int kPreviouslyListed = 98;
  static constexpr int kPreviouslyDuplicated = 10;
  static constexpr int kPreviouslyMissing = 22;

  static constexpr int reconciled_total() {
    return kPreviouslyListed - kPreviouslyDuplicated + kPreviouslyMissing;
  }
};

inline int orbit_size(const Mosaic& mosaic) {
  std::set<std::vector<std::uint8_t>> seen;
  for (int x = 0; x < mosaic.rows(); ++x) {
    for (int y = 0; y < mosaic.cols(); ++y) seen.insert(rotate(mosaic, {x, y}).ids());
  }
  return int(seen.size());
}

/// Canonical representatives of all toroidal (2,2)-mosaics in ascending
/// canonical order.
inline Catalog catalog_toroidal_2_2() {
  std::set<Mosaic> reps;
  enumerate(2, 2, Predicate::period, [&](const Mosaic& mosaic) { reps.insert(canonical_form(mosaic)); });
  Catalog catalog;
  for (const Mosaic& rep : reps) {
    const Period period = fundamental_period(rep);
    std::string kind;
    if (period == Period{1, 1}) {
      kind = "constant";
    } else if (period == Period{1, 2}) {
      kind = "(1,2)";
    } else if (period == Period{2, 1}) {
      kind = "(2,1)";
    } else if (shift_class(rep) == 1) {
      kind = "2_(1,1)";
    } else {
      kind = "free";
    }
    ++catalog.class_counts[kind];
    catalog.entries.push_back({rep, kind, orbit_size(rep)});
  }
  return catalog;
}

}  // namespace knotmosaic::oracle

#endif  // KNOTMOSAIC_ORACLE_HPP
