#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "knotmosaic/counting.hpp"
#include "knotmosaic/errors.hpp"
#include "knotmosaic/oracle.hpp"

namespace knotmosaic {
namespace {

using oracle::Predicate;

TEST(Enumerate, OneByOnePeriod) {
  std::vector<int> ids;
  oracle::enumerate(1, 1, Predicate::period, [&](const Mosaic& a) { ids.push_back(a.id(0, 0)); });
  EXPECT_EQ(ids, (std::vector<int>{0, 5, 6, 7, 8, 9, 10}));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(oracle::count_mosaics(2, 2, Predicate::period), 359u);
  EXPECT_EQ(oracle::count_mosaics(1, 1, Predicate::suitably_connected), 11u);
  EXPECT_EQ(BigInt(static_cast<unsigned long>(oracle::count_mosaics(2, 2, Predicate::suitably_connected))),
            entry_sum(mat_pow(build_quad(2).full_column(), 2)));
  EXPECT_EQ(oracle::count_mosaics(2, 2, Predicate::knot), 2u);
}

TEST(Enumerate, EmitsEachMosaicOnceAndOnlyQualifyingOnes) {
  std::set<std::vector<std::uint8_t>> seen;
  std::size_t visits = 0;
  oracle::enumerate(2, 3, Predicate::period, [&](const Mosaic& a) {
    ++visits;
    EXPECT_TRUE(is_period_mosaic(a));
    seen.insert(a.ids());
  });
  EXPECT_EQ(seen.size(), visits);

  // exhaustive: a filter over all suitably connected mosaics finds the same set
  std::set<std::vector<std::uint8_t>> filtered;
  oracle::enumerate(2, 3, Predicate::suitably_connected, [&](const Mosaic& a) {
    if (is_period_mosaic(a)) filtered.insert(a.ids());
  });
  EXPECT_EQ(filtered, seen);
}

TEST(Enumerate, TileOrderDoesNotChangeCounts) {
  std::mt19937 rng(17);
  oracle::TileOrder order = oracle::kNaturalOrder;
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    for (Predicate p : {Predicate::period, Predicate::knot, Predicate::suitably_connected}) {
      EXPECT_EQ(oracle::count_mosaics(2, 3, p, {}, order), oracle::count_mosaics(2, 3, p));
      EXPECT_EQ(oracle::count_mosaics(3, 3, p, {}, order), oracle::count_mosaics(3, 3, p));
    }
  }
}

TEST(Enumerate, Caps) {
  EXPECT_THROW(oracle::count_mosaics(3, 4, Predicate::period), CapExceeded);
  EXPECT_THROW(oracle::count_mosaics(2, 6, Predicate::period), CapExceeded);
  EXPECT_THROW(oracle::count_mosaics(4, 4, Predicate::knot), CapExceeded);
  EXPECT_THROW(oracle::count_mosaics(0, 4, Predicate::knot), std::invalid_argument);
  oracle::Limits tight;
  tight.max_cells = 4;
  EXPECT_THROW(oracle::count_mosaics(1, 5, Predicate::suitably_connected, tight), CapExceeded);
}

TEST(Canonicalization, ToroidalCounts) {
  EXPECT_EQ(oracle::count_toroidal_by_canonicalization(2, 2), 110);
  EXPECT_EQ(oracle::count_toroidal_by_canonicalization(1, 3), 49);
  EXPECT_EQ(oracle::count_toroidal_by_canonicalization(2, 3), 954);
}

TEST(Canonicalization, InvariantUnderRandomRotations) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> shift(0, 2);
  for (const Mosaic& a : fixtures::sample_period(3, 3, 1000, 4242)) {
    EXPECT_EQ(canonical_form(rotate(a, {shift(rng), shift(rng)})), canonical_form(a));
  }
}

TEST(Histogram, Examples) {
  const auto h11 = oracle::fperiod_histogram(1, 1);
  EXPECT_EQ(h11.by_period.size(), 1u);
  EXPECT_EQ(h11.by_period.at({1, 1}), 7);

  const auto h22 = oracle::fperiod_histogram(2, 2);
  EXPECT_EQ(h22.by_period.at({1, 1}), 7);
  EXPECT_EQ(h22.by_period.at({1, 2}), 22);
  ASSERT_EQ(h22.shift_classes.size(), 2u);
  EXPECT_EQ(h22.shift_classes[0], 22);
  EXPECT_EQ(h22.shift_classes[1], 16);
  EXPECT_EQ(*h22.free_part, 292);
  EXPECT_EQ(h22.total(), 359);

  EXPECT_EQ(oracle::fperiod_histogram(2, 3).by_period, fperiod_census_coprime(2, 3).by_period);
}

TEST(Histogram, MatchesRecursionKeyByKey) {
  for (int m = 1; m <= 9; ++m) {
    for (int n = 1; m * n <= 9; ++n) {
      EXPECT_EQ(oracle::fperiod_histogram(m, n).by_period, fperiod_census(m, n).by_period) << m << "," << n;
    }
  }
  EXPECT_EQ(oracle::fperiod_histogram(2, 4).by_period, fperiod_census(2, 4).by_period);
}

TEST(Report, BurnsideConsistent) {
  for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {1, 4}, {2, 3}, {3, 3}, {2, 4}}) {
    const auto report = oracle::enumerate_report(m, n);
    EXPECT_TRUE(report.burnside_consistent()) << m << "," << n;
    EXPECT_LE(report.toroidal, report.period);
    EXPECT_LE(report.period, report.toroidal * (m * n));
    EXPECT_EQ(report.fixed.at({0, 0}), report.period);
    EXPECT_EQ(report.fixed.size(), std::size_t(m * n));
  }
  EXPECT_EQ(oracle::enumerate_report(2, 2).toroidal, 110);
}

TEST(Catalog, TwoByTwo) {
  const auto catalog = oracle::catalog_toroidal_2_2();
  ASSERT_EQ(catalog.entries.size(), 110u);
  std::set<Mosaic> canonical;
  int orbit_total = 0;
  for (const auto& e : catalog.entries) {
    EXPECT_TRUE(is_period_mosaic(e.representative));
    EXPECT_EQ(canonical_form(e.representative), e.representative);
    canonical.insert(canonical_form(e.representative));
    orbit_total += e.orbit_size;
  }
  EXPECT_EQ(canonical.size(), 110u);  // pairwise inequivalent
  EXPECT_EQ(orbit_total, 359);
  EXPECT_TRUE(std::is_sorted(catalog.entries.begin(), catalog.entries.end(),
                             [](const auto& a, const auto& b) { return a.representative < b.representative; }));
}

TEST(Catalog, ReconcilesWithOrbitSizes) {
  const auto catalog = oracle::catalog_toroidal_2_2();
  const auto& k = catalog.class_counts;
  // 7 constants, 22/2 + 22/2 one-directional periods, 16/2 diagonal, 292/4 free
  EXPECT_EQ(k.at("constant"), 7);
  EXPECT_EQ(k.at("(1,2)"), 22 / 2);
  EXPECT_EQ(k.at("(2,1)"), 22 / 2);
  EXPECT_EQ(k.at("2_(1,1)"), 16 / 2);
  EXPECT_EQ(k.at("free"), 292 / 4);
  EXPECT_EQ(7 + 22 / 2 + 22 / 2 + 16 / 2 + 292 / 4, 110);
  for (const auto& e : catalog.entries) {
    const int expected = e.kind == "constant" ? 1 : e.kind == "free" ? 4 : 2;
    EXPECT_EQ(e.orbit_size, expected) << e.kind;
  }
  EXPECT_EQ(oracle::Catalog::reconciled_total(), 110);
}

TEST(ShiftClass, Values) {
  EXPECT_EQ(oracle::shift_class(Mosaic(2, 2)), 0);
  EXPECT_EQ(oracle::shift_class(Mosaic(2, 2, {5, 6, 6, 5})), 1);
  EXPECT_EQ(oracle::shift_class(Mosaic(2, 2, {5, 6, 7, 8})), -1);
  EXPECT_EQ(oracle::pack(Mosaic(1, 2, {1, 10})), 0x1Au);
  EXPECT_THROW(oracle::pack(Mosaic(3, 6)), CapExceeded);
}

}  // namespace
}  // namespace knotmosaic
