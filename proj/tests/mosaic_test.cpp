#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {
namespace {

TEST(Tile, ConnectionPointCensus) {
  int zero = 0, two = 0, four = 0;
  std::set<std::pair<bool, bool>> lr_pairs;
  std::set<std::array<bool, 4>> two_point_patterns;
  for (const Tile& t : kTiles) {
    const int cp = t.connection_points();
    EXPECT_EQ(cp % 2, 0) << "tile " << int(t.id);
    zero += cp == 0;
    two += cp == 2;
    four += cp == 4;
    if (cp == 2) two_point_patterns.insert({t.cp_left, t.cp_right, t.cp_top, t.cp_bottom});
  }
  EXPECT_EQ(zero, 1);
  EXPECT_EQ(two, 6);
  EXPECT_EQ(four, 4);
  // the six two-point tiles realize the six edge pairs exactly once
  EXPECT_EQ(two_point_patterns.size(), 6u);
  EXPECT_EQ(kTiles[0].connection_points(), 0);
}

TEST(Tile, ConventionForcedByQuadrantTable) {
  // T1 left-bottom, T2 right-bottom, T6 vertical, T5 horizontal
  EXPECT_TRUE(kTiles[1].cp_left && kTiles[1].cp_bottom && !kTiles[1].cp_right && !kTiles[1].cp_top);
  EXPECT_TRUE(kTiles[2].cp_right && kTiles[2].cp_bottom && !kTiles[2].cp_left && !kTiles[2].cp_top);
  EXPECT_TRUE(kTiles[6].cp_top && kTiles[6].cp_bottom && !kTiles[6].cp_left && !kTiles[6].cp_right);
  EXPECT_TRUE(kTiles[5].cp_left && kTiles[5].cp_right && !kTiles[5].cp_top && !kTiles[5].cp_bottom);
  EXPECT_THROW(tile(11), std::out_of_range);
}

TEST(BoundaryWord, ReverseLexicographicOrder) {
  const char* expected[] = {"xxx", "oxx", "xox", "oox", "xxo", "oxo", "xoo", "ooo"};
  for (std::uint32_t i = 0; i < 8; ++i) EXPECT_EQ(BoundaryWord(3, i).letters(), expected[i]);
}

TEST(BoundaryWord, IndexRoundTrips) {
  for (int k = 1; k <= 10; ++k) {
    for (std::uint32_t i = 0; i < (1u << k); ++i) {
      EXPECT_EQ(BoundaryWord::from_letters(BoundaryWord(k, i).letters()).index(), i);
    }
  }
  EXPECT_THROW(BoundaryWord(3, 8), std::invalid_argument);
  EXPECT_THROW(BoundaryWord::from_letters("oxq"), std::invalid_argument);
}

TEST(Mosaic, BoundaryWordsOfSuitableMosaic) {
  const Mosaic m = fixtures::suitable_3x5();
  EXPECT_EQ(boundary_word(m, Side::left).letters(), "oxx");
  EXPECT_EQ(boundary_word(m, Side::right).letters(), "oox");
  EXPECT_EQ(boundary_word(m, Side::top).letters(), "oxoxo");
  EXPECT_EQ(boundary_word(m, Side::bottom).letters(), "oxxox");
  EXPECT_TRUE(is_suitably_connected(m));
  EXPECT_FALSE(is_suitably_boundary_connected(m));
}

TEST(Mosaic, BlankMosaics) {
  const Mosaic single(1, 1, {0});
  for (Side s : {Side::left, Side::right, Side::top, Side::bottom}) EXPECT_EQ(boundary_word(single, s).letters(), "x");
  const Mosaic blank(2, 2);
  EXPECT_EQ(boundary_word(blank, Side::left).letters(), "xx");
  EXPECT_EQ(boundary_word(blank, Side::left).index(), 0u);
  EXPECT_TRUE(is_suitably_boundary_connected(Mosaic(3, 4)));
  EXPECT_TRUE(is_knot_mosaic(Mosaic(3, 4)));
}

TEST(Mosaic, SuitableConnectivity) {
  for (int id = 0; id < 11; ++id) EXPECT_TRUE(is_suitably_connected(Mosaic(1, 1, {id})));
  // vertical line above a blank tile: the shared edge disagrees
  EXPECT_FALSE(is_suitably_connected(Mosaic(2, 1, {6, 0})));
  EXPECT_FALSE(is_suitably_boundary_connected(Mosaic(1, 1, {1})));
  EXPECT_FALSE(is_knot_mosaic(Mosaic(1, 1, {9})));
}

TEST(Mosaic, PeriodOneByOne) {
  std::vector<int> period;
  for (int id = 0; id < 11; ++id) {
    if (is_period_mosaic(Mosaic(1, 1, {id}))) period.push_back(id);
  }
  EXPECT_EQ(period, (std::vector<int>{0, 5, 6, 7, 8, 9, 10}));
}

TEST(Mosaic, HandBuiltExamples) {
  const Mosaic a = fixtures::period_4x3();
  EXPECT_TRUE(is_period_mosaic(a));
  EXPECT_FALSE(is_knot_mosaic(a));
  const Mosaic b = rotate(a, {2, 1});
  EXPECT_NE(a, b);
  EXPECT_TRUE(is_period_mosaic(b));
  EXPECT_EQ(canonical_form(a), canonical_form(b));

  EXPECT_TRUE(is_knot_mosaic(fixtures::trefoil_4x4()));
  EXPECT_TRUE(is_period_mosaic(fixtures::trefoil_4x4()));
  EXPECT_TRUE(is_knot_mosaic(fixtures::unknot_4x3()));
}

TEST(Mosaic, RotateDefinition) {
  const Mosaic a = fixtures::period_4x3();
  const Mosaic r = rotate(a, {1, 2});
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(r.id(i, j), a.id((i - 1 + 4) % 4, (j - 2 + 3) % 3));
  }
  EXPECT_EQ(rotate(a, {4, 3}), a);
  EXPECT_EQ(rotate(a, {-1, 0}), rotate(a, {3, 0}));
}

TEST(Mosaic, RotationIsAGroupAction) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> shift(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 4;
    const int n = 1 + (trial / 4) % 5;
    const Mosaic a = fixtures::random_mosaic(m, n, rng);
    const Shift s1{shift(rng), shift(rng)};
    const Shift s2{shift(rng), shift(rng)};
    EXPECT_EQ(rotate(rotate(a, s1), s2), rotate(a, {s1.x + s2.x, s1.y + s2.y}));
    EXPECT_EQ(rotate(a, {0, 0}), a);
    EXPECT_EQ(is_fixed_by(a, s1), rotate(a, s1) == a);
  }
}

TEST(Mosaic, RotationPreservesPeriodicity) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> sx(0, 2), sy(0, 2);
  for (const Mosaic& a : fixtures::sample_period(3, 3, 500, 2024)) {
    ASSERT_TRUE(is_period_mosaic(a));
    EXPECT_TRUE(is_period_mosaic(rotate(a, {sx(rng), sy(rng)})));
  }
}

TEST(Mosaic, KnotImpliesPeriod) {
  std::size_t knots = 0;
  oracle::enumerate(3, 3, oracle::Predicate::knot, [&](const Mosaic& a) {
    ++knots;
    EXPECT_TRUE(is_period_mosaic(a));
  });
  EXPECT_GT(knots, 1u);
}

TEST(Mosaic, CanonicalForm) {
  EXPECT_EQ(canonical_form(Mosaic(3, 3)), Mosaic(3, 3));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Mosaic a = fixtures::random_mosaic(2 + trial % 3, 2 + trial % 4, rng);
    const Mosaic c = canonical_form(a);
    // c is a rotation of a and no rotation is smaller
    bool is_rotation = false;
    for (int x = 0; x < a.rows(); ++x) {
      for (int y = 0; y < a.cols(); ++y) {
        const Mosaic r = rotate(a, {x, y});
        is_rotation = is_rotation || r == c;
        EXPECT_LE(c.ids(), r.ids());
      }
    }
    EXPECT_TRUE(is_rotation);
    EXPECT_EQ(canonical_form(rotate(a, {trial, 2 * trial})), c);
  }
}

TEST(Mosaic, FundamentalPeriod) {
  const Mosaic f = fixtures::fperiod_2x3_in_4x6();
  ASSERT_TRUE(is_period_mosaic(f));
  EXPECT_EQ(fundamental_period(f), (Period{2, 3}));
  EXPECT_EQ(fundamental_period(Mosaic(3, 5)), (Period{1, 1}));
  EXPECT_EQ(fundamental_period(fixtures::period_4x3()), (Period{4, 3}));
}

TEST(Mosaic, FundamentalPeriodProperties) {
  for (const Mosaic& a : fixtures::all_period(2, 3)) {
    const Period p = fundamental_period(a);
    EXPECT_EQ(2 % p.p, 0);
    EXPECT_EQ(3 % p.q, 0);
    for (int s = 0; s < 3; ++s) {
      for (int t = 0; t < 3; ++t) EXPECT_TRUE(is_fixed_by(a, {s * p.p, t * p.q}));
    }
  }
}

TEST(Mosaic, FundamentalPeriodCensusTwoByTwo) {
  std::map<Period, int> census;
  for (const Mosaic& a : fixtures::all_period(2, 2)) ++census[fundamental_period(a)];
  EXPECT_EQ(census[(Period{1, 1})], 7);
  int total = 0;
  for (const auto& [p, c] : census) total += c;
  EXPECT_EQ(total, 359);
}

TEST(MosaicText, RoundTripAndErrors) {
  std::mt19937 rng(3);
  std::ostringstream many;
  std::vector<Mosaic> written;
  for (int trial = 0; trial < 20; ++trial) {
    const Mosaic a = fixtures::random_mosaic(1 + trial % 4, 1 + trial % 5, rng);
    EXPECT_EQ(parse_mosaic(format_mosaic(a)), a);
    many << format_mosaic(a) << '\n';
    written.push_back(a);
  }
  std::istringstream in(many.str());
  EXPECT_EQ(read_mosaics(in), written);

  EXPECT_EQ(format_mosaic(Mosaic(2, 3, {0, 2, 1, 0, 3, 4})), "2 3\n0 2 1\n0 3 4\n");
  EXPECT_THROW(parse_mosaic("2 2\n0 1 2\n"), std::invalid_argument);
  EXPECT_THROW(parse_mosaic("1 1\n11\n"), std::invalid_argument);
  EXPECT_THROW(parse_mosaic("0 2\n"), std::invalid_argument);
  EXPECT_THROW(Mosaic(2, 2, {0, 1, 2}), std::invalid_argument);
}

TEST(MosaicText, AsciiRendering) {
  EXPECT_EQ(render_ascii(fixtures::unknot_4x3()), "r-7\n|.|\n|.|\nL-J\n");
}

}  // namespace
}  // namespace knotmosaic
