#ifndef KNOTMOSAIC_MOSAIC_HPP
#define KNOTMOSAIC_MOSAIC_HPP

#include <compare>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/tile.hpp"

namespace knotmosaic {

/// A word over {x, o} read along one side of a mosaic. Letter 0 is the
/// topmost (vertical sides) or leftmost (horizontal sides) letter and is
/// the least significant bit of the index, so at length 3 the indices run
/// xxx, oxx, xox, oox, xxo, oxo, xoo, ooo.
class BoundaryWord {
 public:
  static constexpr int kMaxLength = 31;

  BoundaryWord(int length, std::uint32_t index) : length_(length), index_(index) {
    if (length < 1 || length > kMaxLength) {
      throw std::invalid_argument("boundary word length out of range: " + std::to_string(length));
    }
    if (index >> length) throw std::invalid_argument("boundary word index exceeds 2^length - 1");
  }

  static BoundaryWord from_letters(std::string_view letters) {
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i] == 'o') {
        index |= std::uint32_t{1} << i;
      } else if (letters[i] != 'x') {
        throw std::invalid_argument("boundary word letters must be 'x' or 'o'");
      }
    }
    return BoundaryWord(int(letters.size()), index);
  }

  int length() const { return length_; }
  std::uint32_t index() const { return index_; }
  bool has_connection(int pos) const { return (index_ >> pos) & 1u; }

  std::string letters() const {
    std::string s(std::size_t(length_), 'x');
    for (int i = 0; i < length_; ++i) {
      if (has_connection(i)) s[std::size_t(i)] = 'o';
    }
    return s;
  }

  friend bool operator==(const BoundaryWord&, const BoundaryWord&) = default;

 private:
  int length_;
  std::uint32_t index_;
};

/// Cyclic rotation by `x` rows and `y` columns.
struct Shift {
  int x = 0;
  int y = 0;

  Shift normalized(int rows, int cols) const {
    return {((x % rows) + rows) % rows, ((y % cols) + cols) % cols};
  }

  friend bool operator==(const Shift&, const Shift&) = default;
  friend auto operator<=>(const Shift&, const Shift&) = default;
};

/// Fundamental period: smallest row and column shifts fixing a mosaic.
struct Period {
  int p = 1;
  int q = 1;

  friend bool operator==(const Period&, const Period&) = default;
  friend auto operator<=>(const Period&, const Period&) = default;
};

/// An m x n grid of tiles, stored row-major as tile ids. Indices are
/// 0-based here; everything printed for humans is 1-based.
class Mosaic {
 public:
  Mosaic(int rows, int cols) : Mosaic(rows, cols, std::vector<std::uint8_t>(cells(rows, cols), 0)) {}

  Mosaic(int rows, int cols, std::vector<std::uint8_t> ids) : rows_(rows), cols_(cols), ids_(std::move(ids)) {
    if (ids_.size() != cells(rows, cols)) {
      throw std::invalid_argument("mosaic needs exactly rows*cols tiles");
    }
    for (auto id : ids_) {
      if (!is_valid_tile_id(id)) throw std::invalid_argument("tile id out of range");
    }
  }

  Mosaic(int rows, int cols, std::initializer_list<int> ids)
      : Mosaic(rows, cols, std::vector<std::uint8_t>(ids.begin(), ids.end())) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return ids_.size(); }

  int id(int i, int j) const { return ids_[index(i, j)]; }
  const Tile& at(int i, int j) const { return kTiles[ids_[index(i, j)]]; }
  void set(int i, int j, int tile_id) {
    if (!is_valid_tile_id(tile_id)) throw std::invalid_argument("tile id out of range");
    ids_[index(i, j)] = std::uint8_t(tile_id);
  }

  const std::vector<std::uint8_t>& ids() const { return ids_; }

  friend bool operator==(const Mosaic&, const Mosaic&) = default;

  /// Dimensions first, then row-major lexicographic order of tile ids.
  friend std::strong_ordering operator<=>(const Mosaic& a, const Mosaic& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.ids_ <=> b.ids_;
  }

 private:
  static std::size_t cells(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("mosaic dimensions must be positive");
    return std::size_t(rows) * std::size_t(cols);
  }
  std::size_t index(int i, int j) const { return std::size_t(i) * std::size_t(cols_) + std::size_t(j); }

  int rows_;
  int cols_;
  std::vector<std::uint8_t> ids_;
};

inline BoundaryWord boundary_word(const Mosaic& mosaic, Side side) {
  std::uint32_t index = 0;
  const bool vertical = side == Side::left || side == Side::right;
  const int length = vertical ? mosaic.rows() : mosaic.cols();
  for (int k = 0; k < length; ++k) {
    bool cp = false;
    switch (side) {
      case Side::left: cp = mosaic.at(k, 0).cp_left; break;
      case Side::right: cp = mosaic.at(k, mosaic.cols() - 1).cp_right; break;
      case Side::top: cp = mosaic.at(0, k).cp_top; break;
      case Side::bottom: cp = mosaic.at(mosaic.rows() - 1, k).cp_bottom; break;
    }
    if (cp) index |= std::uint32_t{1} << k;
  }
  return BoundaryWord(length, index);
}

inline bool is_suitably_connected(const Mosaic& mosaic) {
  for (int i = 0; i < mosaic.rows(); ++i) {
    for (int j = 0; j < mosaic.cols(); ++j) {
      const Tile& t = mosaic.at(i, j);
      if (j + 1 < mosaic.cols() && t.cp_right != mosaic.at(i, j + 1).cp_left) return false;
      if (i + 1 < mosaic.rows() && t.cp_bottom != mosaic.at(i + 1, j).cp_top) return false;
    }
  }
  return true;
}

inline bool is_suitably_boundary_connected(const Mosaic& mosaic) {
  const int last_row = mosaic.rows() - 1;
  const int last_col = mosaic.cols() - 1;
  for (int i = 0; i < mosaic.rows(); ++i) {
    if (mosaic.at(i, 0).cp_left != mosaic.at(i, last_col).cp_right) return false;
  }
  for (int j = 0; j < mosaic.cols(); ++j) {
    if (mosaic.at(0, j).cp_top != mosaic.at(last_row, j).cp_bottom) return false;
  }
  return true;
}

inline bool is_knot_mosaic(const Mosaic& mosaic) {
  if (!is_suitably_connected(mosaic)) return false;
  for (Side s : {Side::left, Side::right, Side::top, Side::bottom}) {
    if (boundary_word(mosaic, s).index() != 0) return false;
  }
  return true;
}

inline bool is_period_mosaic(const Mosaic& mosaic) {
  return is_suitably_connected(mosaic) && is_suitably_boundary_connected(mosaic);
}

/// t_{x,y}: result(i, j) = mosaic(i - x, j - y), indices taken cyclically.
inline Mosaic rotate(const Mosaic& mosaic, Shift shift) {
  const int m = mosaic.rows();
  const int n = mosaic.cols();
  const Shift s = shift.normalized(m, n);
  std::vector<std::uint8_t> ids(mosaic.size());
  for (int i = 0; i < m; ++i) {
    const int src_i = (i - s.x + m) % m;
    for (int j = 0; j < n; ++j) {
      ids[std::size_t(i) * std::size_t(n) + std::size_t(j)] = std::uint8_t(mosaic.id(src_i, (j - s.y + n) % n));
    }
  }
  return Mosaic(m, n, std::move(ids));
}

/// rotate(mosaic, shift) == mosaic, without materializing the rotation.
inline bool is_fixed_by(const Mosaic& mosaic, Shift shift) {
  const int m = mosaic.rows();
  const int n = mosaic.cols();
  const Shift s = shift.normalized(m, n);
  for (int i = 0; i < m; ++i) {
    const int src_i = (i - s.x + m) % m;
    for (int j = 0; j < n; ++j) {
      if (mosaic.id(i, j) != mosaic.id(src_i, (j - s.y + n) % n)) return false;
    }
  }
  return true;
}

/// The row-major lexicographically smallest rotation. Two mosaics are
/// toroidally equivalent iff their canonical forms coincide.
inline Mosaic canonical_form(const Mosaic& mosaic) {
  const int m = mosaic.rows();
  const int n = mosaic.cols();
  Shift best{0, 0};
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == 0 && y == 0) continue;
      // compare rotation (x, y) against the current best without copying
      int cmp = 0;
      for (int i = 0; i < m && cmp == 0; ++i) {
        const int ci = (i - x + m) % m;
        const int bi = (i - best.x + m) % m;
        for (int j = 0; j < n; ++j) {
          const int a = mosaic.id(ci, (j - y + n) % n);
          const int b = mosaic.id(bi, (j - best.y + n) % n);
          if (a != b) {
            cmp = a < b ? -1 : 1;
            break;
          }
        }
      }
      if (cmp < 0) best = {x, y};
    }
  }
  return rotate(mosaic, best);
}

/// Expects a period mosaic; the result satisfies p | rows and q | cols.
inline Period fundamental_period(const Mosaic& mosaic) {
  Period period{mosaic.rows(), mosaic.cols()};
  for (int p = 1; p < mosaic.rows(); ++p) {
    if (is_fixed_by(mosaic, {p, 0})) {
      period.p = p;
      break;
    }
  }
  for (int q = 1; q < mosaic.cols(); ++q) {
    if (is_fixed_by(mosaic, {0, q})) {
      period.q = q;
      break;
    }
  }
  return period;
}

// Text format: "m n" on the first line, then m lines of n tile ids.

inline std::string format_mosaic(const Mosaic& mosaic) {
  std::ostringstream out;
  out << mosaic.rows() << ' ' << mosaic.cols() << '\n';
  for (int i = 0; i < mosaic.rows(); ++i) {
    for (int j = 0; j < mosaic.cols(); ++j) {
      if (j) out << ' ';
      out << mosaic.id(i, j);
    }
    out << '\n';
  }
  return out.str();
}

/// Reads one mosaic; returns nullopt at clean end of input.
inline std::optional<Mosaic> read_mosaic(std::istream& in) {
  int m = 0;
  int n = 0;
  if (!(in >> m)) {
    if (in.eof()) return std::nullopt;
    throw std::invalid_argument("malformed mosaic header");
  }
  if (!(in >> n) || m < 1 || n < 1) throw std::invalid_argument("malformed mosaic header");
  std::vector<std::uint8_t> ids;
  ids.reserve(std::size_t(m) * std::size_t(n));
  for (int k = 0; k < m * n; ++k) {
    int id = -1;
    if (!(in >> id)) throw std::invalid_argument("truncated mosaic body");
    if (!is_valid_tile_id(id)) throw std::invalid_argument("tile id out of range: " + std::to_string(id));
    ids.push_back(std::uint8_t(id));
  }
  return Mosaic(m, n, std::move(ids));
}

inline Mosaic parse_mosaic(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto mosaic = read_mosaic(in);
  if (!mosaic) throw std::invalid_argument("empty mosaic text");
  return *mosaic;
}

/// Reads blank-line separated mosaic blocks until end of input.
inline std::vector<Mosaic> read_mosaics(std::istream& in) {
  std::vector<Mosaic> out;
  while (auto mosaic = read_mosaic(in)) out.push_back(std::move(*mosaic));
  return out;
}

/// One glyph per tile, one line per row.
inline std::string render_ascii(const Mosaic& mosaic) {
  std::string out;
  for (int i = 0; i < mosaic.rows(); ++i) {
    for (int j = 0; j < mosaic.cols(); ++j) out += glyph(mosaic.id(i, j));
    out += '\n';
  }
  return out;
}

}  // namespace knotmosaic

#endif  // KNOTMOSAIC_MOSAIC_HPP
