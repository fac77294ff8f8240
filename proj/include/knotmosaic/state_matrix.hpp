#ifndef KNOTMOSAIC_STATE_MATRIX_HPP
#define KNOTMOSAIC_STATE_MATRIX_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/errors.hpp"

namespace knotmosaic {

/// Largest state-matrix dimension built without an explicit override.
inline constexpr std::size_t kDefaultDimCap = std::size_t{1} << 13;

/// Dense square matrix of nonnegative big integers, row-major.
class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  BigMatrix(std::initializer_list<std::initializer_list<long>> rows) : BigMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw std::invalid_argument("matrix literal is not square");
      std::size_t j = 0;
      for (long v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static BigMatrix identity(std::size_t dim) {
    BigMatrix id(dim);
    for (std::size_t i = 0; i < dim; ++i) id(i, i) = 1;
    return id;
  }

  /// [[a, b], [c, d]] with equally sized square blocks.
  static BigMatrix blocks(const BigMatrix& a, const BigMatrix& b, const BigMatrix& c, const BigMatrix& d) {
    const std::size_t h = a.dim();
    if (b.dim() != h || c.dim() != h || d.dim() != h) throw std::invalid_argument("block size mismatch");
    BigMatrix out(2 * h);
    for (std::size_t i = 0; i < h; ++i) {
      for (std::size_t j = 0; j < h; ++j) {
        out(i, j) = a(i, j);
        out(i, j + h) = b(i, j);
        out(i + h, j) = c(i, j);
        out(i + h, j + h) = d(i, j);
      }
    }
    return out;
  }

  std::size_t dim() const { return dim_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  BigMatrix& operator+=(const BigMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
  }

  friend BigMatrix operator+(BigMatrix a, const BigMatrix& b) { return a += b; }

  friend BigMatrix operator*(long scalar, BigMatrix a) {
    for (auto& e : a.entries_) e *= scalar;
    return a;
  }

  friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

  bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> entries_;
};

/// The four single-column state matrices at height m, split by the
/// (bottom, top) letters of the column: X+ (x,x), X- (x,o), O+ (o,o),
/// O- (o,x).
struct StateMatrixQuad {
  int m = 0;
  BigMatrix x_plus;
  BigMatrix x_minus;
  BigMatrix o_plus;
  BigMatrix o_minus;

  /// X+ + O+: columns whose top and bottom words agree.
  BigMatrix periodic_column() const { return x_plus + o_plus; }
  /// All suitably connected single columns.
  BigMatrix full_column() const { return x_plus + x_minus + o_plus + o_minus; }
};

namespace detail {

inline std::size_t checked_dim(int m, std::size_t dim_cap) {
  if (m < 0) throw std::invalid_argument("height must be nonnegative");
  if (m >= 31 || (std::size_t{1} << m) > dim_cap) {
    throw CapExceeded("state matrix of height " + std::to_string(m) + " exceeds dimension cap " +
                      std::to_string(dim_cap));
  }
  return std::size_t{1} << m;
}

}  // namespace detail

inline StateMatrixQuad build_quad(int m, std::size_t dim_cap = kDefaultDimCap) {
  detail::checked_dim(m, dim_cap);
  StateMatrixQuad q{0, BigMatrix{{1}}, BigMatrix{{0}}, BigMatrix{{1}}, BigMatrix{{0}}};
  for (int k = 0; k < m; ++k) {
    StateMatrixQuad next;
    next.m = k + 1;
    next.x_plus = BigMatrix::blocks(q.x_plus, q.o_minus, q.o_minus, q.x_plus);
    next.x_minus = BigMatrix::blocks(q.x_minus, q.o_plus, q.o_plus, q.x_minus);
    next.o_plus = BigMatrix::blocks(q.o_plus, q.x_minus, q.x_minus, 4 * q.o_plus);
    next.o_minus = BigMatrix::blocks(q.o_minus, q.x_plus, q.x_plus, 4 * q.o_minus);
    q = std::move(next);
  }
  return q;
}

/// X_k and O_k of the knot-mosaic recursion (no boundary connection points
/// on top or bottom).
inline std::pair<BigMatrix, BigMatrix> build_knot_pair(int k, std::size_t dim_cap = kDefaultDimCap) {
  detail::checked_dim(k, dim_cap);
  BigMatrix x{{1}};
  BigMatrix o{{1}};
  for (int step = 0; step < k; ++step) {
    BigMatrix nx = BigMatrix::blocks(x, o, o, x);
    BigMatrix no = BigMatrix::blocks(o, x, x, 4 * o);
    x = std::move(nx);
    o = std::move(no);
  }
  return {std::move(x), std::move(o)};
}

inline BigMatrix mat_mul(const BigMatrix& a, const BigMatrix& b, unsigned threads = 1) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t dim = a.dim();
  BigMatrix c(dim);
  auto rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        const BigInt& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          if (sgn(b(k, j)) != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
      }
    }
  };
  // each thread owns a disjoint row range, so the result does not depend
  // on the thread count
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(dim / 8, 1));
  if (workers == 1) {
    rows(0, dim);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (dim + workers - 1) / workers;
    for (std::size_t begin = 0; begin < dim; begin += chunk) {
      pool.emplace_back(rows, begin, std::min(dim, begin + chunk));
    }
  }
  return c;
}

/// Binary exponentiation; mat_pow(a, 0) is the identity.
inline BigMatrix mat_pow(const BigMatrix& a, unsigned long e, unsigned threads = 1) {
  BigMatrix result = BigMatrix::identity(a.dim());
  if (e == 0) return result;
  BigMatrix base = a;
  bool first = true;
  while (true) {
    if (e & 1u) {
      result = first ? base : mat_mul(result, base, threads);
      first = false;
    }
    e >>= 1;
    if (e == 0) break;
    base = mat_mul(base, base, threads);
  }
  return result;
}

/// a, a^2, ..., a^count by repeated multiplication (growth-table mode).
inline std::vector<BigMatrix> mat_powers(const BigMatrix& a, unsigned long count, unsigned threads = 1) {
  std::vector<BigMatrix> out;
  if (count == 0) return out;
  out.reserve(count);
  out.push_back(a);
  while (out.size() < count) out.push_back(mat_mul(out.back(), a, threads));
  return out;
}

inline BigInt entry_sum(const BigMatrix& a) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j);
  }
  return s;
}

inline BigInt trace(const BigMatrix& a) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
  return s;
}

/// tr(a * b) in O(dim^2).
inline BigInt trace_of_product(const BigMatrix& a, const BigMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      mpz_addmul(s.get_mpz_t(), a(i, j).get_mpz_t(), b(j, i).get_mpz_t());
    }
  }
  return s;
}

/// tr(a^e), splitting the last multiplication into a trace of a product.
inline BigInt trace_of_power(const BigMatrix& a, unsigned long e, unsigned threads = 1) {
  if (e == 0) return BigInt(static_cast<unsigned long>(a.dim()));
  if (e == 1) return trace(a);
  const unsigned long half = e / 2;
  BigMatrix low = mat_pow(a, half, threads);
  if (e % 2 == 0) return trace_of_product(low, low);
  return trace_of_product(low, mat_mul(low, a, threads));
}

/// Index of the p-letter word obtained by cyclically shifting word `i`
/// right by k letters (letter j moves to position j + k).
inline std::uint32_t word_rotation_index(std::uint32_t i, int k, int p) {
  if (p < 1 || p > 31) throw std::invalid_argument("word length out of range");
  const std::uint32_t mask = (std::uint32_t{1} << p) - 1;
  if (i > mask) throw std::invalid_argument("word index out of range");
  k = ((k % p) + p) % p;
  if (k == 0) return i;
  return ((i << k) | (i >> (p - k))) & mask;
}

/// Sum over words i of a(i, rho_k(i)), rho_k = word_rotation_index(., k, p).
inline BigInt shifted_trace(const BigMatrix& a, int k, int p) {
  if (p < 1 || p > 30 || a.dim() != (std::size_t{1} << p)) {
    throw std::invalid_argument("shifted trace needs a matrix of dimension 2^p");
  }
  if (k < 0 || k >= p) throw std::invalid_argument("shift k must satisfy 0 <= k < p");
  BigInt s = 0;
  for (std::uint32_t i = 0; i < a.dim(); ++i) s += a(i, word_rotation_index(i, k, p));
  return s;
}

// Dump format: "dim" on the first line, then dim lines of dim decimals.

inline void write_matrix(std::ostream& out, const BigMatrix& a) {
  out << a.dim() << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j) out << ' ';
      out << to_decimal(a(i, j));
    }
    out << '\n';
  }
}

inline BigMatrix read_matrix(std::istream& in) {
  std::size_t dim = 0;
  if (!(in >> dim) || dim == 0) throw std::invalid_argument("malformed matrix dump header");
  BigMatrix a(dim);
  std::string token;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (!(in >> token)) throw std::invalid_argument("truncated matrix dump");
      a(i, j) = parse_decimal(token);
    }
  }
  return a;
}

/// Directory of matrix dumps, one file per (kind, height).
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path(std::string_view kind, int m) const {
    return dir_ / (std::string(kind) + "-m" + std::to_string(m) + ".mat");
  }

  std::optional<BigMatrix> load(std::string_view kind, int m) const {
    std::ifstream in(path(kind, m));
    if (!in) return std::nullopt;
    return read_matrix(in);
  }

  void store(std::string_view kind, int m, const BigMatrix& a) const {
    std::filesystem::create_directories(dir_);
    const auto target = path(kind, m);
    const auto tmp = std::filesystem::path(target.string() + ".tmp");
    {
      std::ofstream out(tmp);
      if (!out) throw std::runtime_error("cannot write matrix cache file " + tmp.string());
      write_matrix(out, a);
    }
    std::filesystem::rename(tmp, target);
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace knotmosaic

#endif  // KNOTMOSAIC_STATE_MATRIX_HPP
