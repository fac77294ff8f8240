#ifndef KNOTMOSAIC_COUNTING_HPP
#define KNOTMOSAIC_COUNTING_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/census.hpp"
#include "knotmosaic/errors.hpp"
#include "knotmosaic/mosaic.hpp"
#include "knotmosaic/state_matrix.hpp"

namespace knotmosaic {

enum class Quantity { knot, period, toroidal };

enum class Method {
  theorem_knot,
  theorem_period,
  theorem_coprime,
  theorem_prime_square,
  burnside_general,
  oracle,
};

inline std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::knot: return "knot";
    case Quantity::period: return "period";
    case Quantity::toroidal: return "toroidal";
  }
  return "?";
}

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::theorem_knot: return "theorem-knot";
    case Method::theorem_period: return "theorem-period";
    case Method::theorem_coprime: return "theorem-coprime";
    case Method::theorem_prime_square: return "theorem-prime-square";
    case Method::burnside_general: return "burnside-general";
    case Method::oracle: return "oracle";
  }
  return "?";
}

inline std::optional<Quantity> parse_quantity(std::string_view s) {
  for (Quantity q : {Quantity::knot, Quantity::period, Quantity::toroidal}) {
    if (to_string(q) == s) return q;
  }
  return std::nullopt;
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::theorem_knot, Method::theorem_period, Method::theorem_coprime,
                   Method::theorem_prime_square, Method::burnside_general, Method::oracle}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

struct CountResult {
  int m = 0;
  int n = 0;
  Quantity quantity = Quantity::period;
  BigInt value;
  Method method = Method::theorem_period;
  bool from_cache = false;

  /// Method name, prefixed with "cache:" for cache hits.
  std::string method_label() const {
    return (from_cache ? "cache:" : "") + std::string(to_string(method));
  }
};

struct CountOptions {
  std::size_t dim_cap = kDefaultDimCap;
  unsigned threads = 1;
};

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Knot and period mosaics
// ---------------------------------------------------------------------------

/// D^(m,n) = 2 * ||(X_{m-2} + O_{m-2})^(n-2)||.
inline CountResult count_knot(int m, int n, const CountOptions& opts = {}) {
  if (m < 2 || n < 2) throw std::invalid_argument("knot mosaic theorem needs m >= 2 and n >= 2");
  auto [x, o] = build_knot_pair(m - 2, opts.dim_cap);
  BigInt value = 2 * entry_sum(mat_pow(x + o, static_cast<unsigned long>(n - 2), opts.threads));
  return {m, n, Quantity::knot, std::move(value), Method::theorem_knot};
}

/// D_P^(m,n) = tr (N^(m,1)+)^n for a precomputed column matrix N^(m,1)+.
inline CountResult count_period_from(const BigMatrix& periodic_column, int m, int n, const CountOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("period mosaics need n >= 1");
  if (periodic_column.dim() != (std::size_t{1} << m)) throw std::invalid_argument("column matrix has wrong height");
  BigInt value = trace_of_power(periodic_column, static_cast<unsigned long>(n), opts.threads);
  return {m, n, Quantity::period, std::move(value), Method::theorem_period};
}

inline CountResult count_period(int m, int n, const CountOptions& opts = {}) {
  if (m < 1 || n < 1) throw std::invalid_argument("period mosaics need m, n >= 1");
  return count_period_from(build_quad(m, opts.dim_cap).periodic_column(), m, n, opts);
}

// ---------------------------------------------------------------------------
// Fundamental periods and the co-prime theorem
// ---------------------------------------------------------------------------

/// d_{p,q} for all p | m, q | n from D_P^(p,q) = sum_{r|p, s|q} d_{r,s}.
/// The recursion holds for any (m, n); only the orbit sizes need co-primality.
inline FPeriodCensus fperiod_census(int m, int n, const CountOptions& opts = {}) {
  if (m < 1 || n < 1) throw std::invalid_argument("census needs m, n >= 1");
  FPeriodCensus census{m, n, {}, {}, std::nullopt};
  std::map<int, BigMatrix> columns;
  for (int p : divisors(m)) {
    const BigMatrix& col = columns.try_emplace(p, build_quad(p, opts.dim_cap).periodic_column()).first->second;
    for (int q : divisors(n)) {
      BigInt d = count_period_from(col, p, q, opts).value;
      for (int r : divisors(p)) {
        for (int s : divisors(q)) {
          if (r == p && s == q) continue;
          d -= census.by_period.at({r, s});
        }
      }
      if (d < 0) throw InconsistentCount("negative fundamental-period count");
      census.by_period.emplace(Period{p, q}, std::move(d));
    }
  }
  return census;
}

inline FPeriodCensus fperiod_census_coprime(int m, int n, const CountOptions& opts = {}) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw std::invalid_argument("co-prime census needs gcd(m, n) = 1");
  return fperiod_census(m, n, opts);
}

/// D_T^(m,n) = sum_{p|m, q|n} d_{p,q} / (pq) for co-prime m, n.
inline CountResult count_toroidal_coprime(int m, int n, const CountOptions& opts = {}) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1) throw std::invalid_argument("co-prime theorem needs gcd(m, n) = 1");
  const FPeriodCensus census = fperiod_census(m, n, opts);
  BigInt value = 0;
  for (const auto& [period, d] : census.by_period) {
    value += exact_div(d, BigInt(period.p * period.q), "co-prime orbit size");
  }
  return {m, n, Quantity::toroidal, std::move(value), Method::theorem_coprime};
}

// ---------------------------------------------------------------------------
// Prime squares
// ---------------------------------------------------------------------------

/// Census of period (p,p)-mosaics for prime p: (1,1), (1,p), the shift
/// classes p_(k,1) (fixed by t_{k,1}, not constant) and the free rest.
inline FPeriodCensus prime_square_census(int p, const CountOptions& opts = {}) {
  if (!is_prime(p)) throw std::invalid_argument("prime-square census needs a prime, got " + std::to_string(p));
  FPeriodCensus census = fperiod_census(p, p, opts);
  const BigMatrix column = build_quad(p, opts.dim_cap).periodic_column();
  const BigInt& constant = census.by_period.at({1, 1});
  for (int k = 0; k < p; ++k) census.shift_classes.push_back(shifted_trace(column, k, p) - constant);

  BigInt rest = census.total() - constant - census.by_period.at({1, p});
  for (const auto& d : census.shift_classes) rest -= d;
  if (rest < 0) throw InconsistentCount("negative free part in prime-square census");
  census.free_part = std::move(rest);
  return census;
}

/// D_T^(p,p) = d_{p^2}/p^2 + (2/p) sum_{k=0}^{(p-1)/2} d_{p(k,1)} + 7,
/// with the p = 2 variant (2 d_{2(0,1)} + d_{2(1,1)}) / 2 for the middle term.
inline CountResult count_toroidal_prime_square(int p, const CountOptions& opts = {}) {
  if (!is_prime(p)) throw std::invalid_argument("prime-square theorem needs a prime, got " + std::to_string(p));
  const BigMatrix column = build_quad(p, opts.dim_cap).periodic_column();
  const BigInt constant = trace(build_quad(1).periodic_column());  // d_{1,1}
  const BigInt total = trace_of_power(column, static_cast<unsigned long>(p), opts.threads);

  auto shift_class = [&](int k) -> BigInt { return shifted_trace(column, k, p) - constant; };

  BigInt paired;  // d_{1,p} + sum over all k of d_{p(k,1)}
  if (p == 2) {
    paired = 2 * shift_class(0) + shift_class(1);
  } else {
    BigInt half = 0;
    for (int k = 0; k <= (p - 1) / 2; ++k) half += shift_class(k);
    paired = 2 * half;
  }
  const BigInt free_part = total - paired - constant;
  if (free_part < 0) throw InconsistentCount("negative free part in prime-square theorem");

  BigInt value = exact_div(free_part, BigInt(p * p), "prime-square free orbits") +
                 exact_div(paired, BigInt(p), "prime-square shift orbits") + constant;
  return {p, p, Quantity::toroidal, std::move(value), Method::theorem_prime_square};
}

// ---------------------------------------------------------------------------
// Burnside engine
// ---------------------------------------------------------------------------

namespace detail {

/// Inverse of a modulo mod (mod >= 1, gcd(a, mod) = 1); 0 when mod == 1.
inline long mod_inverse(long a, long mod) {
  if (mod == 1) return 0;
  long t = 0, new_t = 1, r = mod, new_r = ((a % mod) + mod) % mod;
  while (new_r != 0) {
    const long quot = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::logic_error("mod_inverse: arguments not co-prime");
  return ((t % mod) + mod) % mod;
}

/// Parameters of the transfer-matrix form of a fixed-point count.
///
/// A period mosaic fixed by t_{x,y} satisfies c_{j+y} = R_x(c_j) for its
/// columns c_j, with R_x the downward row rotation. With g = gcd(y, n) the
/// columns c_0..c_{g-1} are free and every column must be invariant under
/// R_e, e = x(n/g) mod m, i.e. periodic with row period d = gcd(e, m). The
/// wrap from c_{g-1} to c_g = R_s(c_0) uses s = x b mod m, b (y/g) = 1 mod n/g.
struct FixPlan {
  int g;         // free columns
  int e;         // row rotation every column must be invariant under
  int d;         // row period of those columns
  int s;         // boundary-word rotation closing the chain
};

inline FixPlan fix_plan(int m, int n, Shift shift) {
  const Shift sh = shift.normalized(m, n);
  FixPlan plan{};
  plan.g = std::gcd(sh.y, n);
  const int orbit = n / plan.g;
  plan.e = int((long(sh.x) * orbit) % m);
  plan.d = std::gcd(plan.e, m);
  const long b = mod_inverse(sh.y / plan.g, orbit);
  plan.s = int((long(sh.x) * b) % m);
  return plan;
}

}  // namespace detail

/// T_e: the 2^m transfer matrix of period columns (top word = bottom word)
/// invariant under row rotation by e. Such columns are repetitions of
/// period columns of height d = gcd(e, m), so T_e is N^(d,1)+ placed on the
/// d-periodic words.
inline BigMatrix column_transfer_matrix(int m, int e, const CountOptions& opts = {}) {
  if (m < 1) throw std::invalid_argument("column height must be positive");
  detail::checked_dim(m, opts.dim_cap);
  const int d = std::gcd(((e % m) + m) % m, m);
  const BigMatrix small = build_quad(d, opts.dim_cap).periodic_column();
  auto repeat = [&](std::uint32_t w) {
    std::uint32_t out = 0;
    for (int k = 0; k < m; k += d) out |= w << k;
    return out;
  };
  BigMatrix t(std::size_t{1} << m);
  for (std::uint32_t i = 0; i < small.dim(); ++i) {
    for (std::uint32_t j = 0; j < small.dim(); ++j) t(repeat(i), repeat(j)) = small(i, j);
  }
  return t;
}

/// Number of period (m,n)-mosaics fixed by the rotation `shift`:
/// tr(R_s T_e^g), evaluated on the d-letter words where T_e lives.
inline BigInt fix_count(int m, int n, Shift shift, const CountOptions& opts = {}) {
  if (m < 1 || n < 1) throw std::invalid_argument("fix_count needs m, n >= 1");
  const detail::FixPlan plan = detail::fix_plan(m, n, shift);
  const BigMatrix column = build_quad(plan.d, opts.dim_cap).periodic_column();
  const int k = plan.s % plan.d;
  if (k == 0) return trace_of_power(column, static_cast<unsigned long>(plan.g), opts.threads);
  return shifted_trace(mat_pow(column, static_cast<unsigned long>(plan.g), opts.threads), k, plan.d);
}

/// A suitably connected single column whose top and bottom letters agree.
struct PeriodColumn {
  std::vector<std::uint8_t> tiles;  // top to bottom
  std::uint32_t left = 0;
  std::uint32_t right = 0;
};

/// All period columns of height m, by depth-first tile assembly.
inline std::vector<PeriodColumn> period_columns(int m) {
  if (m < 1 || m > 16) throw std::invalid_argument("column height out of range");
  std::vector<PeriodColumn> out;
  std::vector<std::uint8_t> tiles(std::size_t(m), 0);
  std::function<void(int)> place = [&](int row) {
    if (row == m) {
      if (kTiles[tiles.front()].cp_top != kTiles[tiles.back()].cp_bottom) return;
      PeriodColumn c{tiles, 0, 0};
      for (int i = 0; i < m; ++i) {
        if (kTiles[tiles[std::size_t(i)]].cp_left) c.left |= std::uint32_t{1} << i;
        if (kTiles[tiles[std::size_t(i)]].cp_right) c.right |= std::uint32_t{1} << i;
      }
      out.push_back(std::move(c));
      return;
    }
    for (const Tile& t : kTiles) {
      if (row > 0 && kTiles[tiles[std::size_t(row - 1)]].cp_bottom != t.cp_top) continue;
      tiles[std::size_t(row)] = t.id;
      place(row + 1);
    }
  };
  place(0);
  return out;
}

/// Ground-truth fixed-point count: choose the g free columns by search,
/// build every mosaic from c_{j+ty} = R_{tx}(c_j), and keep it iff it is a
/// period mosaic fixed by `shift`. Throws CapExceeded once more than
/// `max_nodes` partial assignments have been visited.
inline BigInt fix_count_reference(int m, int n, Shift shift, std::uint64_t max_nodes = 5'000'000) {
  if (m < 1 || n < 1) throw std::invalid_argument("fix_count_reference needs m, n >= 1");
  const Shift sh = shift.normalized(m, n);
  const detail::FixPlan plan = detail::fix_plan(m, n, sh);

  std::vector<PeriodColumn> columns;
  for (auto& c : period_columns(m)) {
    bool invariant = true;
    for (int i = 0; i < m && invariant; ++i) {
      invariant = c.tiles[std::size_t(i)] == c.tiles[std::size_t((i - plan.e + m) % m)];
    }
    if (invariant) columns.push_back(std::move(c));
  }

  const int orbit = n / plan.g;
  std::vector<std::size_t> chosen(std::size_t(plan.g), 0);
  std::uint64_t nodes = 0;
  std::uint64_t count = 0;
  Mosaic mosaic(m, n);

  std::function<void(int)> choose = [&](int j) {
    if (++nodes > max_nodes) throw CapExceeded("reference fixed-point search exceeded its node budget");
    if (j == plan.g) {
      for (int r = 0; r < plan.g; ++r) {
        const auto& col = columns[chosen[std::size_t(r)]].tiles;
        for (int t = 0; t < orbit; ++t) {
          const int target = int((r + long(t) * sh.y) % n);
          const int down = int((long(t) * sh.x) % m);
          for (int i = 0; i < m; ++i) mosaic.set(i, target, col[std::size_t((i - down + m) % m)]);
        }
      }
      if (is_period_mosaic(mosaic) && is_fixed_by(mosaic, sh)) ++count;
      return;
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (j > 0 && columns[chosen[std::size_t(j - 1)]].right != columns[c].left) continue;
      chosen[std::size_t(j)] = c;
      choose(j + 1);
    }
  };
  choose(0);
  return BigInt(static_cast<unsigned long>(count));
}

/// D_T^(m,n) = (1/mn) sum over all shifts of fix_count.
inline CountResult count_toroidal_general(int m, int n, const CountOptions& opts = {}) {
  if (m < 1 || n < 1) throw std::invalid_argument("toroidal count needs m, n >= 1");
  // fix_count depends on the shift only through (g, d, s mod d)
  std::map<std::tuple<int, int, int>, BigInt> memo;
  BigInt sum = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto plan = detail::fix_plan(m, n, {x, y});
      const auto key = std::make_tuple(plan.g, plan.d, plan.s % plan.d);
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, fix_count(m, n, {x, y}, opts)).first;
      sum += it->second;
    }
  }
  BigInt value = exact_div(sum, BigInt(m * n), "Burnside average");
  return {m, n, Quantity::toroidal, std::move(value), Method::burnside_general};
}

/// Picks the co-prime theorem, the prime-square theorem, or the Burnside
/// engine, in that order.
inline CountResult count_toroidal(int m, int n, const CountOptions& opts = {}) {
  if (m < 1 || n < 1) throw std::invalid_argument("toroidal count needs m, n >= 1");
  if (std::gcd(m, n) == 1) return count_toroidal_coprime(m, n, opts);
  if (m == n && is_prime(m)) return count_toroidal_prime_square(m, opts);
  return count_toroidal_general(m, n, opts);
}

// ---------------------------------------------------------------------------
// Growth
// ---------------------------------------------------------------------------

struct GrowthReport {
  int n = 0;
  BigInt value;      // D_P^(n,n)
  std::string root;  // (D_P^(n,n))^(1/n^2), rounded
};

inline GrowthReport growth_metric(int n, unsigned decimals = 6, const CountOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("growth metric needs n >= 1");
  BigInt value = count_period(n, n, opts).value;
  std::string root = root_decimal(value, static_cast<unsigned long>(n) * static_cast<unsigned long>(n), decimals);
  return {n, std::move(value), std::move(root)};
}

}  // namespace knotmosaic

#endif  // KNOTMOSAIC_COUNTING_HPP
