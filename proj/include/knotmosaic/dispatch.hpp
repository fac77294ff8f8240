#ifndef KNOTMOSAIC_DISPATCH_HPP
#define KNOTMOSAIC_DISPATCH_HPP

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "knotmosaic/counting.hpp"
#include "knotmosaic/oracle.hpp"

namespace knotmosaic {

namespace detail {
inline BigInt from_u64(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace detail

/// Counts `quantity` for (m, n) with the requested method, or the default
/// route when none is given. Preconditions of a forced method are checked
/// before any work starts.
inline CountResult compute(int m, int n, Quantity quantity, std::optional<Method> method = std::nullopt,
                           const CountOptions& opts = {}, const oracle::Limits& limits = {}) {
  detail::require(m >= 1 && n >= 1, "dimensions must be positive");
  using detail::require;
  switch (quantity) {
    case Quantity::knot: {
      const Method chosen = method.value_or(m >= 2 && n >= 2 ? Method::theorem_knot : Method::oracle);
      if (chosen == Method::oracle) {
        return {m, n, quantity, detail::from_u64(oracle::count_mosaics(m, n, oracle::Predicate::knot, limits)),
                Method::oracle};
      }
      require(chosen == Method::theorem_knot, "method not applicable to knot mosaics");
      return count_knot(m, n, opts);
    }
    case Quantity::period: {
      const Method chosen = method.value_or(Method::theorem_period);
      if (chosen == Method::oracle) {
        return {m, n, quantity, detail::from_u64(oracle::count_mosaics(m, n, oracle::Predicate::period, limits)),
                Method::oracle};
      }
      require(chosen == Method::theorem_period, "method not applicable to period mosaics");
      return count_period(m, n, opts);
    }
    case Quantity::toroidal: {
      if (!method) return count_toroidal(m, n, opts);
      switch (*method) {
        case Method::theorem_coprime:
          require(std::gcd(m, n) == 1, "theorem-coprime needs gcd(m, n) = 1");
          return count_toroidal_coprime(m, n, opts);
        case Method::theorem_prime_square:
          require(m == n && is_prime(m), "theorem-prime-square needs m = n prime");
          return count_toroidal_prime_square(m, opts);
        case Method::burnside_general:
          return count_toroidal_general(m, n, opts);
        case Method::oracle:
          return {m, n, quantity, oracle::count_toroidal_by_canonicalization(m, n, limits), Method::oracle};
        default:
          throw std::invalid_argument("method not applicable to toroidal mosaics");
      }
    }
  }
  throw std::invalid_argument("unknown quantity");
}

}  // namespace knotmosaic

#endif  // KNOTMOSAIC_DISPATCH_HPP
