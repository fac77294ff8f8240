#ifndef KNOTMOSAIC_ERRORS_HPP
#define KNOTMOSAIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotmosaic {

/// Thrown when a request would exceed a configured resource guard
/// (state-matrix dimension, brute-force cell count, search budget).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an exact division in an orbit-counting formula leaves a
/// remainder. This can only mean a bug or corrupted input.
class InconsistentCount : public std::logic_error {
 public:
  explicit InconsistentCount(const std::string& what) : std::logic_error(what) {}
};

}  // namespace knotmosaic

#endif  // KNOTMOSAIC_ERRORS_HPP
