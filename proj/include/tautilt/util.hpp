// Error types and a tiny deterministic RNG shared across the library.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tautilt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or ambient-dimension mismatch between operands.
struct DimensionError : Error {
  using Error::Error;
};

/// Invalid input data (presentations, files, reports).
struct ValidationError : Error {
  using Error::Error;
};

/// A stated precondition does not hold (e.g. non-projective input to trace_ideal).
struct PreconditionError : Error {
  using Error::Error;
};

/// Operation not available for this kind of algebra (e.g. no radical route).
struct UnsupportedAlgebraError : Error {
  using Error::Error;
};

/// Parse failure with a 1-based line number.
struct ParseError : Error {
  ParseError(const std::string& file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), line_number(line) {}
  int line_number;
};

// splitmix64: platform-independent, so equal seeds give byte-identical reports
// regardless of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace tautilt
