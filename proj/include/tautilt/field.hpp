// Prime field scalar for exact dense linear algebra with Eigen.
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <ostream>

namespace tautilt {

constexpr bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Element of F_p, stored reduced. All arithmetic is exact modulo p.
template <unsigned P>
class Fp {
  static_assert(is_prime(P), "Fp modulus must be prime");
  static_assert(P < 46341u, "Fp modulus too large for 32-bit products");

 public:
  static constexpr unsigned modulus = P;

  constexpr Fp() = default;
  constexpr Fp(int v)
      : v_(static_cast<std::uint32_t>(((v % static_cast<int>(P)) + static_cast<int>(P)) %
                                      static_cast<int>(P))) {}
  constexpr Fp(unsigned v) : v_(v % P) {}
  constexpr Fp(long v) : Fp(static_cast<int>(v % static_cast<long>(P))) {}
  constexpr Fp(unsigned long v) : v_(static_cast<std::uint32_t>(v % P)) {}

  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % P); }
  friend constexpr Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + P - b.v_) % P); }
  friend constexpr Fp operator*(Fp a, Fp b) { return from_raw((a.v_ * b.v_) % P); }
  friend constexpr Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  constexpr Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }

  Fp& operator+=(Fp o) { v_ = (v_ + o.v_) % P; return *this; }
  Fp& operator-=(Fp o) { v_ = (v_ + P - o.v_) % P; return *this; }
  Fp& operator*=(Fp o) { v_ = (v_ * o.v_) % P; return *this; }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend constexpr bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Fp inverse() const {
    // Fermat: v^(P-2). P is prime and *this must be nonzero.
    Fp base = *this, acc = Fp(1u);
    unsigned e = P - 2;
    while (e) {
      if (e & 1u) acc *= base;
      base *= base;
      e >>= 1u;
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  static constexpr Fp from_raw(std::uint32_t raw) {
    Fp f;
    f.v_ = raw;
    return f;
  }
  std::uint32_t v_ = 0;
};

}  // namespace tautilt

namespace Eigen {

template <unsigned P>
struct NumTraits<tautilt::Fp<P>> : GenericNumTraits<tautilt::Fp<P>> {
  using Real = tautilt::Fp<P>;
  using NonInteger = tautilt::Fp<P>;
  using Nested = tautilt::Fp<P>;
  using Literal = int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
