#pragma once
#include <Eigen/Core>
#include <cstdint>
#include <ostream>

#include "strand/errors.hpp"

namespace strand {

/* Element of a prime field F_p with the modulus carried at runtime.
 *
 * p == 0 marks an unbound integer literal; Eigen materializes constants as
 * Scalar(0), Scalar(1) with no way to pass a modulus, so those stay unbound
 * until they meet a bound operand.  Mixing two distinct nonzero moduli is a
 * bug and throws. */
class Fp {
 public:
  Fp() = default;
  Fp(long long x) : v_(x) {}  // NOLINT: implicit by design, Eigen needs it
  Fp(std::int64_t x, std::int64_t p) : v_(canon(x, p)), p_(p) {}

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp bound(std::int64_t p) const { return p_ ? *this : Fp(v_, p); }

  Fp inv() const {
    if (!p_) {
      if (v_ == 1 || v_ == -1) return *this;
      throw InternalError("Fp: inverse of unbound literal");
    }
    if (v_ == 0) throw InternalError("Fp: division by zero");
    return pow(p_ - 2);
  }

  Fp pow(std::int64_t e) const {
    Fp r(1, p_), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto p = merged(a, b);
    return p ? Fp(a.v_ + b.v_, p) : Fp(a.v_ + b.v_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    auto p = merged(a, b);
    return p ? Fp(a.v_ - b.v_, p) : Fp(a.v_ - b.v_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto p = merged(a, b);
    return p ? Fp(a.v_ * b.v_, p) : Fp(a.v_ * b.v_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    auto p = merged(a, b);
    return p ? a.bound(p) * b.bound(p).inv() : a * b.inv();
  }
  friend Fp operator-(const Fp& a) { return a.p_ ? Fp(-a.v_, a.p_) : Fp(-a.v_); }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto p = merged(a, b);
    if (!p) return a.v_ == b.v_;
    return a.bound(p).v_ == b.bound(p).v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  static std::int64_t canon(std::int64_t x, std::int64_t p) {
    if (p <= 0) throw InternalError("Fp: modulus must be positive");
    return ((x % p) + p) % p;
  }
  static std::int64_t merged(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) throw InternalError("Fp: mixed moduli");
    return a.p_ ? a.p_ : b.p_;
  }

  std::int64_t v_ = 0;
  std::int64_t p_ = 0;
};

/* the field F_p itself, used to stamp literals with a modulus */
struct Field {
  std::int64_t p = 5;
  Fp operator()(std::int64_t x) const { return Fp(x, p); }
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace strand

namespace Eigen {
template <>
struct NumTraits<strand::Fp> {
  using Real = strand::Fp;
  using NonInteger = strand::Fp;
  using Literal = strand::Fp;
  using Nested = strand::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline strand::Fp epsilon() { return strand::Fp(0); }
  static inline strand::Fp dummy_precision() { return strand::Fp(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
