#pragma once
#include <Eigen/Core>
#include <cstdint>
#include <ostream>
#include <vector>

#include "strand/fp.hpp"

namespace strand {

/* Element of F_p[t] or of the truncated ring F_p[t]/(t^n).
 *
 * order == 0 means no truncation (exact polynomial arithmetic); order == n > 0
 * discards every coefficient of degree >= n.  Mixing two truncation orders
 * takes the finer quotient (the smaller order), which is the canonical
 * projection.  Coefficients are Fp and carry the modulus. */
class TruncPoly {
 public:
  TruncPoly() = default;
  TruncPoly(long long x) {  // NOLINT: implicit constant, Eigen needs it
    if (x) c_.push_back(Fp(x));
  }
  explicit TruncPoly(const Fp& x, std::int64_t order = 0) : order_(order) {
    if (!x.is_zero()) c_.push_back(x);
    clip();
  }

  static TruncPoly t(std::int64_t p, std::int64_t order = 0) {
    TruncPoly r;
    r.order_ = order;
    r.c_ = {Fp(0, p), Fp(1, p)};
    r.clip();
    return r;
  }

  std::int64_t order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  Fp coeff(std::int64_t k) const {
    return (k >= 0 && k < static_cast<std::int64_t>(c_.size())) ? c_[k] : Fp(0);
  }

  TruncPoly reduced(std::int64_t order) const {
    TruncPoly r = *this;
    r.order_ = merged_order(order_, order);
    r.clip();
    return r;
  }

  Fp eval(const Fp& x) const {
    Fp r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
    TruncPoly r;
    r.order_ = merged_order(a.order_, b.order_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Fp(0));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(k) + b.coeff(k);
    r.clip();
    return r;
  }
  friend TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) { return a + (-b); }
  friend TruncPoly operator-(const TruncPoly& a) {
    TruncPoly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    TruncPoly r;
    r.order_ = merged_order(a.order_, b.order_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Fp(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.clip();
    return r;
  }

  TruncPoly& operator+=(const TruncPoly& b) { return *this = *this + b; }
  TruncPoly& operator-=(const TruncPoly& b) { return *this = *this - b; }
  TruncPoly& operator*=(const TruncPoly& b) { return *this = *this * b; }

  friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
    auto n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < n; ++k)
      if (a.coeff(k) != b.coeff(k)) return false;
    return true;
  }
  friend bool operator!=(const TruncPoly& a, const TruncPoly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const TruncPoly& a) {
    if (a.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
      if (a.c_[k].is_zero()) continue;
      if (!first) os << "+";
      first = false;
      if (k == 0 || a.c_[k] != Fp(1)) os << a.c_[k];
      if (k == 1) os << "t";
      if (k > 1) os << "t^" << k;
    }
    return os;
  }

 private:
  static std::int64_t merged_order(std::int64_t a, std::int64_t b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(a, b);
  }
  void clip() {
    if (order_ > 0 && static_cast<std::int64_t>(c_.size()) > order_) c_.resize(order_);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Fp> c_;
  std::int64_t order_ = 0;
};

}  // namespace strand

namespace Eigen {
template <>
struct NumTraits<strand::TruncPoly> {
  using Real = strand::TruncPoly;
  using NonInteger = strand::TruncPoly;
  using Literal = strand::TruncPoly;
  using Nested = strand::TruncPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16,
  };
  static inline strand::TruncPoly epsilon() { return strand::TruncPoly(0); }
  static inline strand::TruncPoly dummy_precision() { return strand::TruncPoly(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
