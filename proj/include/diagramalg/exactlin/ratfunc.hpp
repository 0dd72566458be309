#pragma once

#include <optional>
#include <string>
#include <utility>

#include "diagramalg/exactlin/polynomial.hpp"

namespace diagramalg {

/// Element of Q(u): a reduced fraction of polynomials with monic
/// denominator, so equal functions have equal representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}               // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}    // NOLINT
  RatFunc(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvariantViolation("rational function with zero denominator");
    normalize();
  }

  static RatFunc indeterminate() { return RatFunc(Polynomial::indeterminate()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Value at a rational point; empty when the denominator vanishes there.
  std::optional<Rational> eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (diagramalg::is_zero(d)) return std::nullopt;
    return num_.eval(x) / d;
  }

  RatFunc operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_, Unreduced{});
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, Unreduced{});
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw InvariantViolation("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "u") const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  struct Unreduced {};
  // Denominator 1 is already normal.
  RatFunc(Polynomial num, Unreduced) : num_(std::move(num)), den_(1) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    if (!den_.is_constant()) {
      Polynomial g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
      }
    }
    const Rational lc = den_.leading();
    if (lc != 1) {
      num_ = num_ * Polynomial(Rational(1 / lc));
      den_ = den_.monic();
    }
  }

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline std::string to_string(const RatFunc& f) { return f.to_string(); }

}  // namespace diagramalg
