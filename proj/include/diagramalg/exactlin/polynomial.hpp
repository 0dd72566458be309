#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagramalg/exactlin/rational.hpp"

namespace diagramalg {

/// Univariate polynomial with rational coefficients, dense, lowest degree
/// first.  The zero polynomial has no stored coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT: implicit scalar lift
  Polynomial(const Rational& c) {                   // NOLINT
    if (!diagramalg::is_zero(c)) coeffs_.push_back(c);
  }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial indeterminate() { return Polynomial(std::vector<Rational>{0, 1}); }
  static Polynomial monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational coefficient(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial out = *this;
    const Rational lc = leading();
    for (auto& c : out.coeffs_) c /= lc;
    return out;
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (diagramalg::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division a = q*b + r with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InvariantViolation("polynomial division by zero");
    Polynomial rem = a;
    if (a.degree() < b.degree()) return {Polynomial{}, rem};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational lc = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const int shift = rem.degree() - b.degree();
      const Rational factor = rem.leading() / lc;
      quot[static_cast<std::size_t>(shift)] = factor;
      for (int k = 0; k <= b.degree(); ++k)
        rem.coeffs_[static_cast<std::size_t>(k + shift)] -= factor * b.coeffs_[static_cast<std::size_t>(k)];
      rem.trim();
    }
    return {Polynomial(std::move(quot)), rem};
  }

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
    return q;
  }

  /// Renders e.g. "2*u^2-u+1/2" (no spaces).
  std::string to_string(std::string_view var = "u") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (diagramalg::is_zero(c)) continue;
      const bool negative = sgn(c) < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (negative) out += '-';
      else if (!out.empty()) out += '+';
      std::string mono;
      if (k >= 1) mono = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
      if (k == 0) out += mag.get_str();
      else if (mag == 1) out += mono;
      else out += mag.get_str() + "*" + mono;
    }
    return out;
  }

  /// Distinct rational roots, ascending.  Only attempted when the cleared
  /// integer coefficients at both ends are small enough for trial division.
  std::vector<Rational> rational_roots() const {
    std::vector<Rational> roots;
    if (degree() <= 0) return roots;
    Polynomial p = *this;
    std::size_t zero_mult = 0;
    while (!p.is_zero() && diagramalg::is_zero(p.coeffs_.front())) {
      p.coeffs_.erase(p.coeffs_.begin());
      ++zero_mult;
    }
    if (zero_mult > 0) roots.push_back(0);
    if (p.degree() <= 0) return roots;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs_) den_lcm = lcm(den_lcm, c.get_den());
    Integer a0 = abs(Rational(p.coeffs_.front() * den_lcm).get_num());
    Integer an = abs(Rational(p.coeffs_.back() * den_lcm).get_num());
    const Integer limit("1000000000000");
    if (a0 > limit || an > limit) return roots;
    auto divisors = [](const Integer& v) {
      std::vector<Integer> ds;
      for (Integer d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
          ds.push_back(d);
          if (d * d != v) ds.push_back(v / d);
        }
      }
      return ds;
    };
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int s : {1, -1}) {
          Rational cand{s * num, den};
          cand.canonicalize();
          if (diagramalg::is_zero(p.eval(cand)) &&
              std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
      }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && diagramalg::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline std::string to_string(const Polynomial& p) { return p.to_string(); }

}  // namespace diagramalg
