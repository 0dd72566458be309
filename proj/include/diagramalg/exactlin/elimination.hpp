#pragma once

#include <optional>
#include <vector>

#include "diagramalg/exactlin/matrix.hpp"
#include "diagramalg/exactlin/ratfunc.hpp"
#include "diagramalg/exactlin/rational.hpp"

namespace diagramalg {

/// Outcome of fraction-free elimination over an integral domain.
template <class Ring>
struct BareissResult {
  std::size_t rank = 0;
  // Determinant of the input when it is square (zero when singular).
  std::optional<Ring> determinant;
};

namespace detail {

inline void bareiss_update(Integer& target, const Integer& pivot, const Integer& left,
                           const Integer& up, const Integer& previous, Integer& scratch) {
  mpz_mul(scratch.get_mpz_t(), pivot.get_mpz_t(), target.get_mpz_t());
  mpz_submul(scratch.get_mpz_t(), left.get_mpz_t(), up.get_mpz_t());
  mpz_divexact(target.get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
}

template <class Ring>
void bareiss_update(Ring& target, const Ring& pivot, const Ring& left, const Ring& up,
                    const Ring& previous, Ring& /*scratch*/) {
  target = exact_div(pivot * target - left * up, previous);
}

}  // namespace detail

/// Fraction-free Gaussian elimination (Bareiss).  Every intermediate entry is
/// a minor of the input, so each division is exact.  Works on rectangular
/// input; zero columns are skipped.
template <class Ring>
BareissResult<Ring> bareiss(Matrix<Ring> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Ring previous(1);
  Ring scratch(0);
  std::size_t rank = 0;
  bool negate = false;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot_row = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (!is_zero(m(r, c))) {
        pivot_row = r;
        break;
      }
    if (pivot_row == rows) continue;
    if (pivot_row != rank) {
      m.swap_rows(pivot_row, rank);
      negate = !negate;
    }
    const Ring pivot = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Ring left = m(r, c);
      for (std::size_t j = c + 1; j < cols; ++j)
        detail::bareiss_update(m(r, j), pivot, left, m(rank, j), previous, scratch);
      m(r, c) = Ring(0);
    }
    previous = pivot;
    ++rank;
  }
  BareissResult<Ring> out;
  out.rank = rank;
  if (rows == cols) {
    if (rank < rows || rows == 0) out.determinant = rows == 0 ? Ring(1) : Ring(0);
    else out.determinant = negate ? Ring(-previous) : previous;
  }
  return out;
}

/// Scales every row by the lcm of its denominators, giving an integer matrix
/// of equal rank.  `scale` receives the product of the row factors.
inline Matrix<Integer> clear_denominators(const Matrix<Rational>& m, Integer* scale = nullptr) {
  Matrix<Integer> out(m.rows(), m.cols());
  Integer total = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer row_lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) row_lcm = lcm(row_lcm, m(r, c).get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational scaled = m(r, c) * row_lcm;
      out(r, c) = scaled.get_num();
    }
    total *= row_lcm;
  }
  if (scale) *scale = total;
  return out;
}

inline Matrix<Polynomial> clear_denominators(const Matrix<RatFunc>& m, Polynomial* scale = nullptr) {
  Matrix<Polynomial> out(m.rows(), m.cols());
  Polynomial total(1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Polynomial row_lcm(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Polynomial& d = m(r, c).denominator();
      row_lcm = exact_div(row_lcm * d, gcd(row_lcm, d));
    }
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = exact_div(m(r, c).numerator() * row_lcm, m(r, c).denominator());
    total = total * row_lcm;
  }
  if (scale) *scale = total;
  return out;
}

inline std::size_t rank(const Matrix<Integer>& m) { return bareiss(m).rank; }
inline std::size_t rank(const Matrix<Rational>& m) { return bareiss(clear_denominators(m)).rank; }
inline std::size_t rank(const Matrix<RatFunc>& m) { return bareiss(clear_denominators(m)).rank; }

inline Rational determinant(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw SizeMismatch("determinant of a non-square matrix");
  Integer scale;
  auto res = bareiss(clear_denominators(m, &scale));
  Rational det(*res.determinant, scale);
  det.canonicalize();
  return det;
}

inline RatFunc determinant(const Matrix<RatFunc>& m) {
  if (m.rows() != m.cols()) throw SizeMismatch("determinant of a non-square matrix");
  Polynomial scale;
  auto res = bareiss(clear_denominators(m, &scale));
  return RatFunc(*res.determinant, scale);
}

/// Reduced row echelon form over a field.
template <class F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_columns;
};

template <class F>
RowEchelon<F> row_echelon(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r)
      if (!is_zero(m(r, c))) {
        p = r;
        break;
      }
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const F inv = F(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      const F factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) - factor * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Basis of the right null space {x : M x = 0}.
template <class F>
std::vector<std::vector<F>> kernel(const Matrix<F>& m) {
  auto [reduced, pivots] = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of M x = b, or empty when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (b.size() != m.rows()) throw SizeMismatch("right-hand side length mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto [reduced, pivots] = row_echelon(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), F(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = reduced(k, m.cols());
  return x;
}

}  // namespace diagramalg
