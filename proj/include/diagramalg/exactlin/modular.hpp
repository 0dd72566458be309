#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "diagramalg/exactlin/matrix.hpp"
#include "diagramalg/exactlin/rational.hpp"

namespace diagramalg {

namespace modp {

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t power(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p, b = base % p;
  while (e > 0) {
    if (e & 1) result = result * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

inline std::uint32_t inverse(std::uint32_t a, std::uint32_t p) { return power(a, p - 2, p); }

/// Deterministic Miller-Rabin; exact for all 32-bit inputs.
inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n % q == 0) return n == q;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = power(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint32_t reduce(const Integer& v, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

inline std::uint32_t reduce(const Rational& v, std::uint32_t p) {
  const std::uint32_t den = reduce(v.get_den(), p);
  if (den == 0) throw InvariantViolation("prime divides a denominator");
  return mul(reduce(v.get_num(), p), inverse(den, p), p);
}

}  // namespace modp

inline constexpr std::uint64_t default_prime_seed = 20120427;

/// `count` distinct primes in (2^30, 2^31), drawn from a fixed-seed generator
/// so certificates are reproducible.
inline std::vector<std::uint32_t> certificate_primes(std::size_t count,
                                                     std::uint64_t seed = default_prime_seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist((1u << 30) + 1, (1u << 31) - 1);
  std::vector<std::uint32_t> primes;
  while (primes.size() < count) {
    std::uint32_t cand = dist(rng) | 1u;
    if (!modp::is_prime(cand)) continue;
    bool fresh = true;
    for (auto q : primes) fresh = fresh && q != cand;
    if (fresh) primes.push_back(cand);
  }
  return primes;
}

/// Rank of a row-major residue matrix over Z/p.  Entries must be < p < 2^31;
/// the buffer is consumed.
inline std::size_t rank_mod_p(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                              std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (a[r * cols + c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    const std::uint32_t* prow = &a[rank * cols];
    const std::uint32_t inv = modp::inverse(prow[c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint32_t* row = &a[r * cols];
      if (row[c] == 0) continue;
      // row += f * prow with Shoup's precomputed quotient for f.
      const std::uint64_t f = p - modp::mul(row[c], inv, p);
      const std::uint64_t f_shoup = (f << 32) / p;
      for (std::size_t j = c + 1; j < cols; ++j) {
        const std::uint64_t x = prow[j];
        const std::uint64_t q = (f_shoup * x) >> 32;
        std::uint64_t t = f * x - q * p;
        t = t >= p ? t - p : t;
        t += row[j];
        row[j] = static_cast<std::uint32_t>(t >= p ? t - p : t);
      }
      row[c] = 0;
    }
    ++rank;
  }
  return rank;
}

/// Ranks modulo several primes.  Each is a lower bound on the rank over Q;
/// reaching min(rows, cols) at any prime certifies full rank.
struct ModularRankResult {
  std::size_t rank = 0;  // max over primes
  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> ranks;

  bool certifies(std::size_t target) const { return rank >= target; }
};

/// Residue of entry (r, c) modulo p.
using ResidueFn = std::function<std::uint32_t(std::size_t, std::size_t, std::uint32_t)>;

/// Stops early once some prime reaches `stop_at` (default: full rank).
inline ModularRankResult modular_rank(std::size_t rows, std::size_t cols, const ResidueFn& entry,
                                      std::span<const std::uint32_t> primes,
                                      std::size_t stop_at = SIZE_MAX) {
  ModularRankResult out;
  const std::size_t full = std::min(rows, cols);
  if (stop_at == SIZE_MAX) stop_at = full;
  std::vector<std::uint32_t> buf;
  for (std::uint32_t p : primes) {
    buf.assign(rows * cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) buf[r * cols + c] = entry(r, c, p);
    const std::size_t rk = rank_mod_p(buf, rows, cols, p);
    out.primes.push_back(p);
    out.ranks.push_back(rk);
    out.rank = std::max(out.rank, rk);
    if (out.rank >= stop_at) break;
  }
  return out;
}

inline ModularRankResult modular_rank(const Matrix<Integer>& m, std::span<const std::uint32_t> primes) {
  return modular_rank(
      m.rows(), m.cols(), [&](std::size_t r, std::size_t c, std::uint32_t p) { return modp::reduce(m(r, c), p); },
      primes);
}

}  // namespace diagramalg
