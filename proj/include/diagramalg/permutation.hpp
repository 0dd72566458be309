#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "diagramalg/errors.hpp"

namespace diagramalg {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

/// Bijection of {1..n}, stored in one-line notation.
///
/// Products read left to right: (u * v)(i) = v(u(i)).  This is the order in
/// which permutation diagrams compose when the left factor is stacked on top.
class Permutation {
 public:
  Permutation() = default;

  /// One-line notation with 1-based images, e.g. {2, 1, 3} for (1 2).
  explicit Permutation(std::span<const int> one_line) {
    const auto n = one_line.size();
    images_.resize(n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const int v = one_line[i];
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
        throw BadIndex("not a permutation in one-line notation");
      seen[static_cast<std::size_t>(v - 1)] = true;
      images_[i] = static_cast<std::uint8_t>(v - 1);
    }
  }
  Permutation(std::initializer_list<int> one_line)
      : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

  static Permutation identity(int n) {
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(n));
    std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
    return p;
  }

  /// The transposition (i j) on {1..n}.
  static Permutation transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw BadIndex("transposition indices out of range");
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
    return p;
  }

  /// Inverse of rank(): the r-th permutation in lexicographic one-line order.
  static Permutation unrank(int n, std::uint64_t r) {
    std::vector<std::uint8_t> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), std::uint8_t{0});
    Permutation p;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t f = factorial(n - 1 - i);
      const std::uint64_t idx = r / f;
      r %= f;
      p.images_.push_back(pool[idx]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }

  /// Image of i (1-based).
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }

  /// Zero-based images.
  std::span<const std::uint8_t> images() const { return images_; }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return p;
  }

  /// Apply this permutation, then `next`.
  Permutation then(const Permutation& next) const {
    if (next.size() != size()) throw SizeMismatch("permutation sizes differ");
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = next.images_[images_[i]];
    return p;
  }

  friend Permutation operator*(const Permutation& u, const Permutation& v) { return u.then(v); }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Position in lexicographic order of one-line notation (Lehmer code).
  std::uint64_t rank() const {
    std::uint64_t r = 0;
    const std::size_t n = images_.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t smaller = 0;
      for (std::size_t j = i + 1; j < n; ++j) smaller += images_[j] < images_[i];
      r = r * (n - i) + smaller;
    }
    return r;
  }

  /// "[2,1,3]"
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(images_[i] + 1);
    }
    return s + "]";
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(std::span<const int>(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

}  // namespace diagramalg
