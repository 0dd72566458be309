#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diagramalg/exactlin/elimination.hpp"
#include "diagramalg/exactlin/modular.hpp"
#include "diagramalg/exactlin/sparse.hpp"
#include "diagramalg/parallel.hpp"

namespace diagramalg {

/// Finite-dimensional associative algebra given by structure constants
/// b_i * b_j = sum_k c_ij^k b_k, stored row-compressed.
template <class F>
class FiniteDimAlgebra {
 public:
  using Field = F;
  using Term = std::pair<std::uint32_t, F>;
  using Element = SparseVector<std::uint32_t, F>;

  FiniteDimAlgebra() = default;

  /// `product(i, j)` returns the expansion of b_i * b_j as an Element;
  /// it is called once per ordered pair, possibly from several threads.
  template <class ProductFn>
  static FiniteDimAlgebra build(std::string name, std::vector<std::string> labels, std::uint32_t unit,
                                ProductFn&& product) {
    FiniteDimAlgebra a;
    a.name_ = std::move(name);
    a.labels_ = std::move(labels);
    a.unit_ = unit;
    const std::size_t d = a.labels_.size();
    if (unit >= d && d > 0) throw BadIndex("unit index out of range");
    std::vector<std::vector<std::vector<Term>>> rows(d);
    parallel_for(0, d, [&](std::size_t i) {
      rows[i].resize(d);
      for (std::size_t j = 0; j < d; ++j) {
        Element e = product(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        rows[i][j].assign(e.begin(), e.end());
      }
    });
    a.offset_.reserve(d * d + 1);
    a.offset_.push_back(0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        for (auto& t : rows[i][j]) a.terms_.push_back(std::move(t));
        a.offset_.push_back(static_cast<std::uint32_t>(a.terms_.size()));
      }
    return a;
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::uint32_t unit_index() const { return unit_; }

  std::span<const Term> product(std::uint32_t i, std::uint32_t j) const {
    const std::size_t k = static_cast<std::size_t>(i) * dim() + j;
    return {terms_.data() + offset_[k], terms_.data() + offset_[k + 1]};
  }

  Element basis(std::uint32_t i) const { return Element{{i, F(1)}}; }
  Element unit() const { return basis(unit_); }

  Element multiply(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) {
        const F ab = a * b;
        for (const auto& [k, c] : product(i, j)) {
          F term = ab * c;
          auto [it, fresh] = out.try_emplace(k, term);
          if (!fresh) {
            it->second += term;
            if (is_zero(it->second)) out.erase(it);
          }
        }
      }
    return out;
  }

  /// Index of b_i * b_j when that product is a single basis element with
  /// coefficient one.
  std::optional<std::uint32_t> monoid_product(std::uint32_t i, std::uint32_t j) const {
    auto p = product(i, j);
    if (p.size() == 1 && p[0].second == F(1)) return p[0].first;
    return std::nullopt;
  }

  bool is_monoid_algebra() const {
    for (std::uint32_t i = 0; i < dim(); ++i)
      for (std::uint32_t j = 0; j < dim(); ++j)
        if (!monoid_product(i, j)) return false;
    return true;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::uint32_t unit_ = 0;
  std::vector<std::uint32_t> offset_;
  std::vector<Term> terms_;
};

template <class F>
using AlgebraElement = typename FiniteDimAlgebra<F>::Element;

template <class F>
AlgebraElement<F> add(AlgebraElement<F> x, const AlgebraElement<F>& y, const F& scale = F(1)) {
  axpy(x, scale, y);
  return x;
}

/// Exhaustive check of (b_i b_j) b_k = b_i (b_j b_k).
template <class F>
bool is_associative(const FiniteDimAlgebra<F>& a) {
  const auto d = static_cast<std::uint32_t>(a.dim());
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j)
      for (std::uint32_t k = 0; k < d; ++k)
        if (a.multiply(a.multiply(a.basis(i), a.basis(j)), a.basis(k)) !=
            a.multiply(a.basis(i), a.multiply(a.basis(j), a.basis(k))))
          return false;
  return true;
}

/// Random basis triples; returns the number of failures.
template <class F>
std::size_t associativity_failures(const FiniteDimAlgebra<F>& a, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(a.dim() - 1));
  std::size_t failures = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto i = pick(rng), j = pick(rng), k = pick(rng);
    if (a.multiply(a.multiply(a.basis(i), a.basis(j)), a.basis(k)) !=
        a.multiply(a.basis(i), a.multiply(a.basis(j), a.basis(k))))
      ++failures;
  }
  return failures;
}

/// Matrix of left multiplication by x; column j holds x * b_j.
template <class F>
Matrix<F> regular_rep(const FiniteDimAlgebra<F>& a, const AlgebraElement<F>& x) {
  Matrix<F> m(a.dim(), a.dim());
  for (std::uint32_t j = 0; j < a.dim(); ++j)
    for (const auto& [k, c] : a.multiply(x, a.basis(j))) m(k, j) = c;
  return m;
}

/// tr(L_{b_k}) for every basis element: the sum of the b_l-coefficients of b_k b_l.
template <class F>
std::vector<F> basis_traces(const FiniteDimAlgebra<F>& a) {
  std::vector<F> t(a.dim(), F(0));
  for (std::uint32_t k = 0; k < a.dim(); ++k)
    for (std::uint32_t l = 0; l < a.dim(); ++l)
      for (const auto& [m, c] : a.product(k, l))
        if (m == l) t[k] += c;
  return t;
}

/// Gram matrix of the regular trace form, G_ij = tr(L_{b_i b_j}), expanded
/// through the basis traces.
template <class F>
Matrix<F> trace_gram(const FiniteDimAlgebra<F>& a) {
  const auto traces = basis_traces(a);
  const std::size_t d = a.dim();
  Matrix<F> g(d, d);
  parallel_for(0, d, [&](std::size_t i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      F acc(0);
      for (const auto& [k, c] : a.product(static_cast<std::uint32_t>(i), j)) acc += c * traces[k];
      g(i, j) = acc;
    }
  });
  return g;
}

/// Same form computed from explicit regular-representation matrices; slow,
/// kept as a cross-check.
template <class F>
Matrix<F> trace_gram_via_matrices(const FiniteDimAlgebra<F>& a) {
  const std::size_t d = a.dim();
  Matrix<F> g(d, d);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      const Matrix<F> l = regular_rep(a, a.multiply(a.basis(i), a.basis(j)));
      F tr(0);
      for (std::size_t k = 0; k < d; ++k) tr += l(k, k);
      g(i, j) = tr;
    }
  return g;
}

enum class RankMethod { exact, modular };

inline const char* to_string(RankMethod m) { return m == RankMethod::exact ? "exact" : "modular"; }

/// Outcome of the trace-form test.  In characteristic zero the radical is
/// the kernel of the trace form, so radical_dim = dim - gram_rank.
struct SemisimplicityCertificate {
  std::string algebra;
  std::size_t dim = 0;
  std::size_t gram_rank = 0;
  std::size_t radical_dim = 0;
  RankMethod method = RankMethod::exact;
  std::vector<std::uint32_t> primes;
  std::optional<std::size_t> center_dim;

  bool semisimple() const { return radical_dim == 0; }
};

/// For the modular method the rank is a lower bound, so radical_dim is an
/// upper bound; zero still certifies semisimplicity.
inline SemisimplicityCertificate certify_from_gram(std::string label, const Matrix<Rational>& gram,
                                                   RankMethod method, std::size_t prime_count = 3) {
  SemisimplicityCertificate cert;
  cert.algebra = std::move(label);
  cert.dim = gram.rows();
  cert.method = method;
  if (method == RankMethod::exact) {
    cert.gram_rank = rank(gram);
  } else {
    const auto primes = certificate_primes(prime_count);
    auto res = modular_rank(
        gram.rows(), gram.cols(),
        [&](std::size_t r, std::size_t c, std::uint32_t p) { return modp::reduce(gram(r, c), p); }, primes);
    cert.gram_rank = res.rank;
    cert.primes = res.primes;
  }
  cert.radical_dim = cert.dim - cert.gram_rank;
  return cert;
}

template <class F>
std::size_t radical_dim(const FiniteDimAlgebra<F>& a) {
  return a.dim() - rank(trace_gram(a));
}

/// Dimension of the centre: the common kernel of x -> x g - g x over the
/// given generators (all basis elements when none are supplied).
template <class F>
std::size_t center_dim(const FiniteDimAlgebra<F>& a, std::span<const AlgebraElement<F>> generators = {}) {
  std::vector<AlgebraElement<F>> gens(generators.begin(), generators.end());
  if (gens.empty())
    for (std::uint32_t i = 0; i < a.dim(); ++i) gens.push_back(a.basis(i));
  // Row (g, l): the b_l-coefficient of x g - g x as a linear form in x.
  SparseEchelon<std::uint32_t, F> echelon;
  for (const auto& g : gens) {
    std::vector<SparseVector<std::uint32_t, F>> forms(a.dim());
    for (std::uint32_t k = 0; k < a.dim(); ++k) {
      const auto bk = a.basis(k);
      auto comm = add<F>(a.multiply(bk, g), a.multiply(g, bk), F(-1));
      for (const auto& [l, c] : comm) forms[l].emplace(k, c);
    }
    for (const auto& f : forms)
      if (!f.empty()) echelon.insert(f);
  }
  return a.dim() - echelon.rank();
}

template <class F>
SemisimplicityCertificate certify_semisimplicity(const FiniteDimAlgebra<F>& a, RankMethod method) {
  auto cert = certify_from_gram(a.name(), trace_gram(a), method);
  return cert;
}

/// Smallest subalgebra containing `seeds` (and `unit`, when given), found by
/// closing the span under right multiplication by the seeds.
template <class Key, class F>
struct ClosureResult {
  std::size_t dim = 0;
  std::vector<SparseVector<Key, F>> basis;
};

template <class Key, class F, class BasisProduct>
ClosureResult<Key, F> span_closure(std::span<const SparseVector<Key, F>> seeds, BasisProduct&& basis_product,
                                   const SparseVector<Key, F>* unit) {
  using Vec = SparseVector<Key, F>;
  auto multiply = [&](const Vec& x, const Vec& y) {
    Vec out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) axpy(out, F(a * b), basis_product(i, j));
    return out;
  };
  SparseEchelon<Key, F> echelon;
  std::vector<Vec> pending;
  auto offer = [&](const Vec& v) {
    if (echelon.insert(v)) pending.push_back(v);
  };
  if (unit) offer(*unit);
  for (const auto& s : seeds) offer(s);
  while (!pending.empty()) {
    Vec v = std::move(pending.back());
    pending.pop_back();
    for (const auto& s : seeds) offer(multiply(v, s));
  }
  return {echelon.rank(), echelon.basis()};
}

template <class F>
ClosureResult<std::uint32_t, F> span_closure(const FiniteDimAlgebra<F>& a,
                                             std::span<const AlgebraElement<F>> seeds, bool unital = true) {
  auto product = [&](std::uint32_t i, std::uint32_t j) {
    auto p = a.product(i, j);
    return AlgebraElement<F>(p.begin(), p.end());
  };
  const auto one = a.unit();
  return span_closure<std::uint32_t, F>(seeds, product, unital ? &one : nullptr);
}

}  // namespace diagramalg
