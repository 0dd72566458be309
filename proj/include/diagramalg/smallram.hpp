#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "diagramalg/diagrams.hpp"
#include "diagramalg/exactlin/algebra.hpp"
#include "diagramalg/exactlin/modular.hpp"
#include "diagramalg/partitions.hpp"
#include "diagramalg/permutation.hpp"

namespace diagramalg {

/// A partition of {1..n}; stands for the diagram in which i and i' always
/// share a block.
class DiagonalPartition {
 public:
  DiagonalPartition() = default;
  explicit DiagonalPartition(SetPartition quotient) : quotient_(std::move(quotient)) {
    if (quotient_.ground() != unprimed_ground(static_cast<int>(quotient_.size())))
      throw GroundMismatch("diagonal partition must live on {1..n}");
  }

  static DiagonalPartition finest(int n) { return DiagonalPartition(diagramalg::finest(unprimed_ground(n))); }

  /// Merges i and i+1 and nothing else.
  static DiagonalPartition adjacent_pair(int n, int i) {
    if (i < 1 || i >= n) throw BadIndex("adjacent pair index out of range");
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(k)] = k;
    labels[static_cast<std::size_t>(i)] = i - 1;
    return DiagonalPartition(SetPartition::from_labels(unprimed_ground(n), labels));
  }

  int n() const { return static_cast<int>(quotient_.size()); }
  const SetPartition& quotient() const { return quotient_; }

  /// The diagram with blocks B ∪ B'.
  PartitionDiagram diagram() const {
    const auto l = quotient_.labels();
    std::vector<int> labels(l.begin(), l.end());
    labels.insert(labels.end(), l.begin(), l.end());
    return PartitionDiagram::from_labels(n(), labels);
  }

  /// Inverse of diagram() on diag-P_n; empty unless every i, i' are together.
  static std::optional<DiagonalPartition> from_diagram(const PartitionDiagram& d) {
    std::vector<int> labels;
    for (int i = 1; i <= d.n(); ++i) {
      if (d.block_of_top(i) != d.block_of_bottom(i)) return std::nullopt;
      labels.push_back(d.block_of_top(i));
    }
    return DiagonalPartition(SetPartition::from_labels(unprimed_ground(d.n()), labels));
  }

  friend bool operator==(const DiagonalPartition&, const DiagonalPartition&) = default;
  friend auto operator<=>(const DiagonalPartition&, const DiagonalPartition&) = default;

 private:
  SetPartition quotient_;
};

/// Basis element (w, b) of P_n^⋉, standing for the ramified pair (w, b·w).
struct SmallBasisElement {
  Permutation w;
  DiagonalPartition b;

  int n() const { return w.size(); }
  friend bool operator==(const SmallBasisElement&, const SmallBasisElement&) = default;
  friend auto operator<=>(const SmallBasisElement&, const SmallBasisElement&) = default;
};

/// (a, b) -> (a, b·a).
inline RamifiedDiagram ltimes(const Permutation& a, const DiagonalPartition& b) {
  if (a.size() != b.n()) throw SizeMismatch("permutation and diagonal partition sizes differ");
  const PartitionDiagram fine = perm_to_diagram(a);
  auto coarse = compose(b.diagram(), fine);
  if (coarse.removed_bones != 0) throw InvariantViolation("diagonal times permutation removed a component");
  return {fine, std::move(coarse.diagram)};
}

inline RamifiedDiagram ltimes(const SmallBasisElement& x) { return ltimes(x.w, x.b); }

/// Recovers (a, b) from (a, b·a); empty when the pair is not in the image.
inline std::optional<SmallBasisElement> from_ramified(const RamifiedDiagram& r) {
  auto w = diagram_permutation(r.fine());
  if (!w) return std::nullopt;
  auto undone = compose(r.coarse(), perm_to_diagram(w->inverse()));
  auto b = DiagonalPartition::from_diagram(undone.diagram);
  if (!b) return std::nullopt;
  return SmallBasisElement{*w, *b};
}

/// Closed-form product: (w1, b1)(w2, b2) = (w1 w2, b1 ∨ w1·b2·w1⁻¹), where the
/// middle term relabels b2 by w1⁻¹.
inline SmallBasisElement multiply(const SmallBasisElement& x, const SmallBasisElement& y) {
  if (x.n() != y.n()) throw SizeMismatch("multiplying basis elements of different sizes");
  const SetPartition moved = conjugate(y.b.quotient(), x.w.inverse());
  return {x.w * y.w, DiagonalPartition(join(x.b.quotient(), moved))};
}

inline constexpr int default_smallram_bound = 5;

/// The 2(n-1) generators: (1, A^{i,i+1}) for i = 1..n-1, then
/// (σ_{i,i+1}, σ_{i,i+1}).
inline std::vector<SmallBasisElement> generators(int n) {
  if (n < 2) throw BadIndex("generators need n >= 2");
  std::vector<SmallBasisElement> out;
  for (int i = 1; i < n; ++i) out.push_back({Permutation::identity(n), DiagonalPartition::adjacent_pair(n, i)});
  for (int i = 1; i < n; ++i) out.push_back({Permutation::transposition(n, i, i + 1), DiagonalPartition::finest(n)});
  return out;
}

/// Image in FS_n ⊗ Δ_n: the permutation and the diagram b·w kept apart.
struct TensorImage {
  Permutation group_part;
  PartitionDiagram delta_part;
  friend bool operator==(const TensorImage&, const TensorImage&) = default;
};

inline TensorImage to_tensor(const SmallBasisElement& x) { return {x.w, ltimes(x).coarse()}; }

/// Componentwise product; the group factor multiplies in S_n, the other
/// factor composes as diagrams.  Any removed component is reported.
struct TensorProduct {
  TensorImage image;
  int removed = 0;
};

inline TensorProduct tensor_multiply(const TensorImage& s, const TensorImage& t) {
  auto d = compose(s.delta_part, t.delta_part);
  return {{s.group_part * t.group_part, std::move(d.diagram)}, d.removed_bones};
}

/// The ⋉ basis with O(1) multiplication through precomputed tables.
/// Index of (w, b) is rank(w) * B_n + rank(b), i.e. lexicographic by the
/// one-line permutation, then by the restricted growth string of b.
class SmallRamifiedMonoid {
 public:
  explicit SmallRamifiedMonoid(int n, int bound = default_smallram_bound) : n_(n) {
    if (n < 1) throw BadIndex("n must be positive");
    if (n > bound) throw SizeLimit("small ramified basis bound exceeded");
    perms_ = all_permutations(n);
    for (auto& p : enumerate_partitions(unprimed_ground(n))) diags_.emplace_back(std::move(p));
    for (std::uint32_t k = 0; k < diags_.size(); ++k) diag_index_.emplace(diags_[k].quotient().labels(), k);
    const auto P = perms_.size(), B = diags_.size();
    perm_mul_.resize(P * P);
    perm_inv_.resize(P);
    for (std::size_t a = 0; a < P; ++a) {
      perm_inv_[a] = static_cast<std::uint32_t>(perms_[a].inverse().rank());
      for (std::size_t b = 0; b < P; ++b) perm_mul_[a * P + b] = static_cast<std::uint32_t>((perms_[a] * perms_[b]).rank());
    }
    relabel_.resize(P * B);
    for (std::size_t w = 0; w < P; ++w)
      for (std::size_t b = 0; b < B; ++b)
        relabel_[w * B + b] = diag_rank(conjugate(diags_[b].quotient(), perms_[w]));
    join_.resize(B * B);
    for (std::size_t a = 0; a < B; ++a)
      for (std::size_t b = 0; b < B; ++b) join_[a * B + b] = diag_rank(join(diags_[a].quotient(), diags_[b].quotient()));
  }

  int n() const { return n_; }
  std::size_t size() const { return perms_.size() * diags_.size(); }
  std::size_t bell_number() const { return diags_.size(); }

  SmallBasisElement element(std::uint32_t idx) const {
    return {perms_[idx / diags_.size()], diags_[idx % diags_.size()]};
  }

  std::uint32_t index_of(const SmallBasisElement& x) const {
    if (x.n() != n_) throw SizeMismatch("element of a different size");
    return static_cast<std::uint32_t>(x.w.rank() * diags_.size()) + diag_rank(x.b.quotient());
  }

  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const {
    const std::size_t B = diags_.size(), P = perms_.size();
    const std::size_t w1 = x / B, b1 = x % B, w2 = y / B, b2 = y % B;
    const std::uint32_t moved = relabel_[perm_inv_[w1] * B + b2];
    return static_cast<std::uint32_t>(perm_mul_[w1 * P + w2] * B + join_[b1 * B + moved]);
  }

  std::uint32_t identity_index() const { return index_of({Permutation::identity(n_), DiagonalPartition::finest(n_)}); }

  std::vector<std::uint32_t> generator_indices() const {
    std::vector<std::uint32_t> out;
    if (n_ < 2) return out;
    for (const auto& g : generators(n_)) out.push_back(index_of(g));
    return out;
  }

  std::string label(std::uint32_t idx) const { return ltimes(element(idx)).to_string(); }

  /// tr(L_m) in the monoid algebra: the number of k with m·b_k = b_k.
  std::vector<std::uint32_t> traces() const {
    std::vector<std::uint32_t> t(size(), 0);
    parallel_for(0, size(), [&](std::size_t m) {
      std::uint32_t count = 0;
      for (std::uint32_t k = 0; k < size(); ++k) count += multiply(static_cast<std::uint32_t>(m), k) == k;
      t[m] = count;
    });
    return t;
  }

  FiniteDimAlgebra<Rational> algebra() const {
    std::vector<std::string> labels;
    for (std::uint32_t k = 0; k < size(); ++k) labels.push_back(label(k));
    return FiniteDimAlgebra<Rational>::build("smallram(n=" + std::to_string(n_) + ")", std::move(labels),
                                             identity_index(), [&](std::uint32_t i, std::uint32_t j) {
                                               return AlgebraElement<Rational>{{multiply(i, j), Rational(1)}};
                                             });
  }

 private:
  std::uint32_t diag_rank(const SetPartition& p) const { return diag_index_.at(p.labels()); }

  int n_;
  std::vector<Permutation> perms_;
  std::vector<DiagonalPartition> diags_;
  std::map<std::vector<int>, std::uint32_t> diag_index_;
  std::vector<std::uint32_t> perm_mul_;
  std::vector<std::uint32_t> perm_inv_;
  std::vector<std::uint32_t> relabel_;  // [w][b] -> b relabelled i -> w(i)
  std::vector<std::uint32_t> join_;
};

/// All n!·B_n basis elements in index order.
inline std::vector<SmallBasisElement> enumerate_basis(int n, int bound = default_smallram_bound) {
  SmallRamifiedMonoid m(n, bound);
  std::vector<SmallBasisElement> out;
  out.reserve(m.size());
  for (std::uint32_t k = 0; k < m.size(); ++k) out.push_back(m.element(k));
  return out;
}

/// The span of the (w, finest): a copy of the group algebra of S_n.
inline FiniteDimAlgebra<Rational> group_subalgebra(const SmallRamifiedMonoid& m) {
  std::vector<std::uint32_t> members;
  std::map<std::uint32_t, std::uint32_t> local;
  const auto finest = DiagonalPartition::finest(m.n());
  for (const auto& w : all_permutations(m.n())) {
    const auto idx = m.index_of({w, finest});
    local.emplace(idx, static_cast<std::uint32_t>(members.size()));
    members.push_back(idx);
  }
  std::vector<std::string> labels;
  for (auto idx : members) labels.push_back(m.element(idx).w.to_string());
  return FiniteDimAlgebra<Rational>::build(
      "group(n=" + std::to_string(m.n()) + ")", std::move(labels), local.at(m.identity_index()),
      [&](std::uint32_t i, std::uint32_t j) {
        auto it = local.find(m.multiply(members[i], members[j]));
        if (it == local.end()) throw InvariantViolation("group elements left the group subalgebra");
        return AlgebraElement<Rational>{{it->second, Rational(1)}};
      });
}

/// Dimensions of the subalgebra of P_n(δ') generated by some diagrams, with
/// and without adjoining the identity.
struct GeneratedDims {
  std::size_t unital = 0;
  std::size_t nonunital = 0;
  // Largest number of removed components met in any product (so whether
  // δ' could ever appear).
  int max_removed = 0;
};

inline GeneratedDims generated_subalgebra_dims(int n, const std::vector<PartitionDiagram>& seeds_diagrams) {
  using Vec = SparseVector<PartitionDiagram, Rational>;
  GeneratedDims out;
  auto product = [&](const PartitionDiagram& a, const PartitionDiagram& b) {
    auto r = compose(a, b);
    out.max_removed = std::max(out.max_removed, r.removed_bones);
    return Vec{{r.diagram, Rational(1)}};
  };
  std::vector<Vec> seeds;
  for (const auto& d : seeds_diagrams) seeds.push_back(Vec{{d, Rational(1)}});
  const Vec one{{identity_diagram(n), Rational(1)}};
  out.unital = span_closure<PartitionDiagram, Rational>(seeds, product, &one).dim;
  out.nonunital = span_closure<PartitionDiagram, Rational>(seeds, product, nullptr).dim;
  return out;
}

/// Γ_n: generated by all A^{i,j}.
inline GeneratedDims gamma_dim(int n) {
  if (n < 1) throw BadIndex("n must be positive");
  if (n > 5) throw SizeLimit("gamma_dim limited to n <= 5");
  std::vector<PartitionDiagram> seeds;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) seeds.push_back(special(n, {Special::Kind::A, i, j}));
  return generated_subalgebra_dims(n, seeds);
}

/// Δ_n: generated by S_n (all transpositions) and all A^{i,j}.
inline GeneratedDims delta_dim(int n) {
  if (n < 1) throw BadIndex("n must be positive");
  if (n > 5) throw SizeLimit("delta_dim limited to n <= 5");
  std::vector<PartitionDiagram> seeds;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      seeds.push_back(special(n, {Special::Kind::A, i, j}));
      seeds.push_back(special(n, {Special::Kind::sigma, i, j}));
    }
  return generated_subalgebra_dims(n, seeds);
}

/// Trace-form certificate for P_n^⋉ computed straight from the monoid
/// tables, without materialising structure constants; G_ij = tr(L_{b_i b_j}).
inline SemisimplicityCertificate smallram_semisimplicity(const SmallRamifiedMonoid& m, RankMethod method,
                                                         std::size_t prime_count = 3) {
  const auto t = m.traces();
  const std::size_t d = m.size();
  SemisimplicityCertificate cert;
  cert.algebra = "smallram(n=" + std::to_string(m.n()) + ")";
  cert.dim = d;
  cert.method = method;
  if (method == RankMethod::exact) {
    Matrix<Integer> g(d, d);
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j) g(i, j) = t[m.multiply(i, j)];
    cert.gram_rank = rank(g);
  } else {
    const auto primes = certificate_primes(prime_count);
    auto res = modular_rank(
        d, d,
        [&](std::size_t i, std::size_t j, std::uint32_t p) {
          return t[m.multiply(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j))] % p;
        },
        primes);
    cert.gram_rank = res.rank;
    cert.primes = res.primes;
  }
  cert.radical_dim = d - cert.gram_rank;
  return cert;
}

/// Cross-checks of the ⋉ products: diagram composition, the closed form and
/// the componentwise tensor product must give the same single basis element
/// with nothing removed.
struct MonoidCheckReport {
  int n = 0;
  bool exhaustive = true;
  std::size_t pairs = 0;
  std::size_t closure_failures = 0;   // product left the ⋉ image
  std::size_t removed_components = 0;  // pairs with a removed bone or island
  std::size_t oracle_mismatches = 0;   // closed form, table or tensor disagree
  std::size_t triples = 0;
  std::size_t associativity_failures = 0;

  bool passed() const { return closure_failures + removed_components + oracle_mismatches + associativity_failures == 0; }
};

/// `random_pairs` = 0 checks every pair and every triple; otherwise that many
/// seeded random pairs and triples.
inline MonoidCheckReport check_monoid(const SmallRamifiedMonoid& m, std::size_t random_pairs = 0,
                                      std::uint64_t seed = 20120427) {
  MonoidCheckReport r;
  r.n = m.n();
  r.exhaustive = random_pairs == 0;
  const auto d = static_cast<std::uint32_t>(m.size());
  std::vector<RamifiedDiagram> images;
  images.reserve(d);
  for (std::uint32_t k = 0; k < d; ++k) images.push_back(ltimes(m.element(k)));
  const Rational delta1(2), delta2(3);
  auto check_pair = [&](std::uint32_t i, std::uint32_t j) {
    ++r.pairs;
    const auto x = m.element(i), y = m.element(j);
    const auto prod = compose_ramified(images[i], images[j], delta1, delta2);
    if (prod.removed_bones || prod.removed_islands || prod.coefficient != 1) ++r.removed_components;
    const auto back = from_ramified(prod.diagram);
    if (!back) {
      ++r.closure_failures;
      return;
    }
    const auto closed = multiply(x, y);
    const auto t = tensor_multiply(to_tensor(x), to_tensor(y));
    if (*back != closed || m.index_of(closed) != m.multiply(i, j) || t.removed != 0 || !(t.image == to_tensor(closed)))
      ++r.oracle_mismatches;
  };
  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    ++r.triples;
    if (m.multiply(m.multiply(a, b), c) != m.multiply(a, m.multiply(b, c))) ++r.associativity_failures;
  };
  if (r.exhaustive) {
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j) check_pair(i, j);
    for (std::uint32_t a = 0; a < d; ++a)
      for (std::uint32_t b = 0; b < d; ++b)
        for (std::uint32_t c = 0; c < d; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, d - 1);
    for (std::size_t s = 0; s < random_pairs; ++s) {
      const auto i = pick(rng);
      check_pair(i, pick(rng));
    }
    for (std::size_t s = 0; s < random_pairs; ++s) {
      const auto a = pick(rng), b = pick(rng);
      check_triple(a, b, pick(rng));
    }
  }
  return r;
}

}  // namespace diagramalg
