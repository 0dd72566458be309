#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "diagramalg/exactlin/algebra.hpp"
#include "diagramalg/partitions.hpp"
#include "diagramalg/permutation.hpp"
#include "diagramalg/union_find.hpp"

namespace diagramalg {

/// Set partition of {1..n} ∪ {1'..n'}.  Vertex v < n is the top vertex
/// v+1, vertex n+k is the bottom vertex (k+1)'.  Labels are the restricted
/// growth string over that vertex order, so they are canonical.
class PartitionDiagram {
 public:
  PartitionDiagram() = default;

  explicit PartitionDiagram(const SetPartition& p) {
    int n = 0;
    for (const auto& e : p.ground()) n = std::max(n, e.index);
    if (p.ground() != two_row_ground(n))
      throw GroundMismatch("diagram ground set must be {1..n} and {1'..n'}");
    *this = from_labels(n, p.labels());
  }

  /// Arbitrary integer block names per vertex; canonicalized.
  static PartitionDiagram from_labels(int n, std::span<const int> labels) {
    if (labels.size() != static_cast<std::size_t>(2 * n)) throw SizeMismatch("label count must be 2n");
    PartitionDiagram d;
    d.n_ = n;
    d.labels_.resize(labels.size());
    std::vector<int> seen;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      auto it = std::find(seen.begin(), seen.end(), labels[v]);
      if (it == seen.end()) {
        d.labels_[v] = static_cast<std::uint8_t>(seen.size());
        seen.push_back(labels[v]);
      } else {
        d.labels_[v] = static_cast<std::uint8_t>(it - seen.begin());
      }
    }
    d.blocks_ = static_cast<int>(seen.size());
    return d;
  }

  int n() const { return n_; }
  std::span<const std::uint8_t> labels() const { return labels_; }
  int block_count() const { return blocks_; }
  int block_of_top(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
  int block_of_bottom(int i) const { return labels_[static_cast<std::size_t>(n_ + i - 1)]; }

  SetPartition partition() const {
    std::vector<int> l(labels_.begin(), labels_.end());
    return SetPartition::from_labels(two_row_ground(n_), l);
  }

  std::string to_string() const { return format(partition()); }

  /// Byte key usable for hashing.
  std::string_view key() const {
    return {reinterpret_cast<const char*>(labels_.data()), labels_.size()};
  }

  friend bool operator==(const PartitionDiagram& a, const PartitionDiagram& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }
  friend auto operator<=>(const PartitionDiagram& a, const PartitionDiagram& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  int n_ = 0;
  int blocks_ = 0;
  std::vector<std::uint8_t> labels_;
};

struct PartitionDiagramHash {
  std::size_t operator()(const PartitionDiagram& d) const { return std::hash<std::string_view>{}(d.key()); }
};

struct CompositionResult {
  PartitionDiagram diagram;
  // Middle-row components touching neither boundary.
  int removed_bones = 0;
};

namespace detail {

// Stacking layout: top row nodes [0, n), middle [n, 2n), bottom [2n, 3n).
inline void link_layer(UnionFind& uf, const PartitionDiagram& d, std::size_t upper, std::size_t lower) {
  const auto n = static_cast<std::size_t>(d.n());
  std::vector<std::size_t> rep(static_cast<std::size_t>(d.block_count()), SIZE_MAX);
  const auto labels = d.labels();
  for (std::size_t v = 0; v < 2 * n; ++v) {
    const std::size_t node = v < n ? upper + v : lower + (v - n);
    auto& r = rep[labels[v]];
    if (r == SIZE_MAX) r = node;
    else uf.unite(r, node);
  }
}

inline CompositionResult read_outer(UnionFind& uf, int n_int) {
  const auto n = static_cast<std::size_t>(n_int);
  std::vector<int> labels(2 * n);
  std::vector<bool> touches_boundary(3 * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto top = uf.find(i), bottom = uf.find(2 * n + i);
    labels[i] = static_cast<int>(top);
    labels[n + i] = static_cast<int>(bottom);
    touches_boundary[top] = touches_boundary[bottom] = true;
  }
  CompositionResult out;
  std::vector<bool> counted(3 * n, false);
  for (std::size_t m = n; m < 2 * n; ++m) {
    const auto root = uf.find(m);
    if (!touches_boundary[root] && !counted[root]) {
      counted[root] = true;
      ++out.removed_bones;
    }
  }
  out.diagram = PartitionDiagram::from_labels(n_int, labels);
  return out;
}

}  // namespace detail

/// Stacks `top` over `bottom`, identifying the primed row of `top` with the
/// unprimed row of `bottom`, and counts the components left in the middle.
inline CompositionResult compose(const PartitionDiagram& top, const PartitionDiagram& bottom) {
  if (top.n() != bottom.n()) throw SizeMismatch("composing diagrams of different sizes");
  const auto n = static_cast<std::size_t>(top.n());
  UnionFind uf(3 * n);
  detail::link_layer(uf, top, 0, n);
  detail::link_layer(uf, bottom, n, 2 * n);
  return detail::read_outer(uf, top.n());
}

/// Product in P_n(δ'): δ'^(removed components) times the composite diagram.
struct ScaledDiagram {
  Rational coefficient;
  PartitionDiagram diagram;
};

inline ScaledDiagram multiply(const PartitionDiagram& a, const PartitionDiagram& b, const Rational& delta) {
  auto r = compose(a, b);
  return {pow(delta, static_cast<unsigned long>(r.removed_bones)), std::move(r.diagram)};
}

/// Pair (fine, coarse) with fine refining coarse: bones inside islands.
class RamifiedDiagram {
 public:
  RamifiedDiagram() = default;
  RamifiedDiagram(PartitionDiagram fine, PartitionDiagram coarse) : fine_(std::move(fine)), coarse_(std::move(coarse)) {
    if (fine_.n() != coarse_.n()) throw SizeMismatch("ramified layers of different sizes");
    if (!refines(fine_.partition(), coarse_.partition()))
      throw MalformedPartition("fine layer does not refine the coarse layer");
  }

  int n() const { return fine_.n(); }
  const PartitionDiagram& fine() const { return fine_; }
  const PartitionDiagram& coarse() const { return coarse_; }

  /// `fine | coarse`
  std::string to_string() const { return fine_.to_string() + " | " + coarse_.to_string(); }

  friend bool operator==(const RamifiedDiagram&, const RamifiedDiagram&) = default;
  friend auto operator<=>(const RamifiedDiagram&, const RamifiedDiagram&) = default;

 private:
  PartitionDiagram fine_;
  PartitionDiagram coarse_;
};

struct RamifiedProduct {
  RamifiedDiagram diagram;
  int removed_bones = 0;
  int removed_islands = 0;
  Rational coefficient;
};

/// Composes both layers over one stacking.  Each isolated bone contributes
/// δ1 and each isolated island δ2.
inline RamifiedProduct compose_ramified(const RamifiedDiagram& a, const RamifiedDiagram& b, const Rational& delta1,
                                        const Rational& delta2) {
  if (a.n() != b.n()) throw SizeMismatch("composing ramified diagrams of different sizes");
  const auto n = static_cast<std::size_t>(a.n());
  UnionFind bones(3 * n), islands(3 * n);
  detail::link_layer(bones, a.fine(), 0, n);
  detail::link_layer(bones, b.fine(), n, 2 * n);
  detail::link_layer(islands, a.coarse(), 0, n);
  detail::link_layer(islands, b.coarse(), n, 2 * n);
  auto fine = detail::read_outer(bones, a.n());
  auto coarse = detail::read_outer(islands, a.n());
  if (!refines(fine.diagram.partition(), coarse.diagram.partition()))
    throw InvariantViolation("ramified composition left a bone outside its island");
  RamifiedProduct out;
  out.removed_bones = fine.removed_bones;
  out.removed_islands = coarse.removed_bones;
  out.coefficient = pow(delta1, static_cast<unsigned long>(out.removed_bones)) *
                    pow(delta2, static_cast<unsigned long>(out.removed_islands));
  out.diagram = RamifiedDiagram(std::move(fine.diagram), std::move(coarse.diagram));
  return out;
}

/// The named elements 1, A^{i,j}, σ_{i,j} and e_i.
struct Special {
  enum class Kind { one, A, sigma, e };
  Kind kind = Kind::one;
  int i = 0;
  int j = 0;
};

inline PartitionDiagram special(int n, Special s) {
  if (n < 1) throw BadIndex("diagram size must be positive");
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(k)] = labels[static_cast<std::size_t>(n + k)] = k;
  auto top = [&](int i) -> int& { return labels[static_cast<std::size_t>(i - 1)]; };
  auto bottom = [&](int i) -> int& { return labels[static_cast<std::size_t>(n + i - 1)]; };
  switch (s.kind) {
    case Special::Kind::one:
      break;
    case Special::Kind::A:
    case Special::Kind::sigma:
      if (s.i < 1 || s.j <= s.i || s.j > n) throw BadIndex("special element needs 1 <= i < j <= n");
      if (s.kind == Special::Kind::A) {
        top(s.j) = bottom(s.j) = s.i - 1;
      } else {
        bottom(s.j) = s.i - 1;
        bottom(s.i) = s.j - 1;
      }
      break;
    case Special::Kind::e:
      if (s.i < 1 || s.i > n) throw BadIndex("e_i needs 1 <= i <= n");
      bottom(s.i) = n + s.i;
      break;
  }
  return PartitionDiagram::from_labels(n, labels);
}

inline PartitionDiagram identity_diagram(int n) { return special(n, {Special::Kind::one}); }

/// Parses "one", "A(i,j)", "sigma(i,j)" or "e(i)".
inline Special parse_special(std::string_view text) {
  auto args = [&](std::string_view name) -> std::vector<int> {
    if (text.substr(0, name.size()) != name || text.size() < name.size() + 3 || text[name.size()] != '(' ||
        text.back() != ')')
      throw ParseError("bad special element: " + std::string(text));
    std::vector<int> out;
    std::string inner(text.substr(name.size() + 1, text.size() - name.size() - 2));
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      auto comma = inner.find(',', pos);
      std::string part = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        out.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw ParseError("bad index in special element: " + std::string(text));
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  };
  if (text == "one" || text == "1") return {Special::Kind::one};
  if (text.starts_with("A(")) {
    auto a = args("A");
    if (a.size() != 2) throw ParseError("A needs two indices");
    return {Special::Kind::A, a[0], a[1]};
  }
  if (text.starts_with("sigma(")) {
    auto a = args("sigma");
    if (a.size() != 2) throw ParseError("sigma needs two indices");
    return {Special::Kind::sigma, a[0], a[1]};
  }
  if (text.starts_with("e(")) {
    auto a = args("e");
    if (a.size() != 1) throw ParseError("e needs one index");
    return {Special::Kind::e, a[0]};
  }
  throw ParseError("unknown special element: " + std::string(text));
}

/// Blocks holding both a top and a bottom vertex.
inline int propagating_count(const PartitionDiagram& d) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(d.block_count()), 0);
  const auto labels = d.labels();
  for (int v = 0; v < 2 * d.n(); ++v) mask[labels[static_cast<std::size_t>(v)]] |= v < d.n() ? 1 : 2;
  return static_cast<int>(std::count(mask.begin(), mask.end(), 3));
}

/// Blocks {i, w(i)'}.  perm_to_diagram(u * v) = compose(perm_to_diagram(u), perm_to_diagram(v)).
inline PartitionDiagram perm_to_diagram(const Permutation& w) {
  const int n = w.size();
  std::vector<int> labels(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    labels[static_cast<std::size_t>(i - 1)] = i;
    labels[static_cast<std::size_t>(n + w(i) - 1)] = i;
  }
  return PartitionDiagram::from_labels(n, labels);
}

/// The permutation drawn by d, when every block is a single top-bottom pair.
inline std::optional<Permutation> diagram_permutation(const PartitionDiagram& d) {
  const int n = d.n();
  if (d.block_count() != n) return std::nullopt;
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int found = 0;
    for (int k = 1; k <= n; ++k)
      if (d.block_of_bottom(k) == d.block_of_top(i)) {
        if (found) return std::nullopt;
        found = k;
      }
    if (!found) return std::nullopt;
    image[static_cast<std::size_t>(i - 1)] = found;
  }
  return Permutation(std::span<const int>(image));
}

/// Parses `fine | coarse`, or a single partition taken as both layers.
inline RamifiedDiagram parse_ramified(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    PartitionDiagram d(parse_partition(text));
    return {d, d};
  }
  return {PartitionDiagram(parse_partition(text.substr(0, bar))), PartitionDiagram(parse_partition(text.substr(bar + 1)))};
}

inline constexpr int max_partition_algebra_n = 4;

/// Every diagram on 2n vertices, in restricted-growth-string order.
inline std::vector<PartitionDiagram> partition_diagram_basis(int n) {
  if (n < 1 || n > max_partition_algebra_n) throw SizeLimit("partition algebra basis limited to 1 <= n <= 4");
  std::vector<PartitionDiagram> out;
  for_each_rgs(static_cast<std::size_t>(2 * n),
               [&](std::span<const int> labels) { out.push_back(PartitionDiagram::from_labels(n, labels)); });
  return out;
}

/// P_n(δ') on the diagram basis.
inline FiniteDimAlgebra<Rational> partition_algebra(int n, const Rational& delta) {
  const auto basis = partition_diagram_basis(n);
  std::unordered_map<PartitionDiagram, std::uint32_t, PartitionDiagramHash> index;
  std::vector<std::string> labels;
  for (std::uint32_t k = 0; k < basis.size(); ++k) {
    index.emplace(basis[k], k);
    labels.push_back(basis[k].to_string());
  }
  const std::uint32_t unit = index.at(identity_diagram(n));
  return FiniteDimAlgebra<Rational>::build(
      "partition(n=" + std::to_string(n) + ",delta=" + delta.get_str() + ")", std::move(labels), unit,
      [&](std::uint32_t i, std::uint32_t j) {
        auto p = multiply(basis[i], basis[j], delta);
        AlgebraElement<Rational> e;
        if (!is_zero(p.coefficient)) e.emplace(index.at(p.diagram), p.coefficient);
        return e;
      });
}

}  // namespace diagramalg
