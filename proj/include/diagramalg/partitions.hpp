#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diagramalg/errors.hpp"
#include "diagramalg/exactlin/rational.hpp"
#include "diagramalg/permutation.hpp"
#include "diagramalg/union_find.hpp"

namespace diagramalg {

/// A vertex label i or i'.  Unprimed elements precede primed ones; within a
/// row the order is by index.
struct GroundElement {
  int index = 1;
  bool primed = false;

  friend constexpr std::strong_ordering operator<=>(const GroundElement& a, const GroundElement& b) {
    if (a.primed != b.primed) return a.primed ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.index <=> b.index;
  }
  friend constexpr bool operator==(const GroundElement&, const GroundElement&) = default;

  std::string to_string() const { return std::to_string(index) + (primed ? "'" : ""); }
};

using Block = std::vector<GroundElement>;

inline std::vector<GroundElement> unprimed_ground(int n) {
  std::vector<GroundElement> g;
  for (int i = 1; i <= n; ++i) g.push_back({i, false});
  return g;
}

/// {1..n} followed by {1'..n'}.
inline std::vector<GroundElement> two_row_ground(int n) {
  auto g = unprimed_ground(n);
  for (int i = 1; i <= n; ++i) g.push_back({i, true});
  return g;
}

/// Partition of an explicit finite ground set, always held in canonical
/// form: blocks sorted internally and ordered by least element.  Equality of
/// canonical forms is partition equality.
class SetPartition {
 public:
  SetPartition() = default;

  /// Validates that `blocks` are nonempty, pairwise disjoint and cover
  /// `ground`; throws MalformedPartition otherwise.
  SetPartition(std::vector<GroundElement> ground, const std::vector<Block>& blocks) {
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
      throw MalformedPartition("repeated ground element");
    std::vector<int> labels(ground.size(), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw MalformedPartition("empty block");
      for (const auto& e : blocks[b]) {
        auto it = std::lower_bound(ground.begin(), ground.end(), e);
        if (it == ground.end() || *it != e)
          throw MalformedPartition("block element " + e.to_string() + " not in ground set");
        auto pos = static_cast<std::size_t>(it - ground.begin());
        if (labels[pos] != -1) throw MalformedPartition("element " + e.to_string() + " in two blocks");
        labels[pos] = static_cast<int>(b);
      }
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == -1) throw MalformedPartition("element " + ground[i].to_string() + " not covered");
    *this = from_labels(std::move(ground), labels);
  }

  /// Ground set taken to be the union of the blocks.
  explicit SetPartition(const std::vector<Block>& blocks) : SetPartition(union_of(blocks), blocks) {}

  /// `ground` must be sorted without repeats; `labels[k]` names the block of
  /// ground[k] with arbitrary integers.
  static SetPartition from_labels(std::vector<GroundElement> ground, std::span<const int> labels) {
    SetPartition p;
    p.ground_ = std::move(ground);
    std::vector<std::pair<int, int>> seen;  // original label -> canonical id
    for (std::size_t k = 0; k < labels.size(); ++k) {
      int id = -1;
      for (const auto& [orig, canon] : seen)
        if (orig == labels[k]) id = canon;
      if (id == -1) {
        id = static_cast<int>(p.blocks_.size());
        seen.emplace_back(labels[k], id);
        p.blocks_.emplace_back();
      }
      p.blocks_[static_cast<std::size_t>(id)].push_back(p.ground_[k]);
    }
    return p;
  }

  const std::vector<GroundElement>& ground() const { return ground_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return ground_.size(); }
  std::size_t block_count() const { return blocks_.size(); }

  std::optional<std::size_t> position(GroundElement e) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), e);
    if (it == ground_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - ground_.begin());
  }

  /// Restricted growth string: block number of each ground element.
  std::vector<int> labels() const {
    std::vector<int> out(ground_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (const auto& e : blocks_[b]) out[*position(e)] = static_cast<int>(b);
    return out;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.ground_ <=> b.ground_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  static std::vector<GroundElement> union_of(const std::vector<Block>& blocks) {
    std::vector<GroundElement> g;
    for (const auto& b : blocks) g.insert(g.end(), b.begin(), b.end());
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw MalformedPartition("element in two blocks");
    return g;
  }

  std::vector<GroundElement> ground_;
  std::vector<Block> blocks_;
};

inline SetPartition canonicalize(std::vector<GroundElement> ground, const std::vector<Block>& blocks) {
  return SetPartition(std::move(ground), blocks);
}

inline SetPartition canonicalize(const SetPartition& p) { return p; }

inline SetPartition finest(std::vector<GroundElement> ground) {
  std::sort(ground.begin(), ground.end());
  std::vector<int> labels(ground.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
  return SetPartition::from_labels(std::move(ground), labels);
}

inline SetPartition coarsest(std::vector<GroundElement> ground) {
  std::sort(ground.begin(), ground.end());
  std::vector<int> labels(ground.size(), 0);
  return SetPartition::from_labels(std::move(ground), labels);
}

/// True when every block of q is a union of blocks of p (p <= q).
inline bool refines(const SetPartition& p, const SetPartition& q) {
  if (p.ground() != q.ground()) throw GroundMismatch("refinement across different ground sets");
  const auto q_labels = q.labels();
  for (const auto& block : p.blocks()) {
    const int target = q_labels[*q.position(block.front())];
    for (const auto& e : block)
      if (q_labels[*q.position(e)] != target) return false;
  }
  return true;
}

/// The blocks c ∩ Y for c in p, dropping empty intersections.
inline SetPartition restrict(const SetPartition& p, std::span<const GroundElement> subset) {
  std::vector<GroundElement> sub(subset.begin(), subset.end());
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  const auto p_labels = p.labels();
  std::vector<int> labels;
  labels.reserve(sub.size());
  for (const auto& e : sub) {
    auto pos = p.position(e);
    if (!pos) throw GroundMismatch("restriction to a set outside the ground set");
    labels.push_back(p_labels[*pos]);
  }
  return SetPartition::from_labels(std::move(sub), labels);
}

/// Finest partition coarser than both p and q.
inline SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (p.ground() != q.ground()) throw GroundMismatch("join across different ground sets");
  UnionFind uf(p.size());
  for (const auto* part : {&p, &q})
    for (const auto& block : part->blocks()) {
      const auto first = *part->position(block.front());
      for (const auto& e : block) uf.unite(first, *part->position(e));
    }
  std::vector<int> labels(p.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(uf.find(i));
  return SetPartition::from_labels(p.ground(), labels);
}

inline constexpr std::size_t default_enumeration_bound = 12;

/// Visits every restricted growth string of length n in lexicographic order.
template <class Visitor>
void for_each_rgs(std::size_t n, Visitor&& visit) {
  std::vector<int> a(n, 0);
  std::vector<int> prefix_max(n, 0);  // max of a[0..i-1]
  if (n == 0) {
    visit(std::span<const int>(a));
    return;
  }
  while (true) {
    visit(std::span<const int>(a));
    std::size_t i = n - 1;
    while (i >= 1 && a[i] > prefix_max[i]) --i;
    if (i == 0) return;
    ++a[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = std::max(prefix_max[j - 1], a[j - 1]);
    }
  }
}

/// All partitions of `ground`, once each, in restricted-growth-string order.
template <class Visitor>
void for_each_partition(std::vector<GroundElement> ground, Visitor&& visit,
                        std::size_t bound = default_enumeration_bound) {
  if (ground.size() > bound) throw SizeLimit("ground set larger than the enumeration bound");
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
    throw MalformedPartition("repeated ground element");
  for_each_rgs(ground.size(), [&](std::span<const int> labels) { visit(SetPartition::from_labels(ground, labels)); });
}

inline std::vector<SetPartition> enumerate_partitions(std::vector<GroundElement> ground,
                                                      std::size_t bound = default_enumeration_bound) {
  std::vector<SetPartition> out;
  for_each_partition(std::move(ground), [&](SetPartition p) { out.push_back(std::move(p)); }, bound);
  return out;
}

/// Bell number via the Bell triangle.
inline Integer bell(int n) {
  if (n < 0) throw BadIndex("bell of a negative number");
  std::vector<Integer> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<Integer> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

/// Relabels i -> w(i) and i' -> w(i)'.  The ground set must be mapped onto
/// itself, as it is for {1..n} and {1..n} ∪ {1'..n'}.
inline SetPartition conjugate(const SetPartition& p, const Permutation& w) {
  std::vector<Block> blocks;
  for (const auto& block : p.blocks()) {
    Block moved;
    for (const auto& e : block) {
      if (e.index < 1 || e.index > w.size()) throw GroundMismatch("permutation does not act on the ground set");
      moved.push_back({w(e.index), e.primed});
    }
    blocks.push_back(std::move(moved));
  }
  SetPartition out(blocks);
  if (out.ground() != p.ground()) throw GroundMismatch("permutation moves the ground set");
  return out;
}

/// Text form: `{1,2,1'}{2'}`.
inline std::string format(const SetPartition& p) {
  std::string s;
  for (const auto& block : p.blocks()) {
    s += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) s += ',';
      s += block[k].to_string();
    }
    s += '}';
  }
  return s;
}

/// Parses the text form; the ground set is the union of the blocks.
inline SetPartition parse_partition(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("expected '{' in partition text: " + std::string(text));
    ++i;
    Block block;
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) {
        if (i < text.size() && text[i] == '}' && block.empty()) throw MalformedPartition("empty block");
        throw ParseError("expected an element in partition text: " + std::string(text));
      }
      GroundElement e{std::stoi(std::string(text.substr(start, i - start))), false};
      if (e.index < 1) throw ParseError("elements are numbered from 1");
      if (i < text.size() && text[i] == '\'') {
        e.primed = true;
        ++i;
      }
      block.push_back(e);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or '}' in partition text: " + std::string(text));
    }
    blocks.push_back(std::move(block));
    skip_ws();
  }
  return SetPartition(blocks);
}

}  // namespace diagramalg
