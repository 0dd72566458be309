#pragma once

#include <map>
#include <vector>

namespace diagramalg {

/// Sparse coefficient vector keyed by basis label; zero entries are never
/// stored.
template <class Key, class F>
using SparseVector = std::map<Key, F>;

/// y += a * x
template <class Key, class F>
void axpy(SparseVector<Key, F>& y, const F& a, const SparseVector<Key, F>& x) {
  if (is_zero(a)) return;
  for (const auto& [k, v] : x) {
    F term = a * v;
    auto [it, fresh] = y.try_emplace(k, term);
    if (!fresh) {
      it->second += term;
      if (is_zero(it->second)) y.erase(it);
    } else if (is_zero(it->second)) {
      y.erase(it);
    }
  }
}

/// Row echelon form kept incrementally: each row is monic at its smallest
/// key and no two rows share that key.
template <class Key, class F>
class SparseEchelon {
 public:
  using Vector = SparseVector<Key, F>;

  Vector reduce(Vector v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key k = it->first;
      const F c = it->second;
      axpy(v, F(-c), row->second);
      it = v.upper_bound(k);
    }
    return v;
  }

  /// Adds v to the span; returns the new echelon row when v was independent.
  const Vector* insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.empty()) return nullptr;
    const F inv = F(1) / r.begin()->second;
    for (auto& [k, c] : r) c = c * inv;
    auto [it, fresh] = rows_.emplace(r.begin()->first, std::move(r));
    return &it->second;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

  std::vector<Vector> basis() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const auto& [k, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  std::map<Key, Vector> rows_;
};

}  // namespace diagramalg
