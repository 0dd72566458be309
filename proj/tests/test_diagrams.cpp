#include <gtest/gtest.h>

#include <queue>
#include <set>
#include <random>

#include "diagramalg/diagrams.hpp"

using namespace diagramalg;

namespace {

// Stacking by breadth-first search over an explicit adjacency list:
// top copy on nodes 0..2n-1 (its bottom row is the middle), bottom copy
// shifted by n.
std::pair<PartitionDiagram, int> stack_by_search(const PartitionDiagram& a, const PartitionDiagram& b) {
  const int n = a.n();
  std::vector<std::vector<int>> adj(3 * n);
  auto link = [&](const PartitionDiagram& d, int shift) {
    for (int u = 0; u < 2 * n; ++u)
      for (int v = 0; v < 2 * n; ++v)
        if (u != v && d.labels()[u] == d.labels()[v]) adj[u + shift].push_back(v + shift);
  };
  link(a, 0);
  link(b, n);
  std::vector<int> comp(3 * n, -1);
  int count = 0;
  for (int s = 0; s < 3 * n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = count;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (comp[v] < 0) comp[v] = count, q.push(v);
    }
    ++count;
  }
  std::vector<int> labels(2 * n);
  std::vector<bool> outer(count, false);
  for (int i = 0; i < n; ++i) {
    labels[i] = comp[i];
    labels[n + i] = comp[2 * n + i];
    outer[comp[i]] = outer[comp[2 * n + i]] = true;
  }
  std::set<int> inner;
  for (int m = n; m < 2 * n; ++m)
    if (!outer[comp[m]]) inner.insert(comp[m]);
  return {PartitionDiagram::from_labels(n, labels), static_cast<int>(inner.size())};
}

std::vector<RamifiedDiagram> ramified_basis(int n) {
  const auto all = partition_diagram_basis(n);
  std::vector<RamifiedDiagram> out;
  for (const auto& f : all)
    for (const auto& c : all)
      if (refines(f.partition(), c.partition())) out.emplace_back(f, c);
  return out;
}

PartitionDiagram diag(const char* text) { return PartitionDiagram(parse_partition(text)); }

}  // namespace

TEST(Diagram, SpecialElements) {
  EXPECT_EQ(special(3, {Special::Kind::A, 1, 2}).to_string(), "{1,2,1',2'}{3,3'}");
  EXPECT_EQ(special(3, {Special::Kind::sigma, 1, 2}).to_string(), "{1,2'}{2,1'}{3,3'}");
  EXPECT_EQ(special(3, {Special::Kind::e, 2}).to_string(), "{1,1'}{2}{3,3'}{2'}");
  EXPECT_EQ(identity_diagram(2).to_string(), "{1,1'}{2,2'}");
  EXPECT_EQ(special(3, parse_special("A(1,3)")).to_string(), "{1,3,1',3'}{2,2'}");
  EXPECT_THROW(parse_special("B(1,2)"), ParseError);
  EXPECT_THROW(parse_special("A(1)"), ParseError);
  EXPECT_THROW(special(2, {Special::Kind::sigma, 1, 3}), BadIndex);
}

TEST(Diagram, GroundSetIsChecked) {
  EXPECT_THROW(PartitionDiagram(parse_partition("{1,2}{1'}")), GroundMismatch);
  EXPECT_THROW(compose(identity_diagram(2), identity_diagram(3)), SizeMismatch);
  EXPECT_THROW(RamifiedDiagram(diag("{1,2,1',2'}"), diag("{1,1'}{2,2'}")), MalformedPartition);
}

TEST(Composition, MatchesSearchOracleExhaustivelyForTwo) {
  const auto basis = partition_diagram_basis(2);
  ASSERT_EQ(basis.size(), 15u);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const auto r = compose(a, b);
      const auto [d, removed] = stack_by_search(a, b);
      EXPECT_EQ(r.diagram, d) << a.to_string() << " * " << b.to_string();
      EXPECT_EQ(r.removed_bones, removed);
    }
}

TEST(Composition, MatchesSearchOracleOnRandomPairsForThree) {
  const auto basis = partition_diagram_basis(3);
  ASSERT_EQ(basis.size(), 203u);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int s = 0; s < 5000; ++s) {
    const auto& a = basis[pick(rng)];
    const auto& b = basis[pick(rng)];
    const auto r = compose(a, b);
    const auto [d, removed] = stack_by_search(a, b);
    EXPECT_EQ(r.diagram, d);
    EXPECT_EQ(r.removed_bones, removed);
  }
}

TEST(Composition, AssociativeOnAllTriplesForTwo) {
  const auto basis = partition_diagram_basis(2);
  std::size_t products = 0;
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        const auto ab = compose(a, b), bc = compose(b, c);
        const auto left = compose(ab.diagram, c), right = compose(a, bc.diagram);
        EXPECT_EQ(left.diagram, right.diagram);
        EXPECT_EQ(ab.removed_bones + left.removed_bones, bc.removed_bones + right.removed_bones);
        ++products;
      }
  EXPECT_EQ(products, 3375u);
}

TEST(Composition, AssociativeOnRandomTriplesForThree) {
  const auto basis = partition_diagram_basis(3);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int s = 0; s < 20000; ++s) {
    const auto &a = basis[pick(rng)], &b = basis[pick(rng)], &c = basis[pick(rng)];
    const auto ab = compose(a, b), bc = compose(b, c);
    const auto left = compose(ab.diagram, c), right = compose(a, bc.diagram);
    ASSERT_EQ(left.diagram, right.diagram);
    ASSERT_EQ(ab.removed_bones + left.removed_bones, bc.removed_bones + right.removed_bones);
  }
}

TEST(Composition, IdentityAndGeneratorRelations) {
  for (const auto& a : partition_diagram_basis(3)) {
    EXPECT_EQ(compose(identity_diagram(3), a).diagram, a);
    EXPECT_EQ(compose(a, identity_diagram(3)).diagram, a);
  }
  const auto A = special(3, {Special::Kind::A, 1, 2});
  const auto s = special(3, {Special::Kind::sigma, 1, 2});
  const auto e = special(3, {Special::Kind::e, 1});
  EXPECT_EQ(compose(A, A).diagram, A);
  EXPECT_EQ(compose(A, A).removed_bones, 0);
  EXPECT_EQ(compose(s, s).diagram, identity_diagram(3));
  EXPECT_EQ(compose(e, e).diagram, e);
  EXPECT_EQ(compose(e, e).removed_bones, 1);
  EXPECT_EQ(multiply(e, e, Rational(7)).coefficient, 7);
}

TEST(Composition, PermutationsEmbedAsAGroup) {
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3)) {
      const auto r = compose(perm_to_diagram(u), perm_to_diagram(v));
      EXPECT_EQ(r.diagram, perm_to_diagram(u * v));
      EXPECT_EQ(r.removed_bones, 0);
    }
  for (const auto& w : all_permutations(4)) {
    EXPECT_EQ(diagram_permutation(perm_to_diagram(w)), w);
    EXPECT_EQ(propagating_count(perm_to_diagram(w)), 4);
  }
  EXPECT_FALSE(diagram_permutation(special(3, {Special::Kind::A, 1, 2})).has_value());
  EXPECT_EQ(propagating_count(special(3, {Special::Kind::e, 1})), 2);
}

TEST(Ramified, LayersComposeIndependentlyWithinIslands) {
  const auto basis = ramified_basis(2);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const auto r = compose_ramified(a, b, Rational(2), Rational(3));
      const auto [fine, bones] = stack_by_search(a.fine(), b.fine());
      const auto [coarse, islands] = stack_by_search(a.coarse(), b.coarse());
      EXPECT_EQ(r.diagram.fine(), fine);
      EXPECT_EQ(r.diagram.coarse(), coarse);
      EXPECT_EQ(r.removed_bones, bones);
      EXPECT_EQ(r.removed_islands, islands);
      EXPECT_TRUE(refines(fine.partition(), coarse.partition()));
      EXPECT_EQ(r.coefficient, pow(Rational(2), bones) * pow(Rational(3), islands));
    }
}

TEST(Ramified, AssociativeWithCoefficients) {
  const auto basis = ramified_basis(2);
  const Rational d1(2), d2(3);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        const auto ab = compose_ramified(a, b, d1, d2), bc = compose_ramified(b, c, d1, d2);
        const auto l = compose_ramified(ab.diagram, c, d1, d2), r = compose_ramified(a, bc.diagram, d1, d2);
        ASSERT_EQ(l.diagram, r.diagram);
        ASSERT_EQ(ab.coefficient * l.coefficient, bc.coefficient * r.coefficient);
      }
}

TEST(Ramified, ExampleIslandCrossing) {
  const auto r = parse_ramified("{1,2,3}{1',2'}{3'}{4,5'}{5,4'} | {1,2,3,1',2'}{3'}{4,5'}{5,4'}");
  EXPECT_EQ(r.n(), 5);
  EXPECT_EQ(propagating_count(r.fine()), 2);
  EXPECT_EQ(parse_ramified(r.to_string()), r);
}

TEST(PartitionAlgebra, DimensionUnitAndAssociativity) {
  for (int n = 1; n <= 2; ++n) {
    const auto a = partition_algebra(n, Rational(n == 1 ? 5 : 3));
    EXPECT_EQ(a.dim(), bell(2 * n).get_ui());
    EXPECT_TRUE(is_associative(a));
    for (std::uint32_t i = 0; i < a.dim(); ++i) {
      EXPECT_EQ(a.multiply(a.unit(), a.basis(i)), a.basis(i));
      EXPECT_EQ(a.multiply(a.basis(i), a.unit()), a.basis(i));
    }
  }
  EXPECT_EQ(partition_algebra(3, Rational(1, 2)).dim(), 203u);
  EXPECT_THROW(partition_diagram_basis(5), SizeLimit);
}

TEST(PartitionAlgebra, SemisimpleExactlyOffTheIntegersBelowThree) {
  // P_2(δ) degenerates exactly at δ in {0, 1, 2}.
  for (int num : {-3, -1, 0, 1, 2, 3, 4, 7}) {
    const auto a = partition_algebra(2, Rational(num));
    const auto g = trace_gram(a);
    EXPECT_EQ(g, g.transpose());
    EXPECT_EQ(g, trace_gram_via_matrices(a));
    const bool expected = num < 0 || num > 2;
    EXPECT_EQ(radical_dim(a) == 0, expected) << "delta=" << num;
  }
  EXPECT_EQ(radical_dim(partition_algebra(2, Rational(1, 2))), 0u);
}
