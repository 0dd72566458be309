#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "diagramalg/partitions.hpp"

using namespace diagramalg;

namespace {

using Blocks = std::set<std::set<int>>;

// Every partition of {0..n-1}: place each element in an existing block or a new one.
std::set<Blocks> brute_partitions(int n) {
  std::set<Blocks> out;
  std::vector<std::set<int>> cur;
  std::function<void(int)> go = [&](int k) {
    if (k == n) {
      out.insert(Blocks(cur.begin(), cur.end()));
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].insert(k);
      go(k + 1);
      cur[b].erase(k);
    }
    cur.push_back({k});
    go(k + 1);
    cur.pop_back();
  };
  go(0);
  return out;
}

Blocks as_blocks(const SetPartition& p) {
  Blocks out;
  for (const auto& b : p.blocks()) {
    std::set<int> s;
    for (const auto& e : b) s.insert(e.index - 1);
    out.insert(s);
  }
  return out;
}

// Stirling numbers of the second kind summed over k.
Integer stirling_bell(int n) {
  std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += s[n][k];
  return total;
}

bool refines_by_definition(const SetPartition& p, const SetPartition& q) {
  for (const auto& pb : p.blocks()) {
    bool inside = false;
    for (const auto& qb : q.blocks())
      if (std::includes(qb.begin(), qb.end(), pb.begin(), pb.end())) inside = true;
    if (!inside) return false;
  }
  return true;
}

GroundElement top(int i) { return {i, false}; }
GroundElement bot(int i) { return {i, true}; }

}  // namespace

TEST(SetPartition, CanonicalFormSortsBlocksAndElements) {
  SetPartition p({{bot(2)}, {top(2), top(1), bot(1)}});
  EXPECT_EQ(format(p), "{1,2,1'}{2'}");
  EXPECT_EQ(p.block_count(), 2u);
  SetPartition q({{top(3), top(1)}, {top(2)}});
  EXPECT_EQ(format(q), "{1,3}{2}");
  EXPECT_EQ((std::vector<int>{0, 1, 0}), q.labels());
}

TEST(SetPartition, RejectsMalformedBlocks) {
  EXPECT_THROW(SetPartition(unprimed_ground(3), {{top(1), top(2)}, {top(2), top(3)}}), MalformedPartition);
  EXPECT_THROW(SetPartition(unprimed_ground(3), {{top(1), top(2)}}), MalformedPartition);
  EXPECT_THROW(SetPartition(unprimed_ground(2), {{top(1), top(2)}, {}}), MalformedPartition);
  EXPECT_THROW(SetPartition(unprimed_ground(2), {{top(1), top(2), top(3)}}), MalformedPartition);
}

TEST(SetPartition, EqualityIsOrderIndependent) {
  EXPECT_EQ(SetPartition({{top(2), top(1)}, {top(3)}}), SetPartition({{top(3)}, {top(1), top(2)}}));
  EXPECT_NE(SetPartition({{top(1), top(2)}, {top(3)}}), SetPartition({{top(1), top(3)}, {top(2)}}));
}

TEST(Enumeration, MatchesBruteForceAsSets) {
  for (int n = 0; n <= 7; ++n) {
    std::set<Blocks> got;
    for (const auto& p : enumerate_partitions(unprimed_ground(n))) got.insert(as_blocks(p));
    EXPECT_EQ(got, brute_partitions(n)) << "n=" << n;
  }
}

TEST(Enumeration, CountsAgreeWithTwoBellOracles) {
  for (int n = 0; n <= 8; ++n) {
    std::size_t count = 0;
    for_each_partition(unprimed_ground(n), [&](const SetPartition&) { ++count; });
    EXPECT_EQ(Integer(count), bell(n)) << n;
    EXPECT_EQ(bell(n), stirling_bell(n)) << n;
  }
  EXPECT_EQ(bell(15), Integer("1382958545"));
}

TEST(Enumeration, RestrictedGrowthOrder) {
  const auto all = enumerate_partitions(unprimed_ground(4));
  ASSERT_EQ(all.size(), 15u);
  EXPECT_EQ(all.front(), coarsest(unprimed_ground(4)));
  EXPECT_EQ(all.back(), finest(unprimed_ground(4)));
  for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(all[k - 1].labels(), all[k].labels());
}

TEST(Enumeration, EnforcesSizeBound) {
  EXPECT_THROW(enumerate_partitions(unprimed_ground(13)), SizeLimit);
  EXPECT_THROW(enumerate_partitions({top(1), top(1)}), MalformedPartition);
  EXPECT_THROW(bell(-1), BadIndex);
}

TEST(Enumeration, TwoRowListingOfFifteen) {
  const char* listing[] = {"{1}{2}{1'}{2'}", "{1,2,1',2'}", "{1,2,1'}{2'}", "{1,2,2'}{1'}", "{1,1',2'}{2}",
                           "{2,1',2'}{1}",   "{1,2}{1',2'}", "{1,1'}{2,2'}", "{1,2'}{1',2}", "{1,2}{1'}{2'}",
                           "{1,1'}{2}{2'}",  "{1,2'}{1'}{2}", "{1',2}{1}{2'}", "{2,2'}{1}{1'}", "{1',2'}{1}{2}"};
  std::set<SetPartition> expected;
  for (auto s : listing) expected.insert(parse_partition(s));
  EXPECT_EQ(expected.size(), 15u);
  const auto all = enumerate_partitions(two_row_ground(2));
  EXPECT_EQ(std::set<SetPartition>(all.begin(), all.end()), expected);
}

TEST(TextForm, RoundTripsAndRejectsGarbage) {
  for (const auto& p : enumerate_partitions(two_row_ground(2))) EXPECT_EQ(parse_partition(format(p)), p);
  EXPECT_EQ(format(parse_partition(" {2, 1} {3'} ")), "{1,2}{3'}");
  EXPECT_THROW(parse_partition("{1,2"), ParseError);
  EXPECT_THROW(parse_partition("1,2}"), ParseError);
  EXPECT_THROW(parse_partition("{1,x}"), ParseError);
  EXPECT_THROW(parse_partition("{1,2}{2}"), MalformedPartition);
}

TEST(Refinement, MatchesDefinitionAndFormsAPoset) {
  for (const auto& ground : {unprimed_ground(4), two_row_ground(2)}) {
    const auto all = enumerate_partitions(ground);
    for (const auto& p : all) {
      EXPECT_TRUE(refines(p, p));
      EXPECT_TRUE(refines(finest(ground), p));
      EXPECT_TRUE(refines(p, coarsest(ground)));
      for (const auto& q : all) {
        EXPECT_EQ(refines(p, q), refines_by_definition(p, q));
        if (refines(p, q) && refines(q, p)) {
          EXPECT_EQ(p, q);
        }
        if (!refines(p, q)) continue;
        for (const auto& r : all)
          if (refines(q, r)) {
            EXPECT_TRUE(refines(p, r));
          }
      }
    }
  }
}

TEST(Refinement, JoinIsTheLeastUpperBound) {
  const auto all = enumerate_partitions(unprimed_ground(4));
  for (const auto& p : all)
    for (const auto& q : all) {
      const auto j = join(p, q);
      EXPECT_TRUE(refines(p, j));
      EXPECT_TRUE(refines(q, j));
      for (const auto& r : all)
        if (refines(p, r) && refines(q, r)) {
          EXPECT_TRUE(refines(j, r));
        }
      EXPECT_EQ(j, join(q, p));
    }
}

TEST(Refinement, RestrictionIsMonotone) {
  for (const auto& ground : {unprimed_ground(4), two_row_ground(2)}) {
    const auto all = enumerate_partitions(ground);
    const auto m = ground.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<GroundElement> y;
      for (std::size_t k = 0; k < m; ++k)
        if (mask >> k & 1) y.push_back(ground[k]);
      for (const auto& p : all)
        for (const auto& q : all)
          if (refines(p, q)) {
            EXPECT_TRUE(refines(restrict(p, y), restrict(q, y)));
          }
    }
  }
}

TEST(Refinement, RestrictionKeepsNonemptyIntersections) {
  const auto p = parse_partition("{1,2,1'}{2'}");
  EXPECT_EQ(format(restrict(p, std::vector<GroundElement>{top(2), bot(1), bot(2)})), "{2,1'}{2'}");
  EXPECT_THROW(restrict(p, std::vector<GroundElement>{top(3)}), GroundMismatch);
}

TEST(Refinement, DifferentGroundsAreRejected) {
  EXPECT_THROW(refines(finest(unprimed_ground(2)), finest(unprimed_ground(3))), GroundMismatch);
  EXPECT_THROW(join(finest(unprimed_ground(2)), finest(two_row_ground(1))), GroundMismatch);
}

TEST(Conjugation, IsARightActionOfTheProduct) {
  const auto perms = all_permutations(4);
  const auto parts = enumerate_partitions(unprimed_ground(4));
  for (const auto& u : perms)
    for (const auto& v : perms)
      for (std::size_t k = 0; k < parts.size(); k += 3)
        EXPECT_EQ(conjugate(conjugate(parts[k], u), v), conjugate(parts[k], u * v));
  const Permutation w{2, 3, 1};
  EXPECT_EQ(format(conjugate(parse_partition("{1,2}{3}"), w)), "{1}{2,3}");
}
