#include <gtest/gtest.h>

#include <set>

#include "hibi/corpus.hpp"
#include "hibi/divisor_lattice.hpp"
#include "hibi/error.hpp"
#include "hibi/sequences.hpp"
#include "oracles.hpp"

using namespace hibi;

namespace {

// The three vertex diagrams of C^(-1)_(y,x) on P1.
Labeling vertex_a(const Poset& p) {
  return labeling_from(p, {{"x0", -2}, {"w", -1}, {"x", -2}, {"z", -1}, {"y", 0}, {"v", -1}});
}
Labeling vertex_b(const Poset& p) {
  return labeling_from(p, {{"x0", -3}, {"w", -2}, {"x", -2}, {"z", -1}, {"y", -1}, {"v", -1}});
}
Labeling vertex_c(const Poset& p) {
  return labeling_from(p, {{"x0", -3}, {"w", -2}, {"x", -2}, {"z", -2}, {"y", -1}, {"v", -1}});
}

Labeling floor_labeling(const Poset& p, std::int64_t n) {
  Labeling v = Labeling::zero(p.size());
  for (Element z = 0; z < p.size(); ++z) v.set(z, qdist(p, n, z, p.top()));
  return v;
}

}  // namespace

TEST(DivisorLattice, InT) {
  Poset p = corpus_poset("P1");
  EXPECT_TRUE(in_T(p, 0, Labeling::zero(p.size())));
  EXPECT_TRUE(in_T(p, -1, vertex_a(p)));
  EXPECT_FALSE(in_T(p, 1, vertex_a(p)));
}

TEST(DivisorLattice, Order) {
  Poset p = corpus_poset("P1");
  const Labeling a = vertex_a(p);
  EXPECT_TRUE(leq_T(p, -1, a, a));
  for (const auto& i : poset_ideals(p)) EXPECT_TRUE(leq_T(p, -1, a, a + Labeling::indicator(p.size(), i)));
  EXPECT_FALSE(leq_T(p, -1, a, vertex_b(p)));
  EXPECT_THROW(leq_T(p, 1, a, a), PreconditionError);
}

TEST(DivisorLattice, MinimalityExamples) {
  Poset p = corpus_poset("P1");
  for (const auto& v : {vertex_a(p), vertex_b(p), vertex_c(p)}) {
    EXPECT_TRUE(is_minimal(p, -1, v));
    EXPECT_FALSE(is_minimal(p, -1, v + Labeling::indicator(p.size(), poset_ideals(p).back())));
  }
  EXPECT_THROW(is_minimal(p, 1, vertex_a(p)), PreconditionError);
}

TEST(DivisorLattice, P1AnticanonicalGenerators) {
  Poset p = corpus_poset("P1");
  auto g = generators(p, -1);
  std::set<Labeling> got(g.begin(), g.end());
  std::set<Labeling> want{vertex_a(p), vertex_b(p), vertex_c(p)};
  EXPECT_EQ(got, want);
  EXPECT_EQ(g.size(), 3u);
}

TEST(DivisorLattice, ChainHasUniqueGenerator) {
  for (const char* name : {"chain1", "chain2", "chain3", "chain4"}) {
    Poset p = corpus_poset(name);
    for (std::int64_t n : {-3, -1, 1, 2}) {
      auto g = generators(p, n);
      ASSERT_EQ(g.size(), 1u);
      EXPECT_EQ(g[0], floor_labeling(p, n));
    }
  }
  Poset p = corpus_poset("chain2");
  auto all = oracle::box_points(p, 1, 0, 4);
  std::size_t minimal = 0;
  for (const auto& v : all) minimal += oracle::is_minimal(p, 1, v);
  EXPECT_EQ(minimal, 1u);
}

TEST(DivisorLattice, ZeroGivesZeroLabeling) {
  Poset p = corpus_poset("P2");
  auto g = generators(p, 0);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], Labeling::zero(p.size()));
}

// Fast closure test against the literal ideal-subtraction definition, on every
// point of T^(n) in the generator box.
TEST(DivisorLattice, ClosureMinimalityMatchesIdealSubtraction) {
  for (const auto& d : builtin_corpus()) {
    Poset p = to_poset(d);
    const oracle::Minimality literal(p);
    for (std::int64_t n : {-2, -1, 1, 2}) {
      std::size_t count = 0;
      enumerate_T_box(p, n, [&](const Labeling& v) {
        ++count;
        ASSERT_EQ(is_minimal(p, n, v), literal(n, v)) << d.name << " n=" << n;
      });
      EXPECT_GT(count, 0u);
    }
  }
}

// The pruned box walk yields exactly the in_T points of the plain box.
TEST(DivisorLattice, BoxEnumerationMatchesOdometer) {
  for (const char* name : {"P1", "antichain2", "upf1", "chain2"}) {
    Poset p = corpus_poset(name);
    for (std::int64_t n : {-1, 1}) {
      const BoxConstraints box = generator_box(p, n);
      const std::int64_t lo = *std::min_element(box.lower.begin(), box.lower.end());
      const std::int64_t hi = *std::max_element(box.upper.begin(), box.upper.end());
      std::set<Labeling> want;
      for (const auto& v : oracle::box_points(p, n, lo, hi)) {
        bool inside = true;
        for (Element z = 0; z < p.size(); ++z) inside = inside && v[z] >= box.lower[z] && v[z] <= box.upper[z];
        if (inside) want.insert(v);
      }
      std::set<Labeling> got;
      enumerate_T_box(p, n, [&](const Labeling& v) { EXPECT_TRUE(got.insert(v).second); });
      EXPECT_EQ(got, want) << name << " n=" << n;
    }
  }
}

TEST(DivisorLattice, GeneratorsAreBoxMinimalPoints) {
  for (const auto& d : builtin_corpus()) {
    Poset p = to_poset(d);
    const oracle::Minimality literal(p);
    for (std::int64_t n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      std::set<Labeling> want;
      enumerate_T_box(p, n, [&](const Labeling& v) {
        if (in_T(p, n, v) && literal(n, v)) want.insert(v);
      });
      auto g = generators(p, n);
      EXPECT_EQ(std::set<Labeling>(g.begin(), g.end()), want) << d.name << " n=" << n;
      for (const auto& v : g) {
        EXPECT_GE(degree(p, v), q0(p, n));
        EXPECT_LE(degree(p, v), q_max(p, n));
      }
    }
  }
}

TEST(DivisorLattice, BudgetIsEnforced) {
  Poset p = corpus_poset("P2");
  EXPECT_THROW(generators(p, -2, 5), BudgetExceeded);
}

TEST(DivisorLattice, MaxMinClosure) {
  for (const char* name : {"P1", "P2", "upf3"}) {
    Poset p = corpus_poset(name);
    for (std::int64_t m : {-2, -1, 1}) {
      std::vector<Labeling> pts;
      enumerate_T_box(p, m, [&](const Labeling& v) {
        if (pts.size() < 60) pts.push_back(v);
      });
      for (const auto& a : pts)
        for (const auto& b : pts) {
          EXPECT_TRUE(in_T(p, m, pointwise_max(a, b)));
          EXPECT_TRUE(in_T(p, m, pointwise_min(a, b)));
        }
    }
  }
}

TEST(DivisorLattice, SplitExactMultiple) {
  Poset p = corpus_poset("P1");
  Labeling nu1 = floor_labeling(p, 1);
  auto [head, rest] = split(p, nu1.scaled(3), 3);
  EXPECT_EQ(head, nu1);
  EXPECT_EQ(rest, nu1.scaled(2));
}

TEST(DivisorLattice, SplitLandsInBothClasses) {
  for (const char* name : {"P1", "P2", "upf2", "antichain3"}) {
    Poset p = corpus_poset(name);
    for (std::int64_t n : {-3, -2, 2, 3}) {
      const std::int64_t s = n > 0 ? 1 : -1;
      enumerate_T_box(p, n, [&](const Labeling& v) {
        auto [head, rest] = split(p, v, n);
        EXPECT_TRUE(in_T(p, s, head));
        EXPECT_TRUE(in_T(p, n - s, rest));
        EXPECT_EQ(head + rest, v);
      });
    }
  }
}

TEST(DivisorLattice, IteratedSplitGivesSumOfUnitClasses) {
  Poset p = corpus_poset("P1");
  for (std::int64_t n : {-4, -3, 3, 4}) {
    const std::int64_t s = n > 0 ? 1 : -1;
    enumerate_T_box(p, n, [&](const Labeling& v) {
      Labeling rest = v;
      Labeling sum = Labeling::zero(p.size());
      for (std::int64_t k = n; k != s; k -= s) {
        auto [head, r] = split(p, rest, k);
        EXPECT_TRUE(in_T(p, s, head));
        sum += head;
        rest = r;
      }
      EXPECT_TRUE(in_T(p, s, rest));
      EXPECT_EQ(sum + rest, v);
    });
  }
}

TEST(DivisorLattice, SplitRejectsSmallN) {
  Poset p = corpus_poset("P1");
  EXPECT_THROW(split(p, vertex_a(p), -1), PreconditionError);
}

TEST(DivisorLattice, TruncateKeepsMinimality) {
  Poset p = corpus_poset("P1");
  // One step down from either degree -3 vertex lands on the floor vertex C.
  EXPECT_EQ(truncate(p, vertex_b(p), -1, 1), vertex_c(p));
  EXPECT_EQ(truncate(p, vertex_a(p), -1, 1), vertex_c(p));
  EXPECT_THROW(truncate(p, vertex_a(p), -1, 0), PreconditionError);
  EXPECT_THROW(truncate(p, vertex_a(p) + Labeling::indicator(p.size(), {0}), -1, 1), PreconditionError);
  for (const auto& d : builtin_corpus()) {
    Poset q = to_poset(d);
    const oracle::Minimality literal(q);
    for (std::int64_t n : {-2, -1, 1, 2})
      for (const auto& v : generators(q, n)) {
        std::int64_t sat = 0;
        for (Element z = 0; z < q.size(); ++z) sat = std::max(sat, v[z] - qdist(q, n, z, q.top()));
        for (std::int64_t k = 1; k <= sat + 1; ++k) {
          Labeling t = truncate(q, v, n, k);
          EXPECT_TRUE(literal(n, t));
          if (k >= sat) {
            EXPECT_EQ(t, floor_labeling(q, n));
          }
        }
      }
  }
}

TEST(DivisorLattice, ExistWitness) {
  Poset p = corpus_poset("P1");
  auto check = [&](std::int64_t n, const char* x, const char* y) {
    const Element ex = p.index(x), ey = p.index(y);
    Labeling v = exist_witness(p, n, ex, ey);
    EXPECT_TRUE(in_T(p, n, v));
    EXPECT_EQ(v[ex] - v[ey], n);
  };
  check(-1, "z", "y");
  check(3, "x0", "w");
  for (const auto& d : builtin_corpus()) {
    Poset q = to_poset(d);
    for (const auto& [x, y] : q.cover_pairs())
      for (std::int64_t n = -3; n <= 3; ++n) {
        Labeling v = exist_witness(q, n, x, y);
        EXPECT_TRUE(in_T(q, n, v));
        EXPECT_EQ(v[x] - v[y], n);
      }
  }
  Poset c = corpus_poset("chain3");
  EXPECT_EQ(exist_witness(c, 1, c.bottom(), c.index("a1")), floor_labeling(c, 1));
  EXPECT_THROW(exist_witness(p, 1, p.bottom(), p.index("y")), PreconditionError);
}
