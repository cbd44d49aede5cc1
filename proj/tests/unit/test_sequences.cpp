#include <gtest/gtest.h>

#include "hibi/corpus.hpp"
#include "hibi/divisor_lattice.hpp"
#include "hibi/error.hpp"
#include "hibi/sequences.hpp"
#include "oracles.hpp"

using namespace hibi;

namespace {

std::vector<std::string> rendered(const Poset& p, const std::vector<CondNSeq>& ss) {
  std::vector<std::string> out;
  for (const auto& s : ss) out.push_back(format_seq(p, s));
  return out;
}

CondNSeq seq(const Poset& p, std::vector<std::string> names) { return seq_from_names(p, names); }

}  // namespace

TEST(Sequences, ConditionN) {
  Poset p1 = corpus_poset("P1");
  EXPECT_TRUE(satisfies_condN(p1, CondNSeq{}));
  EXPECT_TRUE(satisfies_condN(p1, seq(p1, {"y", "x"})));
  Poset p2 = corpus_poset("P2");
  EXPECT_FALSE(satisfies_condN(p2, seq(p2, {"y0", "x2"})));
  EXPECT_THROW(seq(p1, {"y", "x0"}), ValidationError);
  EXPECT_THROW(seq(p1, {"y", "nope"}), ValidationError);
  EXPECT_THROW(seq(p1, {"y"}), ValidationError);
}

TEST(Sequences, QValue) {
  Poset p = corpus_poset("P1");
  const Element x0 = p.bottom(), y = p.index("y"), x = p.index("x"), inf = p.top();
  EXPECT_EQ(q_value(p, -1, {x0, y, x, inf}), -2);
  EXPECT_EQ(q_value(p, 1, {x0, y, x, inf}), 4);
  EXPECT_EQ(q_value(p, 2, {x, y}), qdist(p, 2, x, y));
  EXPECT_THROW(q_value(p, 1, {y, x}), PreconditionError);
}

TEST(Sequences, Reducedness) {
  Poset p = corpus_poset("P1");
  EXPECT_TRUE(is_q_reduced(p, -1, seq(p, {"y", "x"})));
  EXPECT_FALSE(is_q_reduced(p, 1, seq(p, {"y", "x"})));
  for (std::int64_t m : {-3, -1, 1, 2}) EXPECT_TRUE(is_q_reduced(p, m, CondNSeq{}));
}

TEST(Sequences, EnumerateExamples) {
  Poset p1 = corpus_poset("P1");
  EXPECT_EQ(rendered(p1, enumerate_N(p1, -1)), (std::vector<std::string>{"()", "(y,x)"}));
  Poset p2 = corpus_poset("P2");
  EXPECT_EQ(rendered(p2, enumerate_N(p2, -1)),
            (std::vector<std::string>{"()", "(y0,x1)", "(y1,x2)", "(y0,x1,y1,x2)"}));
  Poset p3 = corpus_poset("P3");
  EXPECT_EQ(rendered(p3, enumerate_N(p3, -1)), (std::vector<std::string>{"()", "(y0,x1,y1,x2)"}));
}

TEST(Sequences, ReducednessIsScaleInvariant) {
  for (const auto& d : builtin_corpus()) {
    Poset p = to_poset(d);
    for (int eps : {-1, 1}) {
      auto ns = enumerate_N(p, eps);
      ASSERT_FALSE(ns.empty());
      EXPECT_TRUE(ns.front().empty());
      for (const auto& s : ns)
        for (std::int64_t m = 2; m <= 3; ++m) EXPECT_TRUE(is_q_reduced(p, m * eps, s));
    }
  }
}

TEST(Sequences, MuExamples) {
  Poset p = corpus_poset("P1");
  MuValues e = mu(p, -1, CondNSeq{});
  EXPECT_EQ(e.at_x[0], qdist(p, -1, p.bottom(), p.top()));
  EXPECT_EQ(e.at_y[0], 0);
  const CondNSeq yx = seq(p, {"y", "x"});
  MuValues m = mu(p, -1, yx);
  EXPECT_EQ(m.at_x[1], -2);
  EXPECT_EQ(m.at_x[0], -2);
  EXPECT_EQ(m.at_y[0], 0);
  EXPECT_EQ(m.at_y[1], 0);
  for (std::size_t i = 0; i <= yx.t(); ++i)
    EXPECT_EQ(m.at_x[i] - m.at_y[i], qdist(p, -1, seq_x(p, yx, i), seq_y(p, yx, i)));
  EXPECT_THROW(mu(p, 1, yx), PreconditionError);
  EXPECT_EQ(degree(p, nu_down(p, -1, yx)), -2);
}

TEST(Sequences, ShiftedExamples) {
  Poset p = corpus_poset("P1");
  const CondNSeq yx = seq(p, {"y", "x"});
  ShiftedFamily f0 = shifted_family(p, -1, yx, 0);
  EXPECT_EQ(f0.down, nu_down(p, -1, yx));
  EXPECT_EQ(f0.up, nu_up(p, -1, yx));
  ShiftedFamily f1 = shifted_family(p, -1, yx, 1);
  EXPECT_EQ(f1.mu.at_x[0], -3);
  EXPECT_THROW(shifted_family(p, -1, yx, 2), PreconditionError);
}

TEST(Sequences, NuUpDownProperties) {
  for (const auto& d : builtin_corpus()) {
    Poset p = to_poset(d);
    for (int eps : {-1, 1})
      for (const auto& s : enumerate_N(p, eps)) {
        const Labeling dn = nu_down(p, eps, s);
        const Labeling up = nu_up(p, eps, s);
        EXPECT_TRUE(oracle::is_minimal(p, eps, dn)) << d.name << format_seq(p, s);
        EXPECT_TRUE(oracle::is_minimal(p, eps, up)) << d.name << format_seq(p, s);
        for (std::size_t sh = 0; sh <= s.t(); ++sh) {
          ShiftedFamily f = shifted_family(p, eps, s, sh);
          EXPECT_TRUE(in_T(p, eps, f.down));
          EXPECT_TRUE(in_T(p, eps, f.up));
          for (Element z = 0; z < p.size(); ++z) EXPECT_LE(f.down[z], f.up[z]);
          for (std::size_t i = 0; i <= s.t(); ++i) {
            const Element x = seq_x(p, s, i), y = seq_y(p, s, i);
            EXPECT_EQ(f.down[x], f.mu.at_x[i]);
            EXPECT_EQ(f.up[x], f.mu.at_x[i]);
            EXPECT_EQ(f.down[y], f.mu.at_y[i]);
            EXPECT_EQ(f.up[y], f.mu.at_y[i]);
          }
        }
      }
  }
}

TEST(Sequences, WitnessSequence) {
  Poset c = corpus_poset("chain3");
  auto g = generators(c, 1);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(witness_sequence(c, 1, g[0]).empty());
  Poset p = corpus_poset("P1");
  Labeling a = labeling_from(p, {{"x0", -2}, {"w", -1}, {"x", -2}, {"z", -1}, {"y", 0}, {"v", -1}});
  EXPECT_EQ(format_seq(p, witness_sequence(p, -1, a)), "(y,x)");
  Labeling fat = a + Labeling::indicator(p.size(), poset_ideals(p).back());
  EXPECT_THROW(witness_sequence(p, -1, fat), PreconditionError);
}

TEST(Sequences, WitnessExistenceMatchesMinimality) {
  for (const auto& d : builtin_corpus()) {
    Poset p = to_poset(d);
    const oracle::Minimality literal(p);
    for (std::int64_t n : {-2, -1, 1, 2})
      enumerate_T_box(p, n, [&](const Labeling& v) {
        EXPECT_EQ(find_witness_sequence(p, n, v).has_value(), literal(n, v)) << d.name << " n=" << n;
      });
  }
}

TEST(Sequences, Bounds) {
  Poset c = corpus_poset("chain4");
  EXPECT_EQ(q0(c, -1), -5);
  EXPECT_EQ(q_max(c, -1), -5);
  Poset p = corpus_poset("P1");
  EXPECT_EQ(q0(p, -1), -3);
  EXPECT_EQ(q_max(p, -1), -2);
  for (const auto& d : builtin_corpus()) {
    Poset q = to_poset(d);
    EXPECT_EQ(q0(q, 1), q.longest_chain(q.bottom(), q.top()));
  }
}
