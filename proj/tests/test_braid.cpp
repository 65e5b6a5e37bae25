#include <gtest/gtest.h>

#include "support.hpp"
#include "vknot/arrow.hpp"
#include "vknot/braid.hpp"
#include "vknot/forbidden.hpp"
#include "vknot/khovanov.hpp"
#include "vknot/moves.hpp"
#include "vknot/selftest.hpp"

using namespace vknot;

namespace {

BraidWord random_word(oracle::Gen& g, int len) {
  BraidWord w;
  for (int i = 0; i < len; ++i)
    w.letters.push_back({oracle::pick(g, 1, 3), static_cast<CrossingType>(oracle::pick(g, 0, 2))});
  return w;
}

// Single-component closures only.
std::optional<GaussDiagram> try_closure(const BraidWord& w) {
  try {
    return closure(w);
  } catch (const BraidError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST(Words, ParseAndPrint) {
  const BraidWord w = parse_braid("s1 S2 v3");
  ASSERT_EQ(w.size(), 3);
  EXPECT_EQ(w.letters[0], (BraidLetter{1, CrossingType::real_pos}));
  EXPECT_EQ(w.letters[1], (BraidLetter{2, CrossingType::real_neg}));
  EXPECT_EQ(w.letters[2], (BraidLetter{3, CrossingType::virt}));
  EXPECT_EQ(w.real_count(), 2);
  EXPECT_EQ(to_string(w), "s1 S2 v3");
  EXPECT_TRUE(parse_braid("").letters.empty());
  EXPECT_THROW(parse_braid("s4"), BraidError);
  EXPECT_THROW(parse_braid("x1"), BraidError);
  EXPECT_THROW(parse_braid("s"), BraidError);
}

TEST(Words, InverseProductCommutator) {
  EXPECT_TRUE(inverse(BraidWord{}).letters.empty());
  EXPECT_EQ(to_string(inverse(parse_braid("s1 S2 v3"))), "v3 s2 S1");
  oracle::Gen g(60);
  for (int t = 0; t < 100; ++t) {
    const BraidWord u = random_word(g, oracle::pick(g, 0, 8)), v = random_word(g, oracle::pick(g, 0, 8));
    EXPECT_EQ(inverse(inverse(u)), u);
    EXPECT_EQ(product(u, v).size(), u.size() + v.size());
    EXPECT_EQ(commutator(u, v).size(), 2 * (u.size() + v.size()));
    EXPECT_EQ(commutator(u, v), product(product(product(u, v), inverse(u)), inverse(v)));
    EXPECT_TRUE(free_reduce(product(u, inverse(u))).letters.empty());
    EXPECT_EQ(strand_permutation(product(u, inverse(u))), (std::vector<int>{0, 1, 2, 3}));
  }
}

TEST(Family, Recursion) {
  const GeneratorDef g = sample_generators();
  EXPECT_EQ(b_family(1, g), g.a);
  EXPECT_EQ(b_family(2, g), product(product(product(g.b, g.a), inverse(g.b)), inverse(g.a)));
  EXPECT_EQ(b_family(3, g).size(), 2 * (g.b.size() + b_family(2, g).size()));
  EXPECT_THROW(b_family(0, g), BraidError);
  const std::string expected = "BBAABBAAB";  // k = 2..10
  for (int k = 2; k <= 10; ++k) {
    EXPECT_EQ(b_family_generator(k), expected[k - 2]) << k;
    const BraidWord& gen = b_family_generator(k) == 'A' ? g.a : g.b;
    EXPECT_EQ(b_family(k, g), commutator(gen, b_family(k - 1, g)));
  }
}

TEST(Closure, Examples) {
  EXPECT_TRUE(closure(BraidWord{}).empty());
  // s1 alone permutes strands 1 and 2 and closes to two circles; the
  // virtual v1 restores a pure braid so the closure is one component.
  EXPECT_THROW(closure(parse_braid("s1")), BraidError);
  const GaussDiagram one = closure(parse_braid("s1 v1"));
  EXPECT_EQ(one.size(), 1);
  EXPECT_EQ(certify_trivial(one).status, Verdict::Status::certified);
  oracle::Gen g(61);
  int closed = 0;
  for (int t = 0; t < 200; ++t) {
    const BraidWord w = random_word(g, oracle::pick(g, 0, 8));
    if (auto d = try_closure(w)) {
      EXPECT_EQ(d->size(), w.real_count());
      ++closed;
    }
  }
  EXPECT_GT(closed, 20);
}

TEST(Closure, MultiComponentThrows) {
  // The return arcs shift positions by one; a word that shifts them back
  // leaves four separate circles.
  EXPECT_THROW(closure(parse_braid("v1 v2 v3")), BraidError);
  EXPECT_THROW(closure(parse_braid("v3 v2 v1")), BraidError);
}

TEST(Closure, VirtualTrefoilFromTwoLetters) {
  const GaussDiagram d = closure(parse_braid("s1 s1"));
  EXPECT_EQ(d.size(), 2);
  EXPECT_EQ(jones_hat(d), oracle::jones_hat(oracle::code("O1+ O2+ U1+ U2+")));
  EXPECT_TRUE(distinguish_from_unknot(d).nontrivial);
}

TEST(Closure, StandardClosureOfClassicalBraids) {
  const GaussDiagram rt = standard_closure(parse_braid("s1 s1 s1"), 2);
  EXPECT_EQ(jones_hat(rt), oracle::jones_hat(oracle::code("O1+ U2+ O3+ U1+ O2+ U3+")));
  for (int s = 0; s <= rt.slot_count(); ++s) EXPECT_EQ(v21(cut(rt, s)), 1);
  const GaussDiagram f8 = standard_closure(parse_braid("s1 S2 s1 S2"), 3);
  EXPECT_EQ(jones_hat(f8), LaurentPoly({{-5, 1}, {5, 1}}));
  for (int s = 0; s <= f8.slot_count(); ++s) {
    EXPECT_EQ(v21(cut(f8, s)), -1);
    EXPECT_EQ(v22(cut(f8, s)), -1);
  }
}

// The template closure identifies z y (c z^-1 c^-1) with y, where c = v1 v2 v3
// is the virtual rotation carried by the return arcs.
TEST(Closure, TwistedConjugationKeepsInvariants) {
  oracle::Gen g(62);
  const BraidWord c = parse_braid("v1 v2 v3");
  int checked = 0;
  for (int t = 0; t < 400 && checked < 40; ++t) {
    const BraidWord y = random_word(g, oracle::pick(g, 0, 5));
    const BraidWord z = random_word(g, oracle::pick(g, 1, 3));
    const auto base = try_closure(y);
    if (!base || base->size() > 8) continue;
    const auto conj = try_closure(product(product(z, y), product(product(c, inverse(z)), inverse(c))));
    ASSERT_TRUE(conj.has_value());
    if (conj->size() > 10) continue;
    EXPECT_EQ(jones_hat(*conj), jones_hat(*base)) << to_string(y) << " | " << to_string(z);
    EXPECT_EQ(homology(*conj), homology(*base));
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(Closure, FreeReductionKeepsInvariants) {
  oracle::Gen g(63);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 40; ++t) {
    const BraidWord w = random_word(g, oracle::pick(g, 2, 10));
    const auto a = try_closure(w);
    if (!a || a->size() > 8) continue;
    const auto b = try_closure(free_reduce(w));
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(jones_hat(*a), jones_hat(*b)) << to_string(w);
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(Scan, EmptyGeneratorsGiveUnknots) {
  const GeneratorDef empty{};
  for (const ScanRow& r : scan_family(1, 4, empty, 12)) {
    EXPECT_FALSE(r.skipped);
    EXPECT_EQ(r.chords, 0);
    EXPECT_FALSE(r.nontrivial);
  }
}

TEST(Scan, VirtualTrefoilAtKOne) {
  const auto rows = scan_family(1, 5, virtual_trefoil_generators(), 12);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_TRUE(rows[0].nontrivial);
  EXPECT_NE(std::abs(rows[0].witness_j), 1);
  for (size_t k = 1; k < rows.size(); ++k) {
    EXPECT_GE(rows[k].chords, rows[k - 1].chords);
    EXPECT_GE(rows[k].word_length, rows[k - 1].word_length);
  }
  EXPECT_TRUE(rows.back().skipped);
  EXPECT_FALSE(rows.back().skip_reason.empty());
}

TEST(Generators, LoadJson) {
  const GeneratorDef g = load_generators(R"({"A": "s1 v2", "B": "S3"})");
  EXPECT_EQ(to_string(g.a), "s1 v2");
  EXPECT_EQ(to_string(g.b), "S3");
  EXPECT_TRUE(free_reduce(product(g.a, inverse(g.a))).letters.empty());
  EXPECT_THROW(load_generators(R"({"A": "s1"})"), BraidError);
  EXPECT_THROW(load_generators(R"({"A": "s9", "B": ""})"), BraidError);
  EXPECT_THROW(load_generators("[1,2]"), BraidError);
}
