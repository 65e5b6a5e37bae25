#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "vknot/moves.hpp"
#include "vknot/simplify.hpp"

using namespace vknot;
using oracle::code;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kVirtualTrefoil = "O1+ O2+ U1+ U2+";

bool slots_partitioned(const GaussDiagram& d) {
  std::vector<int> used(d.slot_count(), 0);
  std::set<int> ids;
  for (const Chord& c : d.chords()) {
    if (c.tail == c.head || !ids.insert(c.id).second) return false;
    for (int s : {c.tail, c.head}) {
      if (s < 0 || s >= d.slot_count()) return false;
      ++used[s];
    }
  }
  return std::all_of(used.begin(), used.end(), [](int u) { return u == 1; });
}

}  // namespace

TEST(Parse, EmptyCode) {
  const GaussDiagram d = code("");
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d.slot_count(), 0);
}

TEST(Parse, TrefoilSlots) {
  const GaussDiagram d = code(kTrefoil);
  ASSERT_EQ(d.size(), 3);
  const Chord& c1 = d.chord(d.require_index(1));
  EXPECT_EQ(c1.tail, 0);
  EXPECT_EQ(c1.head, 3);
  EXPECT_EQ(c1.sign, 1);
  EXPECT_EQ(d.writhe(), 3);
}

TEST(Parse, CommasAndWhitespaceSeparate) {
  EXPECT_EQ(code("O1+,U2-, O2- U1+"), code("O1+ U2- O2- U1+"));
}

TEST(Parse, ErrorsAreDistinctAndNameTheToken) {
  auto code_of = [](const char* text) {
    try {
      parse_gauss_code(text, Kind::closed);
    } catch (const ParseError& e) {
      return std::make_pair(e.code(), e.token());
    }
    ADD_FAILURE() << "no error for " << text;
    return std::make_pair(ParseErrorCode::bad_token, std::string());
  };
  EXPECT_EQ(code_of("O1+ U1-").first, ParseErrorCode::sign_mismatch);
  EXPECT_EQ(code_of("O1+ U1-").second, "U1-");
  EXPECT_EQ(code_of("O1+ O1+").first, ParseErrorCode::duplicate_role);
  EXPECT_EQ(code_of("O1+ U2+ O2+").first, ParseErrorCode::unpaired_label);
  EXPECT_EQ(code_of("X1+ U1+").first, ParseErrorCode::bad_token);
  EXPECT_EQ(code_of("X1+ U1+").second, "X1+");
  EXPECT_EQ(code_of("O1 U1").first, ParseErrorCode::bad_token);
}

TEST(Parse, DiagramFile) {
  const auto entries = parse_diagram_file(
      "# corpus\n"
      "O1+ U1+\n"
      "\n"
      "long: O1+ U2+ O3+ U1+ O2+ U3+  # trefoil\n"
      "closed: O1- U1-\n"
      "long:\n");
  ASSERT_EQ(entries.size(), 4u);
  EXPECT_EQ(entries[0].line, 2);
  EXPECT_EQ(entries[1].diagram.kind(), Kind::long_knot);
  EXPECT_EQ(entries[1].diagram.size(), 3);
  EXPECT_EQ(entries[2].diagram.kind(), Kind::closed);
  EXPECT_TRUE(entries[3].diagram.empty());
  EXPECT_TRUE(entries[3].diagram.is_long());
}

TEST(Parse, FileErrorCarriesLine) {
  try {
    parse_diagram_file("O1+ U1+\nO2+ U2-\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Serialize, RoundTripUpToRelabeling) {
  oracle::Gen g(1);
  for (int t = 0; t < 200; ++t) {
    const Kind kind = t % 2 ? Kind::closed : Kind::long_knot;
    const GaussDiagram d = oracle::any_diagram(g, oracle::pick(g, 0, 7), kind);
    const GaussDiagram back = parse_gauss_code(d.code(), kind);
    EXPECT_EQ(back, d);
    EXPECT_TRUE(equivalent_up_to_relabeling(parse_gauss_code(d.canonical_code(), kind), d));
    EXPECT_EQ(d.relabeled().canonical_code(), d.canonical_code());
  }
}

TEST(Serialize, ClosedCodesCompareUpToRotation) {
  EXPECT_TRUE(equivalent_up_to_relabeling(code("U2+ O3+ U1+ O2+ U3+ O1+"), code(kTrefoil)));
  EXPECT_FALSE(equivalent_up_to_relabeling(parse_gauss_code("U2+ O3+ U1+ O2+ U3+ O1+", Kind::long_knot),
                                           parse_gauss_code(kTrefoil, Kind::long_knot)));
  EXPECT_FALSE(equivalent_up_to_relabeling(code(kTrefoil), code("O1- U2- O3- U1- O2- U3-")));
}

TEST(Virtualize, DeletesTheChord) {
  EXPECT_EQ(virtualize(code(kTrefoil), 1).code(), "U2+ O3+ O2+ U3+");
  const GaussDiagram one = virtualize(code(kVirtualTrefoil), 2);
  EXPECT_EQ(one.size(), 1);
  EXPECT_EQ(simplify(one, 10).diagram.size(), 0);
  EXPECT_THROW(virtualize(code(kTrefoil), 9), DiagramError);
}

TEST(Virtualize, AllChordsGiveTheEmptyDiagram) {
  oracle::Gen g(2);
  for (int t = 0; t < 50; ++t) {
    GaussDiagram d = oracle::any_diagram(g, oracle::pick(g, 1, 6), Kind::closed);
    std::vector<int> ids;
    for (const Chord& c : d.chords()) ids.push_back(c.id);
    const int before = d.size();
    EXPECT_EQ(virtualize(d, ids[0]).size(), before - 1);
    EXPECT_TRUE(virtualize_all(d, ids).empty());
  }
}

TEST(Concat, EmptyIsIdentityAndCountsAdd) {
  const GaussDiagram lt = parse_gauss_code(kTrefoil, Kind::long_knot);
  EXPECT_TRUE(equivalent_up_to_relabeling(concat_long(GaussDiagram(Kind::long_knot), lt), lt));
  EXPECT_TRUE(equivalent_up_to_relabeling(concat_long(lt, GaussDiagram(Kind::long_knot)), lt));
  const GaussDiagram two = concat_long(lt, lt);
  EXPECT_EQ(two.size(), 6);
  EXPECT_TRUE(slots_partitioned(two));
  EXPECT_THROW(concat_long(code(kTrefoil), lt), DiagramError);
}

TEST(Cut, Basics) {
  EXPECT_TRUE(cut(GaussDiagram(Kind::closed), 0).is_long());
  EXPECT_EQ(cut(code(kTrefoil), 0), parse_gauss_code(kTrefoil, Kind::long_knot));
  oracle::Gen g(3);
  for (int t = 0; t < 50; ++t) {
    const GaussDiagram d = oracle::any_diagram(g, oracle::pick(g, 0, 6), Kind::closed);
    for (int s = 0; s <= d.slot_count(); ++s)
      EXPECT_TRUE(equivalent_up_to_relabeling(cut(d, s).with_kind(Kind::closed), d));
  }
  EXPECT_THROW(cut(code(kTrefoil), 7), DiagramError);
  EXPECT_THROW(cut(code(kTrefoil), -1), DiagramError);
}

TEST(Simplify, Examples) {
  const auto r1 = simplify(code("O1+ U1+"), 10);
  EXPECT_TRUE(r1.diagram.empty());
  ASSERT_EQ(r1.trace.size(), 1u);
  EXPECT_EQ(r1.trace[0].kind, MoveKind::R1_del);

  EXPECT_TRUE(simplify(code("O1+ O2- U1+ U2-"), 10).diagram.empty());

  const auto vt = simplify(code(kVirtualTrefoil), 500);
  EXPECT_EQ(vt.diagram.size(), 2);
}

TEST(Simplify, TraceReplaysAndNeverGrows) {
  oracle::Gen g(4);
  for (int t = 0; t < 100; ++t) {
    const GaussDiagram d = oracle::any_diagram(g, oracle::pick(g, 0, 6), t % 2 ? Kind::closed : Kind::long_knot);
    const auto r = simplify(d, 200);
    EXPECT_LE(r.diagram.size(), d.size());
    EXPECT_EQ(apply_trace(d, r.trace), r.diagram);
  }
}

TEST(Simplify, UndoesRandomAdditions) {
  oracle::Gen g(5);
  for (int t = 0; t < 50; ++t) {
    GaussDiagram d(t % 2 ? Kind::closed : Kind::long_knot);
    for (int k = 0; k < 3; ++k) {
      auto adds = enumerate_moves(d, {MoveKind::R1_add, MoveKind::R2_add});
      d = apply_move(d, adds[oracle::pick(g, 0, static_cast<int>(adds.size()) - 1)]);
    }
    EXPECT_TRUE(simplify(d, 2000).diagram.empty()) << d.code();
  }
}
