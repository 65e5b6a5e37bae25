// Generalized Reidemeister moves, virtualization and forbidden moves on Gauss
// diagrams. Virtual-only moves are identities on Gauss diagrams and never
// appear here.
//
// Gap g of a diagram with m slots is the insertion point in front of slot g,
// g in [0, m]. For closed diagrams gaps 0 and m are the same point on the
// circle; enumeration only reports g < m.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

enum class MoveKind : std::uint8_t { R1_add, R1_del, R2_add, R2_del, R3, Virtualize, Fo, Fu };

std::string to_string(MoveKind k);
bool is_reidemeister(MoveKind k);

struct R1AddSite {
  int gap = 0;
  int sign = 1;
  bool tail_first = true;
};

// Both inserted pairs are opposite-signed chords x (first at gap_a) and y.
// The pair at gap_a is placed in front of the pair at gap_b when the gaps
// coincide. `parallel` keeps the chord order the same in both pairs.
struct R2AddSite {
  int gap_a = 0;
  int gap_b = 0;
  bool tails_at_a = true;
  bool parallel = true;
  int sign_first = 1;
};

// p runs top->middle, q top->bottom, r middle->bottom (tails are over).
struct R3Site {
  int p = 0;
  int q = 0;
  int r = 0;
};

struct MoveEvent {
  MoveKind kind = MoveKind::R1_del;
  // R1_del / Virtualize: chords[0]; R2_del: chords[0..1]; R3: p, q, r.
  std::vector<int> chords;
  // Fo / Fu: the pair (slot, next slot).
  int slot = 0;
  R1AddSite r1;
  R2AddSite r2;

  static MoveEvent r1_del(int id);
  static MoveEvent r1_add(R1AddSite s);
  static MoveEvent r2_del(int a, int b);
  static MoveEvent r2_add(R2AddSite s);
  static MoveEvent r3(R3Site s);
  static MoveEvent virtualize(int id);
  static MoveEvent forbidden(MoveKind fo_or_fu, int slot);

  std::string describe() const;
  bool operator==(const MoveEvent&) const = default;
};

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using MoveKinds = std::set<MoveKind>;
MoveKinds reidemeister_kinds();
MoveKinds reducing_kinds();  // R1_del, R2_del, R3

// Every applicable site of the requested kinds in a fixed deterministic
// order. Insertions are deduplicated by the canonical form of their result.
std::vector<MoveEvent> enumerate_moves(const GaussDiagram& d, const MoveKinds& kinds);

// Throws MoveError naming the failed precondition.
GaussDiagram apply_move(const GaussDiagram& d, const MoveEvent& e);
GaussDiagram apply_trace(const GaussDiagram& d, const std::vector<MoveEvent>& trace);

// Event undoing `e` when applied to apply_move(before, e). Defined for R1,
// R2, R3, Fo and Fu; Virtualize has no inverse.
MoveEvent inverse_move(const GaussDiagram& before, const MoveEvent& e);

GaussDiagram virtualize(const GaussDiagram& d, int chord_id);
GaussDiagram virtualize_all(const GaussDiagram& d, const std::vector<int>& chord_ids);
GaussDiagram concat_long(const GaussDiagram& first, const GaussDiagram& second);
GaussDiagram cut(const GaussDiagram& d, int slot);

// Exchange of the endpoints at (slot, next slot). Validates that both are
// tails (Fo) or both heads (Fu) of distinct chords.
GaussDiagram swap_adjacent(const GaussDiagram& d, MoveKind fo_or_fu, int slot);

// Orientation data of a candidate R3 triangle: each order bit is true when
// the first-named endpoint precedes the second along its strand
// (t_p before t_q; h_p before t_r; h_q before h_r).
struct R3Shape {
  bool top = false;
  bool middle = false;
  bool bottom = false;
  int sp = 1, sq = 1, sr = 1;
  auto operator<=>(const R3Shape&) const = default;
};

// The 16 planar-realizable triangles; an R3 move reverses all three orders.
const std::set<R3Shape>& r3_catalogue();
bool r3_realizable(const R3Shape& s);

}  // namespace vknot
