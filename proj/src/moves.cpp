#include "vknot/moves.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_set>
#include <variant>

namespace vknot {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1_add: return "R1_add";
    case MoveKind::R1_del: return "R1_del";
    case MoveKind::R2_add: return "R2_add";
    case MoveKind::R2_del: return "R2_del";
    case MoveKind::R3: return "R3";
    case MoveKind::Virtualize: return "Virtualize";
    case MoveKind::Fo: return "Fo";
    case MoveKind::Fu: return "Fu";
  }
  return "?";
}

bool is_reidemeister(MoveKind k) {
  return k == MoveKind::R1_add || k == MoveKind::R1_del || k == MoveKind::R2_add ||
         k == MoveKind::R2_del || k == MoveKind::R3;
}

MoveKinds reidemeister_kinds() {
  return {MoveKind::R1_add, MoveKind::R1_del, MoveKind::R2_add, MoveKind::R2_del, MoveKind::R3};
}

MoveKinds reducing_kinds() { return {MoveKind::R1_del, MoveKind::R2_del, MoveKind::R3}; }

MoveEvent MoveEvent::r1_del(int id) {
  MoveEvent e;
  e.kind = MoveKind::R1_del;
  e.chords = {id};
  return e;
}

MoveEvent MoveEvent::r1_add(R1AddSite s) {
  MoveEvent e;
  e.kind = MoveKind::R1_add;
  e.r1 = s;
  return e;
}

MoveEvent MoveEvent::r2_del(int a, int b) {
  MoveEvent e;
  e.kind = MoveKind::R2_del;
  e.chords = {a, b};
  return e;
}

MoveEvent MoveEvent::r2_add(R2AddSite s) {
  MoveEvent e;
  e.kind = MoveKind::R2_add;
  e.r2 = s;
  return e;
}

MoveEvent MoveEvent::r3(R3Site s) {
  MoveEvent e;
  e.kind = MoveKind::R3;
  e.chords = {s.p, s.q, s.r};
  return e;
}

MoveEvent MoveEvent::virtualize(int id) {
  MoveEvent e;
  e.kind = MoveKind::Virtualize;
  e.chords = {id};
  return e;
}

MoveEvent MoveEvent::forbidden(MoveKind fo_or_fu, int slot) {
  MoveEvent e;
  e.kind = fo_or_fu;
  e.slot = slot;
  return e;
}

std::string MoveEvent::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case MoveKind::R1_add:
      os << "(gap=" << r1.gap << ",sign=" << (r1.sign > 0 ? '+' : '-')
         << (r1.tail_first ? ",OU" : ",UO") << ')';
      break;
    case MoveKind::R2_add:
      os << "(gaps=" << r2.gap_a << ',' << r2.gap_b << (r2.tails_at_a ? ",OO/UU" : ",UU/OO")
         << (r2.parallel ? ",parallel" : ",nested") << ",sign=" << (r2.sign_first > 0 ? '+' : '-') << ')';
      break;
    case MoveKind::Fo:
    case MoveKind::Fu:
      os << "(slot=" << slot << ')';
      break;
    default:
      os << '(';
      for (size_t i = 0; i < chords.size(); ++i) os << (i ? "," : "") << chords[i];
      os << ')';
  }
  return os.str();
}

// --- R3 catalogue ----------------------------------------------------------

namespace {

std::set<R3Shape> build_r3_catalogue() {
  // Three oriented lines T, M, B (heights in that order) bounding a triangle.
  // Walk the triangle boundary counterclockwise; c[L] = +1 when line L is
  // oriented along that walk. At a vertex entered along a and left along b
  // the crossing frame has orientation c[a]*c[b].
  enum { T = 0, M = 1, B = 2 };
  const std::array<std::array<int, 3>, 2> cyclic = {{{T, M, B}, {T, B, M}}};
  std::set<R3Shape> out;
  for (const auto& order : cyclic) {
    for (int bits = 0; bits < 8; ++bits) {
      std::array<int, 3> c{};
      for (int l = 0; l < 3; ++l) c[l] = (bits >> l) & 1 ? 1 : -1;
      // sign[x][y] for the crossing of lines x and y; first[L][x]: along L,
      // the crossing with line x comes before the other one.
      std::array<std::array<int, 3>, 3> sign{};
      std::array<int, 3> first_partner{};
      for (int k = 0; k < 3; ++k) {
        const int a = order[k], b = order[(k + 1) % 3];
        const int over_is_a = a < b;  // lower index is higher
        const int s = over_is_a ? c[a] * c[b] : -c[a] * c[b];
        sign[a][b] = sign[b][a] = s;
      }
      for (int k = 0; k < 3; ++k) {
        const int l = order[k];
        const int prev = order[(k + 2) % 3], next = order[(k + 1) % 3];
        first_partner[l] = c[l] > 0 ? prev : next;
      }
      R3Shape s;
      s.top = first_partner[T] == M;     // t_p (with M) before t_q (with B)
      s.middle = first_partner[M] == T;  // h_p (with T) before t_r (with B)
      s.bottom = first_partner[B] == T;  // h_q (with T) before h_r (with M)
      s.sp = sign[T][M];
      s.sq = sign[T][B];
      s.sr = sign[M][B];
      out.insert(s);
    }
  }
  return out;
}

}  // namespace

const std::set<R3Shape>& r3_catalogue() {
  static const std::set<R3Shape> catalogue = build_r3_catalogue();
  return catalogue;
}

bool r3_realizable(const R3Shape& s) { return r3_catalogue().contains(s); }

// --- word helpers ------------------------------------------------------------

namespace {

using Word = std::vector<Letter>;

Word word_of(const GaussDiagram& d) { return Word(d.word().begin(), d.word().end()); }

Word erase_chords(const GaussDiagram& d, std::initializer_list<int> ids) {
  Word w;
  for (const Letter& l : d.word())
    if (std::find(ids.begin(), ids.end(), l.id) == ids.end()) w.push_back(l);
  return w;
}

void check_gap(const GaussDiagram& d, int gap) {
  if (gap < 0 || gap > d.slot_count())
    throw MoveError("gap " + std::to_string(gap) + " outside [0, " + std::to_string(d.slot_count()) + "]");
}

bool adjacent(const GaussDiagram& d, int a, int b) { return d.follows(a, b) || d.follows(b, a); }

struct R3Check {
  int p, q, r;  // chord indices
  R3Shape shape;
};

// Returns the chord indices and shape, or an explanation of the failure.
std::variant<R3Check, std::string> check_r3(const GaussDiagram& d, int pid, int qid, int rid) {
  auto p = d.index_of(pid), q = d.index_of(qid), r = d.index_of(rid);
  if (!p || !q || !r) return std::string("R3 names an unknown chord");
  if (*p == *q || *q == *r || *p == *r) return std::string("R3 needs three distinct chords");
  const Chord &cp = d.chord(*p), &cq = d.chord(*q), &cr = d.chord(*r);
  if (!adjacent(d, cp.tail, cq.tail)) return std::string("R3: tails of p and q are not adjacent");
  if (!adjacent(d, cp.head, cr.tail)) return std::string("R3: head of p and tail of r are not adjacent");
  if (!adjacent(d, cq.head, cr.head)) return std::string("R3: heads of q and r are not adjacent");
  R3Shape s;
  s.top = d.follows(cp.tail, cq.tail);
  s.middle = d.follows(cp.head, cr.tail);
  s.bottom = d.follows(cq.head, cr.head);
  s.sp = cp.sign;
  s.sq = cq.sign;
  s.sr = cr.sign;
  if (!r3_realizable(s)) return std::string("R3: signs and orders do not form a planar triangle");
  return R3Check{*p, *q, *r, s};
}

std::string check_r2_del(const GaussDiagram& d, int aid, int bid) {
  auto a = d.index_of(aid), b = d.index_of(bid);
  if (!a || !b) return "R2_del names an unknown chord";
  if (*a == *b) return "R2_del needs two distinct chords";
  const Chord &ca = d.chord(*a), &cb = d.chord(*b);
  if (ca.sign == cb.sign) return "R2_del needs opposite signs";
  if (!adjacent(d, ca.tail, cb.tail)) return "R2_del: tails are not adjacent";
  if (!adjacent(d, ca.head, cb.head)) return "R2_del: heads are not adjacent";
  return {};
}

Word insert_r2(const GaussDiagram& d, const R2AddSite& s) {
  check_gap(d, s.gap_a);
  check_gap(d, s.gap_b);
  if (s.gap_a > s.gap_b) throw MoveError("R2_add needs gap_a <= gap_b");
  if (s.sign_first != 1 && s.sign_first != -1) throw MoveError("R2_add sign must be +1 or -1");
  const int x = d.max_id() + 1, y = d.max_id() + 2;
  const Role ra = s.tails_at_a ? Role::tail : Role::head;
  const Role rb = opposite(ra);
  const int sx = s.sign_first, sy = -s.sign_first;
  const std::array<Letter, 2> pa = {Letter{x, ra, sx}, Letter{y, ra, sy}};
  const std::array<Letter, 2> pb = s.parallel ? std::array<Letter, 2>{Letter{x, rb, sx}, Letter{y, rb, sy}}
                                              : std::array<Letter, 2>{Letter{y, rb, sy}, Letter{x, rb, sx}};
  Word w;
  const Word old = word_of(d);
  for (int g = 0; g <= static_cast<int>(old.size()); ++g) {
    if (g == s.gap_a) w.insert(w.end(), pa.begin(), pa.end());
    if (g == s.gap_b) w.insert(w.end(), pb.begin(), pb.end());
    if (g < static_cast<int>(old.size())) w.push_back(old[g]);
  }
  return w;
}

void swap_slots(Word& w, const GaussDiagram& d, int slot) {
  std::swap(w[slot], w[d.next_slot(slot)]);
}

// Slot s such that the pair {a, b} is (s, next(s)).
int pair_start(const GaussDiagram& d, int a, int b) { return d.follows(a, b) ? a : b; }

}  // namespace

GaussDiagram swap_adjacent(const GaussDiagram& d, MoveKind fo_or_fu, int slot) {
  if (fo_or_fu != MoveKind::Fo && fo_or_fu != MoveKind::Fu) throw MoveError("swap_adjacent needs Fo or Fu");
  if (slot < 0 || slot >= d.slot_count()) throw MoveError("slot " + std::to_string(slot) + " out of range");
  const int nxt = d.next_slot(slot);
  if (nxt < 0) throw MoveError("slot " + std::to_string(slot) + " has no successor on a long diagram");
  const Endpoint &a = d.at(slot), &b = d.at(nxt);
  const Role want = fo_or_fu == MoveKind::Fo ? Role::tail : Role::head;
  if (a.chord == b.chord) throw MoveError("slots " + std::to_string(slot) + "," + std::to_string(nxt) + " belong to one chord");
  if (a.role != want || b.role != want)
    throw MoveError(to_string(fo_or_fu) + " needs two " + (want == Role::tail ? "tails" : "heads") + " at slots " +
                    std::to_string(slot) + "," + std::to_string(nxt));
  Word w = word_of(d);
  swap_slots(w, d, slot);
  return GaussDiagram::from_word(d.kind(), std::move(w));
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveEvent& e) {
  auto need_chords = [&](size_t n) {
    if (e.chords.size() != n) throw MoveError(to_string(e.kind) + " expects " + std::to_string(n) + " chord ids");
  };
  switch (e.kind) {
    case MoveKind::R1_del: {
      need_chords(1);
      const Chord& c = d.chord(d.require_index(e.chords[0]));
      if (!adjacent(d, c.tail, c.head))
        throw MoveError("R1_del: endpoints of chord " + std::to_string(c.id) + " are not adjacent");
      return GaussDiagram::from_word(d.kind(), erase_chords(d, {c.id}));
    }
    case MoveKind::R1_add: {
      check_gap(d, e.r1.gap);
      if (e.r1.sign != 1 && e.r1.sign != -1) throw MoveError("R1_add sign must be +1 or -1");
      Word w = word_of(d);
      const int id = d.max_id() + 1;
      const Letter t{id, Role::tail, e.r1.sign}, h{id, Role::head, e.r1.sign};
      auto pos = w.begin() + e.r1.gap;
      pos = w.insert(pos, e.r1.tail_first ? h : t);
      w.insert(pos, e.r1.tail_first ? t : h);
      return GaussDiagram::from_word(d.kind(), std::move(w));
    }
    case MoveKind::R2_del: {
      need_chords(2);
      if (auto why = check_r2_del(d, e.chords[0], e.chords[1]); !why.empty()) throw MoveError(why);
      return GaussDiagram::from_word(d.kind(), erase_chords(d, {e.chords[0], e.chords[1]}));
    }
    case MoveKind::R2_add:
      return GaussDiagram::from_word(d.kind(), insert_r2(d, e.r2));
    case MoveKind::R3: {
      need_chords(3);
      auto res = check_r3(d, e.chords[0], e.chords[1], e.chords[2]);
      if (auto* why = std::get_if<std::string>(&res)) throw MoveError(*why);
      const R3Check& ok = std::get<R3Check>(res);
      const Chord &p = d.chord(ok.p), &q = d.chord(ok.q), &r = d.chord(ok.r);
      Word w = word_of(d);
      swap_slots(w, d, pair_start(d, p.tail, q.tail));
      swap_slots(w, d, pair_start(d, p.head, r.tail));
      swap_slots(w, d, pair_start(d, q.head, r.head));
      return GaussDiagram::from_word(d.kind(), std::move(w));
    }
    case MoveKind::Virtualize:
      need_chords(1);
      return virtualize(d, e.chords[0]);
    case MoveKind::Fo:
    case MoveKind::Fu:
      return swap_adjacent(d, e.kind, e.slot);
  }
  throw MoveError("unknown move kind");
}

GaussDiagram apply_trace(const GaussDiagram& d, const std::vector<MoveEvent>& trace) {
  GaussDiagram cur = d;
  for (const MoveEvent& e : trace) cur = apply_move(cur, e);
  return cur;
}

MoveEvent inverse_move(const GaussDiagram& before, const MoveEvent& e) {
  switch (e.kind) {
    case MoveKind::R1_add:
      return MoveEvent::r1_del(before.max_id() + 1);
    case MoveKind::R2_add:
      return MoveEvent::r2_del(before.max_id() + 1, before.max_id() + 2);
    case MoveKind::R3:
    case MoveKind::Fo:
    case MoveKind::Fu:
      return e;
    case MoveKind::R1_del:
    case MoveKind::R2_del: {
      // The deleted chords may straddle the end of a closed word, so the
      // re-insertion site is found by matching against `before`.
      const GaussDiagram after = apply_move(before, e);
      const MoveKind add = e.kind == MoveKind::R1_del ? MoveKind::R1_add : MoveKind::R2_add;
      for (const MoveEvent& cand : enumerate_moves(after, {add}))
        if (equivalent_up_to_relabeling(apply_move(after, cand), before)) return cand;
      throw MoveError("no insertion restores the deleted chords");
    }
    case MoveKind::Virtualize:
      break;
  }
  throw MoveError("virtualization has no inverse move");
}

// --- enumeration ---------------------------------------------------------

std::vector<MoveEvent> enumerate_moves(const GaussDiagram& d, const MoveKinds& kinds) {
  std::vector<MoveEvent> out;
  const int n = d.size();
  const int m = d.slot_count();
  const int gap_count = d.is_long() ? m + 1 : std::max(m, 1);

  if (kinds.contains(MoveKind::R1_del)) {
    for (const Chord& c : d.chords())
      if (adjacent(d, c.tail, c.head)) out.push_back(MoveEvent::r1_del(c.id));
  }
  if (kinds.contains(MoveKind::R1_add)) {
    std::unordered_set<std::string> seen;
    for (int g = 0; g < gap_count; ++g)
      for (int sign : {1, -1})
        for (bool tf : {true, false}) {
          MoveEvent e = MoveEvent::r1_add({g, sign, tf});
          if (seen.insert(apply_move(d, e).canonical_code()).second) out.push_back(e);
        }
  }
  if (kinds.contains(MoveKind::R2_del)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (check_r2_del(d, d.chord(i).id, d.chord(j).id).empty())
          out.push_back(MoveEvent::r2_del(d.chord(i).id, d.chord(j).id));
  }
  if (kinds.contains(MoveKind::R2_add)) {
    std::unordered_set<std::string> seen;
    for (int a = 0; a < gap_count; ++a)
      for (int b = a; b < gap_count; ++b)
        for (bool tails_at_a : {true, false})
          for (bool parallel : {true, false})
            for (int sign : {1, -1}) {
              MoveEvent e = MoveEvent::r2_add({a, b, tails_at_a, parallel, sign});
              if (seen.insert(apply_move(d, e).canonical_code()).second) out.push_back(e);
            }
  }
  if (kinds.contains(MoveKind::R3)) {
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (p == q || !adjacent(d, d.chord(p).tail, d.chord(q).tail)) continue;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          auto res = check_r3(d, d.chord(p).id, d.chord(q).id, d.chord(r).id);
          if (std::holds_alternative<R3Check>(res))
            out.push_back(MoveEvent::r3({d.chord(p).id, d.chord(q).id, d.chord(r).id}));
        }
      }
  }
  if (kinds.contains(MoveKind::Virtualize)) {
    for (const Chord& c : d.chords()) out.push_back(MoveEvent::virtualize(c.id));
  }
  for (MoveKind f : {MoveKind::Fo, MoveKind::Fu}) {
    if (!kinds.contains(f)) continue;
    const Role want = f == MoveKind::Fo ? Role::tail : Role::head;
    for (int s = 0; s < m; ++s) {
      const int t = d.next_slot(s);
      if (t < 0 || (t == 0 && m == 2)) continue;
      const Endpoint &a = d.at(s), &b = d.at(t);
      if (a.chord != b.chord && a.role == want && b.role == want) out.push_back(MoveEvent::forbidden(f, s));
    }
  }
  return out;
}

// --- virtualization and basepoints -------------------------------------------

GaussDiagram virtualize(const GaussDiagram& d, int chord_id) {
  d.require_index(chord_id);
  return GaussDiagram::from_word(d.kind(), erase_chords(d, {chord_id}));
}

GaussDiagram virtualize_all(const GaussDiagram& d, const std::vector<int>& chord_ids) {
  for (int id : chord_ids) d.require_index(id);
  Word w;
  for (const Letter& l : d.word())
    if (std::find(chord_ids.begin(), chord_ids.end(), l.id) == chord_ids.end()) w.push_back(l);
  return GaussDiagram::from_word(d.kind(), std::move(w));
}

GaussDiagram concat_long(const GaussDiagram& first, const GaussDiagram& second) {
  if (!first.is_long() || !second.is_long()) throw DiagramError("concat_long needs two long diagrams");
  Word w = word_of(first);
  const int shift = first.max_id();
  for (Letter l : second.word()) {
    l.id += shift;
    w.push_back(l);
  }
  return GaussDiagram::from_word(Kind::long_knot, std::move(w));
}

GaussDiagram cut(const GaussDiagram& d, int slot) {
  const int m = d.slot_count();
  if (slot < 0 || slot > m)
    throw DiagramError("cut position " + std::to_string(slot) + " outside [0, " + std::to_string(m) + "]");
  Word w;
  for (int k = 0; k < m; ++k) w.push_back(d.word()[(slot + k) % m]);
  return GaussDiagram::from_word(Kind::long_knot, std::move(w));
}

}  // namespace vknot
