#include "vknot/sampling.hpp"

#include <algorithm>
#include <map>

namespace vknot {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

int random_sign(Rng& rng) { return uniform_int(rng, 0, 1) ? 1 : -1; }

std::vector<Letter> random_word(Rng& rng, int chords) {
  std::vector<Letter> w;
  for (int c = 1; c <= chords; ++c) {
    const int s = random_sign(rng);
    w.push_back({c, Role::tail, s});
    w.push_back({c, Role::head, s});
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace

GaussDiagram random_diagram(Rng& rng, int chords, Kind kind) {
  return GaussDiagram::from_word(kind, random_word(rng, chords));
}

GaussDiagram random_diagram_with_r3(Rng& rng, int base_chords, Kind kind) {
  std::vector<Letter> w = random_word(rng, base_chords);
  const auto& cat = r3_catalogue();
  auto it = cat.begin();
  std::advance(it, uniform_int(rng, 0, static_cast<int>(cat.size()) - 1));
  const R3Shape s = *it;
  const int p = base_chords + 1, q = base_chords + 2, r = base_chords + 3;
  auto ordered = [](bool keep, Letter a, Letter b) { return keep ? std::vector<Letter>{a, b} : std::vector<Letter>{b, a}; };
  std::vector<std::vector<Letter>> pairs{
      ordered(s.top, {p, Role::tail, s.sp}, {q, Role::tail, s.sq}),
      ordered(s.middle, {p, Role::head, s.sp}, {r, Role::tail, s.sr}),
      ordered(s.bottom, {q, Role::head, s.sq}, {r, Role::head, s.sr}),
  };
  // Insert the pairs as blocks so that a later pair never splits an earlier one.
  std::vector<std::vector<Letter>> blocks;
  for (const Letter& l : w) blocks.push_back({l});
  for (const auto& pr : pairs) {
    const int gap = uniform_int(rng, 0, static_cast<int>(blocks.size()));
    blocks.insert(blocks.begin() + gap, pr);
  }
  std::vector<Letter> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return GaussDiagram::from_word(kind, std::move(out));
}

bool random_reidemeister_move(Rng& rng, const GaussDiagram& d, MoveEvent& out) {
  std::map<MoveKind, std::vector<MoveEvent>> by_kind;
  for (MoveEvent& e : enumerate_moves(d, reidemeister_kinds())) by_kind[e.kind].push_back(std::move(e));
  if (by_kind.empty()) return false;
  auto it = by_kind.begin();
  std::advance(it, uniform_int(rng, 0, static_cast<int>(by_kind.size()) - 1));
  out = it->second[uniform_int(rng, 0, static_cast<int>(it->second.size()) - 1)];
  return true;
}

}  // namespace vknot
