// Generators and reference implementations used only by the tests. The
// oracles here work from the raw token sequence and share no code with the
// library's matching, tracing or state tables.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vknot/gauss_diagram.hpp"
#include "vknot/laurent.hpp"

namespace oracle {

using vknot::GaussDiagram;
using vknot::Kind;
using vknot::LaurentPoly;
using vknot::Letter;
using vknot::Role;

using Gen = std::mt19937_64;

inline int pick(Gen& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

// Uniform shuffle of n signed chords: every slot used once, each id once as
// tail and once as head with one sign.
inline GaussDiagram any_diagram(Gen& g, int chords, Kind kind) {
  std::vector<Letter> w;
  for (int id = 1; id <= chords; ++id) {
    const int s = pick(g, 0, 1) ? 1 : -1;
    w.push_back({id, Role::tail, s});
    w.push_back({id, Role::head, s});
  }
  std::shuffle(w.begin(), w.end(), g);
  return GaussDiagram::from_word(kind, std::move(w));
}

inline GaussDiagram code(const std::string& text, Kind kind = Kind::closed) {
  return vknot::parse_gauss_code(text, kind);
}

// --- circles ---------------------------------------------------------------

// Walks the smoothed circle. Arc a joins slot a to slot a+1 (mod 2n).
// Arriving at a slot, the walk jumps along the chord to the partner slot and
// keeps its direction when sign * marker = +1, reverses it otherwise.
inline int count_circles(const GaussDiagram& d, const std::vector<int>& markers) {
  const int m = d.slot_count();
  if (m == 0) return 1;
  std::vector<Letter> w(d.word().begin(), d.word().end());
  std::map<int, std::vector<int>> slots_of;
  for (int s = 0; s < m; ++s) slots_of[w[s].id].push_back(s);
  std::vector<int> partner(m);
  std::map<int, int> chord_index;
  for (const auto& [id, ss] : slots_of) {
    partner[ss[0]] = ss[1];
    partner[ss[1]] = ss[0];
  }
  // chord position in d.chords() for the marker lookup
  for (int i = 0; i < d.size(); ++i) chord_index[d.chord(i).id] = i;
  std::vector<bool> used(m, false);
  int circles = 0;
  for (int start = 0; start < m; ++start) {
    if (used[start]) continue;
    ++circles;
    int arc = start;
    bool forward = true;
    while (!used[arc]) {
      used[arc] = true;
      const int at = forward ? (arc + 1) % m : arc;
      const int other = partner[at];
      const int ci = chord_index[w[at].id];
      const bool keep = w[at].sign * markers[ci] == 1;
      if (!keep) forward = !forward;
      arc = forward ? other : (other - 1 + m) % m;
    }
  }
  return circles;
}

inline std::vector<int> markers_from_mask(int n, std::uint32_t mask) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = (mask >> i & 1u) ? -1 : 1;
  return s;
}

// Kauffman bracket by recursive expansion: each chord splits into its A and
// A^-1 smoothing; leaves count circles with the walker above.
inline LaurentPoly bracket(const GaussDiagram& d) {
  const GaussDiagram c = d.with_kind(Kind::closed);
  const LaurentPoly loop{{2, -1}, {-2, -1}};
  std::vector<int> markers(c.size(), 1);
  LaurentPoly total;
  auto rec = [&](auto&& self, int i, int sigma) -> void {
    if (i == c.size()) {
      total += LaurentPoly::monomial(sigma) * vknot::pow(loop, count_circles(c, markers));
      return;
    }
    markers[i] = 1;
    self(self, i + 1, sigma + 1);
    markers[i] = -1;
    self(self, i + 1, sigma - 1);
  };
  rec(rec, 0, 0);
  return total;
}

// Gradings of one enhanced state given its marker sum and label degree sum.
struct Grade {
  int i, j;
};
inline Grade grade(int writhe, int sigma, int tau) {
  const int i = (writhe - sigma) / 2;
  return {i, writhe + i + tau};
}

// Enhanced-state sum, enumerating every labeling explicitly.
inline LaurentPoly jones_hat(const GaussDiagram& d) {
  const GaussDiagram c = d.with_kind(Kind::closed);
  const int n = c.size();
  LaurentPoly total;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto s = markers_from_mask(n, mask);
    int sigma = 0;
    for (int m : s) sigma += m;
    const int circles = count_circles(c, s);
    for (std::uint32_t lab = 0; lab < (1u << circles); ++lab) {
      const int xs = __builtin_popcount(lab);
      const Grade g = grade(c.writhe(), sigma, circles - 2 * xs);
      total.add(g.j, g.i % 2 == 0 ? 1 : -1);
    }
  }
  return total;
}

// --- pattern counting --------------------------------------------------------

// A two-chord pattern as the role/label sequence of its four endpoints,
// e.g. {{0,tail},{1,head},{0,head},{1,tail}}.
using Shape = std::vector<std::pair<int, Role>>;

// Signed count of ordered chord pairs (a, b) of a long diagram whose four
// endpoints, read left to right, spell `shape` with a as label 0.
inline long long count_pairs(const GaussDiagram& d, const Shape& shape) {
  long long total = 0;
  for (const auto& a : d.chords())
    for (const auto& b : d.chords()) {
      if (a.id == b.id) continue;
      std::vector<std::pair<int, std::pair<int, Role>>> pts{
          {a.tail, {0, Role::tail}}, {a.head, {0, Role::head}}, {b.tail, {1, Role::tail}}, {b.head, {1, Role::head}}};
      std::sort(pts.begin(), pts.end(), [](auto& x, auto& y) { return x.first < y.first; });
      Shape seen;
      for (auto& p : pts) seen.push_back(p.second);
      if (seen == shape) total += a.sign * b.sign;
    }
  return total;
}

inline const Shape& v21_shape() {
  static const Shape s{{0, Role::tail}, {1, Role::head}, {0, Role::head}, {1, Role::tail}};
  return s;
}
inline const Shape& v22_shape() {
  static const Shape s{{0, Role::head}, {1, Role::tail}, {0, Role::tail}, {1, Role::head}};
  return s;
}

// Number of chord subsets of d whose restricted token sequence equals the
// pattern's up to renaming chords (and up to rotation for closed diagrams).
// Signs are ignored. Pattern given as a sequence of (label, role).
inline long long count_subdiagrams(const GaussDiagram& d, const Shape& pattern) {
  int k = 0;
  for (auto& [label, role] : pattern) k = std::max(k, label + 1);
  long long count = 0;
  const int n = d.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<Letter> sub;
    std::map<int, bool> keep;
    for (int i = 0; i < n; ++i) keep[d.chord(i).id] = mask >> i & 1u;
    for (const Letter& l : d.word())
      if (keep[l.id]) sub.push_back(l);
    const int len = static_cast<int>(sub.size());
    bool hit = false;
    const int rotations = d.is_long() ? 1 : std::max(len, 1);
    for (int r = 0; r < rotations && !hit; ++r) {
      std::map<int, int> label_of_id, id_of_label;
      bool ok = true;
      for (int t = 0; t < len && ok; ++t) {
        const Letter& l = sub[(t + r) % len];
        const auto& [label, role] = pattern[t];
        if (l.role != role) ok = false;
        auto a = label_of_id.find(l.id);
        auto b = id_of_label.find(label);
        if (a == label_of_id.end() && b == id_of_label.end()) {
          label_of_id[l.id] = label;
          id_of_label[label] = l.id;
        } else if (a == label_of_id.end() || b == id_of_label.end() || a->second != label) {
          ok = false;
        }
      }
      hit = ok;
    }
    count += hit;
  }
  return count;
}

}  // namespace oracle
