#include "vknot/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "vknot/gf2.hpp"

namespace vknot {

namespace {

constexpr int kMaskBits = 30;

GaussDiagram closed_form(const GaussDiagram& d) { return d.is_long() ? d.with_kind(Kind::closed) : d; }

struct Circles {
  std::vector<int> of_arc;
  int count = 1;
};

int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

Circles smooth(const GaussDiagram& d, std::uint32_t mask) {
  const int m = d.slot_count();
  Circles c;
  if (m == 0) return c;
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto join = [&](int a, int b) { parent[find_root(parent, a)] = find_root(parent, b); };
  auto before = [m](int slot) { return (slot + m - 1) % m; };
  for (int i = 0; i < d.size(); ++i) {
    const Chord& ch = d.chord(i);
    const int marker = (mask >> i & 1u) ? -1 : 1;
    const int p = ch.tail, q = ch.head;
    if (ch.sign * marker == 1) {
      join(before(p), q);
      join(before(q), p);
    } else {
      join(before(p), before(q));
      join(p, q);
    }
  }
  c.of_arc.assign(m, -1);
  std::vector<int> id_of_root(m, -1);
  c.count = 0;
  for (int a = 0; a < m; ++a) {
    int& id = id_of_root[find_root(parent, a)];
    if (id < 0) id = c.count++;
    c.of_arc[a] = id;
  }
  return c;
}

void check_size(const GaussDiagram& d, int cap) {
  if (d.size() > cap)
    throw HomologyError(std::to_string(d.size()) + " chords exceed the homology cap of " + std::to_string(cap));
  if (d.size() > kMaskBits) throw HomologyError("too many chords for state enumeration");
}

// All states of one diagram, smoothed once.
class StateTable {
 public:
  explicit StateTable(const GaussDiagram& d) : d_(d), n_(d.size()), w_(d.writhe()) {
    states_.reserve(size_t{1} << n_);
    for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) states_.push_back(smooth(d_, mask));
  }

  const Circles& at(std::uint32_t mask) const { return states_[mask]; }
  int n() const { return n_; }
  int writhe() const { return w_; }
  int i_of(std::uint32_t mask) const { return (w_ - (n_ - 2 * std::popcount(mask))) / 2; }
  int j_of(std::uint32_t mask, std::uint32_t labels) const {
    const int tau = at(mask).count - 2 * std::popcount(labels);
    return w_ + i_of(mask) + tau;
  }

  // Targets of the generator (mask, labels) as (mask', labels') pairs.
  template <class Emit>
  void differential(std::uint32_t mask, std::uint32_t labels, Emit&& emit) const {
    const Circles& s = at(mask);
    const int m = d_.slot_count();
    for (int b = 0; b < n_; ++b) {
      if (mask >> b & 1u) continue;
      const std::uint32_t tmask = mask | (1u << b);
      const Circles& t = at(tmask);
      if (t.count == s.count) continue;
      const Chord& ch = d_.chord(b);
      const int arcs[4] = {(ch.tail + m - 1) % m, ch.tail, (ch.head + m - 1) % m, ch.head};
      // Labels of untouched circles carry over through any of their arcs.
      std::uint32_t base = 0;
      std::vector<bool> touched_t(t.count, false);
      for (int a : arcs) touched_t[t.of_arc[a]] = true;
      std::vector<bool> done(t.count, false);
      for (int a = 0; a < m; ++a) {
        const int tc = t.of_arc[a];
        if (touched_t[tc] || done[tc]) continue;
        done[tc] = true;
        if (labels >> s.of_arc[a] & 1u) base |= 1u << tc;
      }
      if (t.count == s.count - 1) {
        const int s1 = s.of_arc[arcs[0]];
        int s2 = s1;
        for (int a : arcs)
          if (s.of_arc[a] != s1) s2 = s.of_arc[a];
        const int xs = (labels >> s1 & 1u) + (s1 != s2 ? (labels >> s2 & 1u) : 0u);
        if (xs == 2) continue;
        const int tc = t.of_arc[arcs[0]];
        emit(tmask, xs == 1 ? base | (1u << tc) : base);
      } else {
        const int sc = s.of_arc[arcs[0]];
        const int t1 = t.of_arc[arcs[0]];
        int t2 = t1;
        for (int a : arcs)
          if (t.of_arc[a] != t1) t2 = t.of_arc[a];
        if (labels >> sc & 1u) {
          emit(tmask, base | (1u << t1) | (1u << t2));
        } else {
          emit(tmask, base | (1u << t1));
          emit(tmask, base | (1u << t2));
        }
      }
    }
  }

 private:
  const GaussDiagram& d_;
  int n_;
  int w_;
  std::vector<Circles> states_;
};

std::uint32_t label_mask(const std::vector<CircleLabel>& labels) {
  std::uint32_t m = 0;
  for (size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == CircleLabel::x) m |= 1u << k;
  return m;
}

std::vector<CircleLabel> labels_of(std::uint32_t mask, int count) {
  std::vector<CircleLabel> out(count, CircleLabel::one);
  for (int k = 0; k < count; ++k)
    if (mask >> k & 1u) out[k] = CircleLabel::x;
  return out;
}

}  // namespace

StateVec all_positive(const GaussDiagram& d) { return StateVec(d.size(), 1); }

std::uint32_t state_mask(const StateVec& markers) {
  std::uint32_t mask = 0;
  for (size_t i = 0; i < markers.size(); ++i) {
    if (markers[i] != 1 && markers[i] != -1) throw HomologyError("marker must be +1 or -1");
    if (markers[i] < 0) mask |= 1u << i;
  }
  return mask;
}

StateVec markers_of(const GaussDiagram& d, std::uint32_t mask) {
  StateVec s(d.size(), 1);
  for (int i = 0; i < d.size(); ++i)
    if (mask >> i & 1u) s[i] = -1;
  return s;
}

CircleSet trace_circles(const GaussDiagram& d, const StateVec& markers) {
  if (static_cast<int>(markers.size()) != d.size())
    throw HomologyError("state has " + std::to_string(markers.size()) + " markers for " + std::to_string(d.size()) +
                        " chords");
  if (d.size() > kMaskBits) throw HomologyError("too many chords for state enumeration");
  Circles c = smooth(closed_form(d), state_mask(markers));
  return CircleSet{std::move(c.of_arc), c.count};
}

int circle_count(const GaussDiagram& d, std::uint32_t mask) { return smooth(closed_form(d), mask).count; }

Gradings gradings(const GaussDiagram& d, const EnhancedState& s) {
  const CircleSet circles = trace_circles(d, s.markers);
  if (static_cast<int>(s.labels.size()) != circles.count)
    throw HomologyError("enhanced state has " + std::to_string(s.labels.size()) + " labels for " +
                        std::to_string(circles.count) + " circles");
  Gradings g;
  for (int m : s.markers) g.sigma += m;
  for (CircleLabel l : s.labels) g.tau += l == CircleLabel::one ? 1 : -1;
  const int w = d.writhe();
  g.i = (w - g.sigma) / 2;
  g.j = w + g.i + g.tau;
  return g;
}

LaurentPoly bracket(const GaussDiagram& input) {
  const GaussDiagram d = closed_form(input);
  check_size(d, kMaskBits);
  const LaurentPoly loop{{2, -1}, {-2, -1}};
  std::vector<LaurentPoly> loop_pow{LaurentPoly::monomial(0)};
  LaurentPoly out;
  const int n = d.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int c = smooth(d, mask).count;
    while (static_cast<int>(loop_pow.size()) <= c) loop_pow.push_back(loop_pow.back() * loop);
    out += LaurentPoly::monomial(n - 2 * std::popcount(mask)) * loop_pow[c];
  }
  return out;
}

LaurentPoly jones_hat(const GaussDiagram& input) {
  const GaussDiagram d = closed_form(input);
  check_size(d, kMaskBits);
  const LaurentPoly circle{{1, 1}, {-1, 1}};
  std::vector<LaurentPoly> circle_pow{LaurentPoly::monomial(0)};
  LaurentPoly out;
  const int n = d.size(), w = d.writhe();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int c = smooth(d, mask).count;
    while (static_cast<int>(circle_pow.size()) <= c) circle_pow.push_back(circle_pow.back() * circle);
    const int i = (w - (n - 2 * std::popcount(mask))) / 2;
    out += LaurentPoly::monomial(w + i, i % 2 ? -1 : 1) * circle_pow[c];
  }
  return out;
}

std::vector<EnhancedState> differential(const GaussDiagram& input, const EnhancedState& s) {
  const GaussDiagram d = closed_form(input);
  check_size(d, kMaskBits);
  const std::uint32_t mask = state_mask(s.markers);
  if (static_cast<int>(s.markers.size()) != d.size()) throw HomologyError("marker count mismatch");
  // Only the states one switch away are needed; a full table is cheap at
  // the sizes this is called with.
  const StateTable table(d);
  if (static_cast<int>(s.labels.size()) != table.at(mask).count) throw HomologyError("label count mismatch");
  std::vector<EnhancedState> out;
  table.differential(mask, label_mask(s.labels), [&](std::uint32_t tm, std::uint32_t tl) {
    out.push_back({markers_of(d, tm), labels_of(tl, table.at(tm).count)});
  });
  return out;
}

HomologyResult khovanov(const GaussDiagram& input, int cap) {
  const GaussDiagram d = closed_form(input);
  check_size(d, cap);
  const StateTable table(d);
  const int n = d.size();

  // Generators indexed per (i, j), in (mask, labels) order.
  struct Block {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> gens;
    std::unordered_map<std::uint64_t, int> index;
  };
  std::map<std::pair<int, int>, Block> blocks;
  auto key = [](std::uint32_t m, std::uint32_t l) { return (std::uint64_t{m} << 32) | l; };
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int c = table.at(mask).count;
    for (std::uint32_t labels = 0; labels < (1u << c); ++labels) {
      Block& b = blocks[{table.i_of(mask), table.j_of(mask, labels)}];
      b.index.emplace(key(mask, labels), static_cast<int>(b.gens.size()));
      b.gens.emplace_back(mask, labels);
    }
  }

  HomologyResult res;
  std::map<std::pair<int, int>, int> rank_from;  // rank of d : C^{i,j} -> C^{i+1,j}
  for (const auto& [ij, src] : blocks) {
    res.chain[ij] = static_cast<long long>(src.gens.size());
    auto tgt_it = blocks.find({ij.first + 1, ij.second});
    if (tgt_it == blocks.end()) {
      rank_from[ij] = 0;
      continue;
    }
    const Block& tgt = tgt_it->second;
    BitMatrix mat(static_cast<int>(src.gens.size()), static_cast<int>(tgt.gens.size()));
    for (size_t r = 0; r < src.gens.size(); ++r) {
      table.differential(src.gens[r].first, src.gens[r].second, [&](std::uint32_t tm, std::uint32_t tl) {
        mat.flip(static_cast<int>(r), tgt.index.at(key(tm, tl)));
      });
    }
    rank_from[ij] = mat.rank();
  }

  // d o d = 0 on every generator.
  for (const auto& [ij, src] : blocks) {
    for (const auto& [mask, labels] : src.gens) {
      std::unordered_map<std::uint64_t, int> parity;
      table.differential(mask, labels, [&](std::uint32_t m1, std::uint32_t l1) {
        table.differential(m1, l1, [&](std::uint32_t m2, std::uint32_t l2) { parity[key(m2, l2)] ^= 1; });
      });
      for (const auto& [k, p] : parity)
        if (p) res.d_squared_zero = false;
    }
  }
  if (!res.d_squared_zero) throw HomologyError("differential does not square to zero");

  for (const auto& [ij, src] : blocks) {
    const auto prev = rank_from.find({ij.first - 1, ij.second});
    const long long dim = static_cast<long long>(src.gens.size()) - rank_from[ij] -
                          (prev == rank_from.end() ? 0 : prev->second);
    if (dim > 0) res.homology[ij] = dim;
  }
  return res;
}

GradedDims homology(const GaussDiagram& d, int cap) { return khovanov(d, cap).homology; }

LaurentPoly graded_euler(const GradedDims& dims) {
  LaurentPoly out;
  for (const auto& [ij, dim] : dims) out.add(ij.second, ij.first % 2 ? -dim : dim);
  return out;
}

bool switch_check(const GaussDiagram& input, const StateVec& markers) {
  const GaussDiagram d = closed_form(input);
  const std::uint32_t mask = state_mask(markers);
  if (static_cast<int>(markers.size()) != d.size()) throw HomologyError("marker count mismatch");
  const int c = smooth(d, mask).count;
  for (int b = 0; b < d.size(); ++b) {
    const int t = smooth(d, mask ^ (1u << b)).count;
    if (!(mask >> b & 1u) && t != c) return false;
    if ((mask >> b & 1u) && t > c) return false;
  }
  return true;
}

std::vector<EnhancedState> switch_competitors(const GaussDiagram& input, const StateVec& markers,
                                              bool labels_all_one, int limit) {
  const GaussDiagram d = closed_form(input);
  check_size(d, kMaskBits);
  const std::uint32_t mask0 = state_mask(markers);
  if (static_cast<int>(markers.size()) != d.size()) throw HomologyError("marker count mismatch");
  const int n = d.size(), w = d.writhe();
  auto i_of = [&](std::uint32_t m) { return (w - (n - 2 * std::popcount(m))) / 2; };
  const int i0 = i_of(mask0);
  const int j0 = w + i0 + smooth(d, mask0).count;
  std::vector<EnhancedState> out;
  for (std::uint32_t mask = 0; mask < (1u << n) && static_cast<int>(out.size()) < limit; ++mask) {
    const int i = i_of(mask);
    if (i < i0 - 1 || i > i0 + 1) continue;
    const int c = smooth(d, mask).count;
    const int tau = j0 - w - i;  // needed label sum
    if ((c - tau) % 2 != 0) continue;
    const int xs = (c - tau) / 2;
    if (xs < 0 || xs > c) continue;
    if (labels_all_one && xs != 0) continue;
    if (mask == mask0 && xs == 0) continue;  // S itself
    const std::uint32_t labels = xs == 0 ? 0u : ((1u << xs) - 1u);
    out.push_back({markers_of(d, mask), labels_of(labels, c)});
  }
  return out;
}

UnknotDistinction distinguish_from_unknot(const GaussDiagram& d, int cap) {
  for (const auto& [ij, dim] : homology(d, cap))
    if (std::abs(ij.second) != 1 && dim > 0) return {true, ij.first, ij.second, dim};
  return {};
}

}  // namespace vknot
