#include "vknot/forbidden.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "vknot/arrow.hpp"
#include "vknot/khovanov.hpp"
#include "vknot/simplify.hpp"

namespace vknot {

int triangle_sign(const GaussDiagram& d, int slot) {
  const int nxt = d.next_slot(slot);
  if (slot < 0 || slot >= d.slot_count() || nxt < 0) throw MoveError("no adjacent pair at slot " + std::to_string(slot));
  const Endpoint &a = d.at(slot), &b = d.at(nxt);
  const int a_other = d.chord(a.chord).slot(opposite(a.role));
  const int b_other = d.chord(b.chord).slot(opposite(b.role));
  if (d.is_long()) return a_other < b_other ? 1 : -1;
  const int m = d.slot_count();
  auto dist = [&](int s) { return (s - nxt + m) % m; };
  return dist(a_other) < dist(b_other) ? 1 : -1;
}

std::vector<TriangleSite> find_triangles(const GaussDiagram& d) {
  std::vector<TriangleSite> out;
  for (const MoveEvent& e : enumerate_moves(d, {MoveKind::Fo, MoveKind::Fu}))
    out.push_back({e.slot, e.kind, triangle_sign(d, e.slot)});
  std::sort(out.begin(), out.end(), [](const TriangleSite& x, const TriangleSite& y) { return x.slot < y.slot; });
  return out;
}

namespace {

void check_site(const GaussDiagram& d, const TriangleSite& s) {
  const std::string where = to_string(s.kind) + " site at slot " + std::to_string(s.slot);
  if (s.kind != MoveKind::Fo && s.kind != MoveKind::Fu) throw MoveError(where + ": kind must be Fo or Fu");
  if (s.slot < 0 || s.slot >= d.slot_count() || d.next_slot(s.slot) < 0)
    throw MoveError("stale site: " + where + " is out of range");
  const Endpoint &a = d.at(s.slot), &b = d.at(d.next_slot(s.slot));
  const Role want = s.kind == MoveKind::Fo ? Role::tail : Role::head;
  if (a.chord == b.chord || a.role != want || b.role != want)
    throw MoveError("stale site: " + where + " does not hold two " + (want == Role::tail ? "tails" : "heads"));
}

}  // namespace

GaussDiagram apply_forbidden(const GaussDiagram& d, const TriangleSite& s) {
  check_site(d, s);
  return swap_adjacent(d, s.kind, s.slot);
}

void require_disjoint(const GaussDiagram& d, const std::vector<TriangleSite>& sites) {
  std::set<int> slots, chords;
  for (const TriangleSite& s : sites) {
    check_site(d, s);
    const int t = d.next_slot(s.slot);
    for (int x : {s.slot, t}) {
      if (!slots.insert(x).second) throw MoveError("sites overlap at slot " + std::to_string(x));
      if (!chords.insert(d.at(x).chord).second)
        throw MoveError("sites share chord " + std::to_string(d.chord(d.at(x).chord).id));
    }
  }
}

void require_distinct_chords(const GaussDiagram& d, const std::vector<int>& chords) {
  std::set<int> seen;
  for (int id : chords) {
    d.require_index(id);
    if (!seen.insert(id).second) throw MoveError("chord " + std::to_string(id) + " used twice");
  }
}

FormalDiagramSum expand_semivirtual(const GaussDiagram& d, const std::vector<int>& chords) {
  require_distinct_chords(d, chords);
  FormalDiagramSum sum;
  const size_t n = chords.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<int> drop;
    for (size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) drop.push_back(chords[k]);
    sum.terms.emplace_back(std::popcount(mask) % 2 ? -1 : 1, virtualize_all(d, drop));
  }
  return sum;
}

FormalDiagramSum expand_semitriple(const GaussDiagram& d, const std::vector<TriangleSite>& sites) {
  require_disjoint(d, sites);
  int sign = 1;
  for (const TriangleSite& s : sites) sign *= triangle_sign(d, s.slot);
  FormalDiagramSum sum;
  const size_t n = sites.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    GaussDiagram cur = d;
    for (size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) cur = apply_forbidden(cur, sites[k]);
    sum.terms.emplace_back(std::popcount(mask) % 2 ? -sign : sign, std::move(cur));
  }
  return sum;
}

std::string to_string(FamilyMode m) { return m == FamilyMode::GPV ? "GPV" : "F"; }

void require_disjoint_families(const GaussDiagram& d, const std::vector<Family>& families, FamilyMode mode) {
  if (families.size() > 20) throw MoveError("at most 20 families are supported");
  for (size_t j = 0; j < families.size(); ++j)
    if (families[j].size(mode) == 0) throw MoveError("family " + std::to_string(j + 1) + " is empty");
  if (mode == FamilyMode::GPV) {
    std::vector<int> all;
    for (const Family& f : families) all.insert(all.end(), f.chords.begin(), f.chords.end());
    require_distinct_chords(d, all);
  } else {
    std::vector<TriangleSite> all;
    for (const Family& f : families) all.insert(all.end(), f.sites.begin(), f.sites.end());
    require_disjoint(d, all);
  }
}

GaussDiagram apply_members(const GaussDiagram& d, const Family& f, int count, FamilyMode mode) {
  if (mode == FamilyMode::GPV)
    return virtualize_all(d, std::vector<int>(f.chords.begin(), f.chords.begin() + count));
  GaussDiagram cur = d;
  for (int k = 0; k < count; ++k) cur = apply_forbidden(cur, f.sites[k]);
  return cur;
}

GaussDiagram apply_families(const GaussDiagram& d, const std::vector<Family>& families, unsigned mask,
                            FamilyMode mode) {
  GaussDiagram cur = d;
  for (size_t j = 0; j < families.size(); ++j)
    if (mask >> j & 1u) cur = apply_members(cur, families[j], families[j].size(mode), mode);
  return cur;
}

// --- verdicts -------------------------------------------------------------

std::string to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::certified: return "certified";
    case Verdict::Status::refuted: return "refuted";
    case Verdict::Status::unknown: return "unknown";
  }
  return "?";
}

namespace {

constexpr int kBracketCap = 20;

std::string dims_text(const GradedDims& g) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [ij, dim] : g) {
    os << (first ? "" : ", ") << '(' << ij.first << ',' << ij.second << "):" << dim;
    first = false;
  }
  os << '}';
  return os.str();
}

Verdict refuted(std::string name, std::string value, std::string unknot) {
  Verdict v;
  v.status = Verdict::Status::refuted;
  v.witness = std::move(name);
  v.value = std::move(value);
  v.unknot_value = std::move(unknot);
  return v;
}

}  // namespace

Verdict certify_trivial(const GaussDiagram& d, long budget) {
  SimplifyResult s = simplify(d, budget);
  if (s.diagram.empty()) {
    Verdict v;
    v.status = Verdict::Status::certified;
    v.trace = std::move(s.trace);
    return v;
  }
  if (d.size() <= kBracketCap) {
    const LaurentPoly j = jones_hat(d);
    const LaurentPoly unknot_j{{1, 1}, {-1, 1}};
    if (!(j == unknot_j)) return refuted("jones_hat", to_string(j), to_string(unknot_j));
    // (-A^3)^{-w} <D> is the writhe-normalized bracket.
    const int w = d.writhe();
    const LaurentPoly norm = LaurentPoly::monomial(-3 * w, w % 2 ? -1 : 1) * bracket(d);
    const LaurentPoly unknot_bracket{{2, -1}, {-2, -1}};
    if (!(norm == unknot_bracket)) return refuted("bracket", to_string(norm, "A"), to_string(unknot_bracket, "A"));
  }
  if (d.size() <= kDefaultHomologyCap) {
    const GradedDims kh = homology(d);
    const GradedDims unknot_kh{{{0, -1}, 1}, {{0, 1}, 1}};
    if (kh != unknot_kh) return refuted("khovanov", dims_text(kh), dims_text(unknot_kh));
  }
  // Long knots with a trivial closure can still be nontrivial, so the
  // degree-2 counts only speak for genuinely long input.
  if (d.is_long()) {
    if (long long a = v21(d); a != 0) return refuted("v21", std::to_string(a), "0");
    if (long long b = v22(d); b != 0) return refuted("v22", std::to_string(b), "0");
  }
  return {};
}

NTrivialReport check_n_trivial(const GaussDiagram& d, const std::vector<Family>& families, FamilyMode mode,
                               long budget) {
  require_disjoint_families(d, families, mode);
  NTrivialReport rep;
  bool all_certified = true, any_refuted = false;
  for (unsigned mask = 1; mask < (1u << families.size()); ++mask) {
    Verdict v = certify_trivial(apply_families(d, families, mask, mode), budget);
    all_certified &= v.status == Verdict::Status::certified;
    any_refuted |= v.status == Verdict::Status::refuted;
    rep.subsets.emplace_back(mask, std::move(v));
  }
  rep.aggregate = any_refuted     ? Verdict::Status::refuted
                  : all_certified ? Verdict::Status::certified
                                  : Verdict::Status::unknown;
  return rep;
}

// --- unknotting by forbidden moves ----------------------------------------

namespace {

int pair_start(const GaussDiagram& d, int a, int b) { return d.follows(a, b) ? a : b; }

int slot_of(const GaussDiagram& d, int id, Role r) { return d.chord(d.require_index(id)).slot(r); }

}  // namespace

std::optional<std::vector<MoveEvent>> mixed_swap(const GaussDiagram& d, int slot) {
  if (slot < 0 || slot >= d.slot_count()) return std::nullopt;
  const int nxt = d.next_slot(slot);
  if (nxt < 0) return std::nullopt;
  const Endpoint &e1 = d.at(slot), &e2 = d.at(nxt);
  if (e1.chord == e2.chord || e1.role == e2.role) return std::nullopt;
  // p owns the head of the pair, r the tail.
  const Chord& p = d.chord(e1.role == Role::head ? e1.chord : e2.chord);
  const Chord& r = d.chord(e1.role == Role::tail ? e1.chord : e2.chord);
  const int m = d.slot_count();
  for (bool after_tp : {true, false}) {
    for (bool before_hr : {true, false}) {
      for (int sq : {1, -1}) {
        R3Shape shape{after_tp, d.follows(p.head, r.tail), before_hr, p.sign, sq, r.sign};
        if (!r3_realizable(shape)) continue;
        const int gap_t = after_tp ? p.tail + 1 : p.tail;
        const int gap_h = before_hr ? r.head : r.head + 1;
        if (gap_t > m || gap_h > m) continue;
        // q sits next to t_p and h_r, its partner q2 on the outside.
        const bool tails_first = gap_t < gap_h || (gap_t == gap_h && after_tp);
        const bool q_first_in_tails = after_tp;
        const bool q_first_in_heads = !before_hr;
        const bool q_is_x = tails_first ? q_first_in_tails : q_first_in_heads;
        R2AddSite site;
        site.gap_a = std::min(gap_t, gap_h);
        site.gap_b = std::max(gap_t, gap_h);
        site.tails_at_a = tails_first;
        site.parallel = q_first_in_tails == q_first_in_heads;
        site.sign_first = q_is_x ? sq : -sq;
        const int q = d.max_id() + (q_is_x ? 1 : 2);
        const int q2 = d.max_id() + (q_is_x ? 2 : 1);

        std::vector<MoveEvent> trace{MoveEvent::r2_add(site)};
        GaussDiagram cur = apply_move(d, trace.back());
        trace.push_back(MoveEvent::r3({p.id, q, r.id}));
        cur = apply_move(cur, trace.back());
        trace.push_back(MoveEvent::forbidden(
            MoveKind::Fo, pair_start(cur, slot_of(cur, p.id, Role::tail), slot_of(cur, q2, Role::tail))));
        cur = apply_move(cur, trace.back());
        trace.push_back(MoveEvent::forbidden(
            MoveKind::Fu, pair_start(cur, slot_of(cur, r.id, Role::head), slot_of(cur, q2, Role::head))));
        cur = apply_move(cur, trace.back());
        trace.push_back(MoveEvent::r2_del(q, q2));
        return trace;
      }
    }
  }
  return std::nullopt;
}

namespace {

// Slides one endpoint of chord `id` step by step to its partner, then
// deletes the chord by R1.
std::optional<std::vector<MoveEvent>> contract(const GaussDiagram& d, int id, Role moving, bool forward) {
  std::vector<MoveEvent> trace;
  GaussDiagram cur = d;
  for (int guard = 0; guard <= d.slot_count(); ++guard) {
    const int here = slot_of(cur, id, moving), there = slot_of(cur, id, opposite(moving));
    if (cur.follows(here, there) || cur.follows(there, here)) {
      trace.push_back(MoveEvent::r1_del(id));
      return trace;
    }
    const int nb = forward ? cur.next_slot(here) : cur.prev_slot(here);
    if (nb < 0) return std::nullopt;
    const int start = forward ? here : nb;
    std::vector<MoveEvent> step;
    if (cur.at(nb).role == moving) {
      step.push_back(MoveEvent::forbidden(moving == Role::tail ? MoveKind::Fo : MoveKind::Fu, start));
    } else {
      auto ms = mixed_swap(cur, start);
      if (!ms) return std::nullopt;
      step = std::move(*ms);
    }
    cur = apply_trace(cur, step);
    trace.insert(trace.end(), step.begin(), step.end());
  }
  return std::nullopt;
}

struct Step {
  GaussDiagram result;
  std::vector<MoveEvent> moves;
};

std::vector<Step> macro_steps(const GaussDiagram& d) {
  std::vector<Step> out;
  std::set<std::string> seen;
  auto add = [&](std::vector<MoveEvent> moves) {
    GaussDiagram r = apply_trace(d, moves);
    if (seen.insert(r.canonical_code()).second) out.push_back({std::move(r), std::move(moves)});
  };
  for (const MoveEvent& e : enumerate_moves(d, {MoveKind::R2_del})) add({e});
  for (const MoveEvent& e : enumerate_moves(d, {MoveKind::R1_del})) add({e});
  for (const Chord& c : d.chords()) {
    for (Role moving : {Role::tail, Role::head}) {
      const int here = c.slot(moving), there = c.slot(opposite(moving));
      for (bool forward : {true, false}) {
        if (d.is_long() && forward != (there > here)) continue;
        if (auto t = contract(d, c.id, moving, forward)) add(std::move(*t));
      }
    }
  }
  return out;
}

class ForbiddenSearch {
 public:
  bool run(const GaussDiagram& d, int depth, std::vector<MoveEvent>& out) {
    if (d.empty()) return true;
    if ((d.size() + 1) / 2 > depth) return false;
    const std::string key = d.canonical_code();
    if (auto it = failed_at_.find(key); it != failed_at_.end() && it->second >= depth) return false;
    for (Step& s : macro_steps(d)) {
      std::vector<MoveEvent> rest;
      if (run(s.result, depth - 1, rest)) {
        out = std::move(s.moves);
        out.insert(out.end(), rest.begin(), rest.end());
        return true;
      }
    }
    failed_at_[key] = depth;
    return false;
  }

 private:
  std::unordered_map<std::string, int> failed_at_;
};

}  // namespace

std::optional<std::vector<MoveEvent>> trivialize_forbidden(const GaussDiagram& d, int budget) {
  ForbiddenSearch search;
  for (int depth = (d.size() + 1) / 2; depth <= budget; ++depth) {
    std::vector<MoveEvent> trace;
    if (search.run(d, depth, trace)) {
      if (!apply_trace(d, trace).empty()) throw MoveError("internal: forbidden-move trace does not replay");
      return trace;
    }
  }
  return std::nullopt;
}

// --- families file ------------------------------------------------------------

FamiliesSpec load_families(std::string_view json_text, const GaussDiagram& d) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw MoveError(std::string("malformed families JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("mode") || !doc["mode"].is_string())
    throw MoveError("families file needs a \"mode\" string");
  if (!doc.contains("families") || !doc["families"].is_array())
    throw MoveError("families file needs a \"families\" array");
  FamiliesSpec spec;
  const auto mode = doc["mode"].get<std::string>();
  if (mode == "GPV")
    spec.mode = FamilyMode::GPV;
  else if (mode == "F")
    spec.mode = FamilyMode::F;
  else
    throw MoveError("mode must be \"GPV\" or \"F\", got \"" + mode + "\"");
  for (const json& fam : doc["families"]) {
    if (!fam.is_array()) throw MoveError("each family must be an array");
    Family f;
    for (const json& item : fam) {
      if (spec.mode == FamilyMode::GPV) {
        if (item.is_number_integer())
          f.chords.push_back(item.get<int>());
        else if (item.is_object() && item.contains("chord") && item["chord"].is_number_integer())
          f.chords.push_back(item["chord"].get<int>());
        else
          throw MoveError("GPV family members must be chord ids");
        continue;
      }
      if (!item.is_object() || !item.contains("slots") || !item["slots"].is_array() || item["slots"].size() != 2 ||
          !item.contains("kind") || !item["kind"].is_string())
        throw MoveError("F family members must be {\"slots\": [k, k+1], \"kind\": \"Fo\"|\"Fu\"}");
      const int k = item["slots"][0].get<int>(), k2 = item["slots"][1].get<int>();
      const auto kind = item["kind"].get<std::string>();
      if (kind != "Fo" && kind != "Fu") throw MoveError("site kind must be \"Fo\" or \"Fu\"");
      if (k < 0 || k >= d.slot_count() || d.next_slot(k) != k2)
        throw MoveError("site slots [" + std::to_string(k) + ", " + std::to_string(k2) + "] are not adjacent");
      TriangleSite s{k, kind == "Fo" ? MoveKind::Fo : MoveKind::Fu, 1};
      check_site(d, s);
      s.sign = triangle_sign(d, k);
      f.sites.push_back(s);
    }
    spec.families.push_back(std::move(f));
  }
  require_disjoint_families(d, spec.families, spec.mode);
  return spec;
}

FamiliesSpec read_families(const std::string& path, const GaussDiagram& d) {
  std::ifstream f(path);
  if (!f) throw MoveError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_families(ss.str(), d);
}

}  // namespace vknot
