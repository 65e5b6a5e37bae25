#include "vknot/selftest.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "vknot/arrow.hpp"
#include "vknot/forbidden.hpp"
#include "vknot/khovanov.hpp"
#include "vknot/sampling.hpp"
#include "vknot/simplify.hpp"

namespace vknot {

std::vector<NamedDiagram> classical_corpus() {
  return {
      {"right trefoil", standard_closure(parse_braid("s1 s1 s1"), 2)},
      {"left trefoil", standard_closure(parse_braid("S1 S1 S1"), 2)},
      {"figure-eight", standard_closure(parse_braid("s1 S2 s1 S2"), 3)},
  };
}

GeneratorDef sample_generators() {
  GeneratorDef g{parse_braid("s1 v2 s2 v1"), parse_braid("S3 v2 S2 v3")};
  g.a.name = "A";
  g.b.name = "B";
  return g;
}

GeneratorDef virtual_trefoil_generators() {
  GeneratorDef g{parse_braid("s1 s1"), parse_braid("s2 s2")};
  g.a.name = "A";
  g.b.name = "B";
  return g;
}

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
};

Kind random_kind(Rng& rng) { return uniform_int(rng, 0, 1) ? Kind::closed : Kind::long_knot; }

bool unit_monomial_ratio(const LaurentPoly& a, const LaurentPoly& b) {
  for (int e : {-3, 0, 3})
    for (int s : {-1, 1})
      if (LaurentPoly::monomial(e, s) * a == b) return true;
  return false;
}

std::vector<std::vector<int>> triples(const GaussDiagram& d) {
  std::vector<std::vector<int>> out;
  const int n = d.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) out.push_back({d.chord(a).id, d.chord(b).id, d.chord(c).id});
  return out;
}

bool sites_disjoint(const GaussDiagram& d, const TriangleSite& x, const TriangleSite& y) {
  try {
    require_disjoint(d, {x, y});
    return true;
  } catch (const MoveError&) {
    return false;
  }
}

// --- 1 -------------------------------------------------------------------

void unknot_homology(Check& c, Rng&) {
  const GradedDims kh = homology(parse_gauss_code("", Kind::closed));
  const GradedDims want{{{0, -1}, 1}, {{0, 1}, 1}};
  if (kh != want) c.fail("unexpected unknot table");
  c.note << "KH(unknot) has " << kh.size() << " nonzero groups";
}

// --- 2 -------------------------------------------------------------------

void euler_identity(Check& c, Rng& rng) {
  int tested = 0;
  for (int k = 0; k < 500; ++k) {
    const GaussDiagram d = random_diagram(rng, uniform_int(rng, 0, 8), Kind::closed);
    HomologyResult h;
    try {
      h = khovanov(d);
    } catch (const HomologyError& e) {
      c.fail(d.code() + ": " + e.what());
      return;
    }
    if (!h.d_squared_zero) c.fail("d^2 != 0 on " + d.code());
    if (!(graded_euler(h.homology) == jones_hat(d))) c.fail("Euler characteristic differs on " + d.code());
    if (!(graded_euler(h.chain) == jones_hat(d))) c.fail("chain Euler characteristic differs on " + d.code());
    ++tested;
  }
  c.note << tested << " diagrams, d^2 = 0 and Euler identity checked";
}

// --- 3 -------------------------------------------------------------------

void move_invariance(Check& c, Rng& rng) {
  std::map<MoveKind, int> kinds;
  int samples = 0;
  while (samples < 200) {
    const Kind kind = random_kind(rng);
    const bool plant = uniform_int(rng, 0, 2) == 0;
    const GaussDiagram d =
        plant ? random_diagram_with_r3(rng, uniform_int(rng, 0, 3), kind) : random_diagram(rng, uniform_int(rng, 0, 6), kind);
    MoveEvent e;
    if (plant) {
      auto r3 = enumerate_moves(d, {MoveKind::R3});
      e = r3[uniform_int(rng, 0, static_cast<int>(r3.size()) - 1)];
    } else if (!random_reidemeister_move(rng, d, e)) {
      continue;
    }
    const GaussDiagram d2 = apply_move(d, e);
    ++samples;
    ++kinds[e.kind];
    const std::string where = d.code() + " / " + e.describe();
    const bool r1 = e.kind == MoveKind::R1_add || e.kind == MoveKind::R1_del;
    const LaurentPoly b1 = bracket(d), b2 = bracket(d2);
    if (r1 ? !unit_monomial_ratio(b1, b2) : !(b1 == b2)) c.fail("bracket changed: " + where);
    if (!(jones_hat(d) == jones_hat(d2))) c.fail("jones_hat changed: " + where);
    if (homology(d) != homology(d2)) c.fail("Khovanov table changed: " + where);
    if (d.is_long() && (v21(d) != v21(d2) || v22(d) != v22(d2))) c.fail("v21/v22 changed: " + where);
  }
  c.note << samples << " samples (";
  bool first = true;
  for (const auto& [k, n] : kinds) {
    c.note << (first ? "" : ", ") << to_string(k) << ' ' << n;
    first = false;
  }
  c.note << ')';
}

// --- 4 -------------------------------------------------------------------

void gpv_order(Check& c, Rng& rng) {
  const IntInvariant inv[2] = {v21_invariant(), v22_invariant()};
  long sums = 0;
  for (int k = 0; k < 200; ++k) {
    const GaussDiagram d = random_diagram(rng, uniform_int(rng, 3, 7), Kind::long_knot);
    for (const auto& t : triples(d))
      for (const IntInvariant& v : inv) {
        ++sums;
        if (long long s = gpv_alt_sum(v, d, t); s != 0)
          c.fail(v.name + " triple sum " + std::to_string(s) + " on " + d.code());
      }
  }
  c.note << sums << " triple sums over 200 long diagrams";
}

// --- 5 -------------------------------------------------------------------

void f_order(Check& c, Rng& rng) {
  const IntInvariant v = v21_invariant();
  int diagrams = 0, nonzero_single = 0;
  long pair_sums = 0;
  while (diagrams < 100) {
    const GaussDiagram d = random_diagram(rng, uniform_int(rng, 2, 7), Kind::long_knot);
    const auto tri = find_triangles(d);
    bool has_pair = false;
    for (size_t a = 0; a < tri.size(); ++a)
      for (size_t b = a + 1; b < tri.size(); ++b) {
        if (!sites_disjoint(d, tri[a], tri[b])) continue;
        has_pair = true;
        ++pair_sums;
        if (long long s = f_alt_sum(v, d, {tri[a], tri[b]}); s != 0)
          c.fail("two-site sum " + std::to_string(s) + " on " + d.code());
      }
    if (!has_pair) continue;
    ++diagrams;
    for (const TriangleSite& s : tri)
      if (f_alt_sum(v, d, {s}) != 0) ++nonzero_single;
  }
  if (nonzero_single == 0) c.fail("no single-site difference was nonzero");
  c.note << pair_sums << " two-site sums over " << diagrams << " diagrams; " << nonzero_single
         << " nonzero single-site differences";
}

// --- 6 -------------------------------------------------------------------

// Families in a long diagram z such that applying any nonempty union of them
// simplifies to the empty diagram while z itself is not certified trivial.
bool brunnian(const GaussDiagram& z, const std::vector<Family>& fams, FamilyMode mode) {
  for (unsigned m = 1; m < (1u << fams.size()); ++m)
    if (!simplify(apply_families(z, fams, m, mode), 300).diagram.empty()) return false;
  return certify_trivial(z, 300).status != Verdict::Status::certified;
}

std::vector<Family> random_gpv_families(Rng& rng, const GaussDiagram& d, int n) {
  std::vector<int> ids;
  for (const Chord& ch : d.chords()) ids.push_back(ch.id);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<Family> fams(n);
  for (size_t i = 0; i < ids.size(); ++i) {
    const int f = i < static_cast<size_t>(n) ? static_cast<int>(i) : uniform_int(rng, 0, n);
    if (f < n) fams[f].chords.push_back(ids[i]);
  }
  return fams;
}

// Two families of pairwise disjoint triangle sites, or empty if d has too few.
std::vector<Family> random_f_families(Rng& rng, const GaussDiagram& d) {
  auto tri = find_triangles(d);
  std::shuffle(tri.begin(), tri.end(), rng);
  std::vector<TriangleSite> chosen;
  for (const TriangleSite& s : tri) {
    bool ok = true;
    for (const TriangleSite& t : chosen) ok &= sites_disjoint(d, s, t);
    if (ok) chosen.push_back(s);
  }
  if (chosen.size() < 2) return {};
  std::vector<Family> fams(2);
  for (size_t i = 0; i < chosen.size(); ++i) fams[i < 2 ? i : uniform_int(rng, 0, 1)].sites.push_back(chosen[i]);
  return fams;
}

std::vector<Family> shifted(const std::vector<Family>& fams, int id_shift, int slot_shift) {
  std::vector<Family> out = fams;
  for (Family& f : out) {
    for (int& id : f.chords) id += id_shift;
    for (TriangleSite& s : f.sites) s.slot += slot_shift;
  }
  return out;
}

void family_sums(Check& c, Rng& rng) {
  const IntInvariant inv[2] = {v21_invariant(), v22_invariant()};
  int gpv = 0, f = 0;
  while (gpv < 50) {
    const GaussDiagram d = random_diagram(rng, uniform_int(rng, 3, 7), Kind::long_knot);
    const auto fams = random_gpv_families(rng, d, 3);
    for (const IntInvariant& v : inv) {
      const auto rep = family_sum_residual(v, d, fams, FamilyMode::GPV);
      if (rep.residual != 0) c.fail("GPV residual on " + d.code());
      if (rep.matrix_sum != 0) c.fail("GPV matrix sum nonzero for " + v.name + " on " + d.code());
    }
    ++gpv;
  }
  while (f < 50) {
    const GaussDiagram d = random_diagram(rng, uniform_int(rng, 3, 7), Kind::long_knot);
    const auto fams = random_f_families(rng, d);
    if (fams.empty()) continue;
    for (const IntInvariant& v : inv) {
      const auto rep = family_sum_residual(v, d, fams, FamilyMode::F);
      if (rep.residual != 0) c.fail("F residual on " + d.code());
      if (rep.matrix_sum != 0) c.fail("F matrix sum nonzero for " + v.name + " on " + d.code());
    }
    ++f;
  }
  // Corollary: K = D # Z with Brunnian families in Z, so every K(U) is
  // equivalent to D and v(K) must equal v(K').
  int corollary[2] = {0, 0};
  for (int mode_index = 0; mode_index < 2; ++mode_index) {
    const FamilyMode mode = mode_index == 0 ? FamilyMode::GPV : FamilyMode::F;
    int attempts = 0;
    while (corollary[mode_index] < 10 && ++attempts < 400000) {
      const GaussDiagram z = random_diagram(rng, uniform_int(rng, 3, 6), Kind::long_knot);
      const auto fams = mode == FamilyMode::GPV ? random_gpv_families(rng, z, 3) : random_f_families(rng, z);
      if (fams.empty() || !brunnian(z, fams, mode)) continue;
      const GaussDiagram front = random_diagram(rng, uniform_int(rng, 0, 4), Kind::long_knot);
      const GaussDiagram k = concat_long(front, z);
      const auto kf = shifted(fams, front.max_id(), front.slot_count());
      for (const IntInvariant& v : inv) {
        const auto rep = family_sum_residual(v, k, kf, mode);
        if (rep.residual != 0) c.fail("corollary residual on " + k.code());
        if (rep.v_k != rep.v_kprime)
          c.fail(v.name + "(K) != " + v.name + "(K') on " + k.code() + " (" + to_string(mode) + ")");
      }
      ++corollary[mode_index];
    }
    if (corollary[mode_index] < 10) c.fail("too few Brunnian instances found in " + to_string(mode) + " mode");
  }
  c.note << gpv << " GPV and " << f << " F instances; corollary on " << corollary[0] << " GPV and " << corollary[1]
         << " F Brunnian instances";
}

// --- 7 -------------------------------------------------------------------

void reference_values(Check& c, Rng&) {
  const GaussDiagram lt = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+", Kind::long_knot);
  if (v21(lt) != 1) c.fail("v21(long trefoil) = " + std::to_string(v21(lt)));
  if (v21(GaussDiagram(Kind::long_knot)) != 0) c.fail("v21(unknot) != 0");
  int cuts = 0;
  for (const auto& [name, d] : classical_corpus()) {
    for (int s = 0; s <= d.slot_count(); ++s) {
      const GaussDiagram l = cut(d, s);
      ++cuts;
      if (v21(l) != v22(l)) c.fail("v21 != v22 on a cut of the " + name);
    }
  }
  c.note << "v21(LT) = " << v21(lt) << ", v21(unknot) = 0, v21 = v22 on " << cuts << " cuts of the classical corpus";
}

// --- 8 -------------------------------------------------------------------

void switch_certificate(Check& c, Rng& rng) {
  std::vector<GaussDiagram> corpus;
  for (const auto& nd : classical_corpus()) corpus.push_back(nd.diagram);
  corpus.push_back(parse_gauss_code("O1+ O2+ U1+ U2+", Kind::closed));
  for (int k = 1; k <= 3; ++k) corpus.push_back(closure(b_family(k, virtual_trefoil_generators())));
  while (corpus.size() < 200) corpus.push_back(random_diagram(rng, uniform_int(rng, 1, 10), Kind::closed));
  int passing = 0, counterexamples = 0, weak_counterexamples = 0;
  for (const GaussDiagram& d : corpus) {
    if (d.size() > 10) continue;
    for (std::uint32_t mask = 0; mask < (1u << d.size()); ++mask) {
      const StateVec s = markers_of(d, mask);
      if (!switch_check(d, s)) continue;
      ++passing;
      const auto strong = switch_competitors(d, s, false, 1);
      if (!strong.empty()) {
        if (counterexamples++ == 0) {
          std::ostringstream os;
          os << "counterexample: D = \"" << d.code() << "\", markers = [";
          for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << (s[i] > 0 ? '+' : '-');
          os << "], competing state markers = [";
          for (size_t i = 0; i < strong[0].markers.size(); ++i) os << (i ? "," : "") << (strong[0].markers[i] > 0 ? '+' : '-');
          os << "], labels = ";
          for (CircleLabel l : strong[0].labels) os << (l == CircleLabel::one ? '1' : 'x');
          const Gradings g = gradings(d, strong[0]);
          os << " (i = " << g.i << ", j = " << g.j << ")";
          c.fail(os.str());
        }
      }
      if (!switch_competitors(d, s, true, 1).empty()) ++weak_counterexamples;
    }
  }
  c.note << "; " << passing << " states pass the switch conditions, " << counterexamples
         << " have competitors, " << weak_counterexamples << " have all-1 competitors";
}

// --- 9 -------------------------------------------------------------------

void unknotting(Check& c, Rng& rng) {
  int emptied = 0;
  size_t longest = 0;
  for (int k = 0; k < 30; ++k) {
    const GaussDiagram d = random_diagram(rng, uniform_int(rng, 1, 5), random_kind(rng));
    const auto trace = trivialize_forbidden(d, 10);
    if (!trace) {
      c.fail("no trace for " + d.code());
      continue;
    }
    if (!apply_trace(d, *trace).empty()) {
      c.fail("trace does not replay on " + d.code());
      continue;
    }
    longest = std::max(longest, trace->size());
    ++emptied;
  }
  c.note << emptied << "/30 emptied, longest trace " << longest << " moves";
}

// --- 10 ------------------------------------------------------------------

void braids(Check& c, Rng&) {
  const GeneratorDef g = sample_generators();
  const BraidWord want = product(product(product(g.b, g.a), inverse(g.b)), inverse(g.a));
  if (!(b_family(2, g) == want)) c.fail("b(2) is not B A B^-1 A^-1");
  for (int k = 2; k <= 10; ++k) {
    const BraidWord& gen = b_family_generator(k) == 'A' ? g.a : g.b;
    if (b_family(k, g).size() != 2 * (gen.size() + b_family(k - 1, g).size()))
      c.fail("length recursion fails at k = " + std::to_string(k));
  }
  if (certify_trivial(closure(BraidWord{})).status != Verdict::Status::certified)
    c.fail("closure of the empty word is not certified trivial");
  int scanned = 0, nontrivial = 0;
  for (const GeneratorDef& defs : {g, virtual_trefoil_generators()}) {
    for (const ScanRow& row : scan_family(1, 6, defs, kDefaultHomologyCap)) {
      if (row.skipped) continue;
      ++scanned;
      nontrivial += row.nontrivial;
    }
  }
  if (scanned == 0) c.fail("no scan row within the cap");
  c.note << "b(2) literal, lengths to k = 10, " << scanned << " closures scanned (" << nontrivial
         << " shown nontrivial)";
}

const char* const kTitles[kCriterionCount] = {
    "unknot homology",
    "d^2 = 0 and Euler identity",
    "Reidemeister invariance",
    "GPV finite type of order 2",
    "F-order of v21",
    "expansion identities",
    "reference values",
    "switch-condition certificate vs brute force",
    "unknotting by forbidden moves",
    "braid recursion and scan",
};

using Body = void (*)(Check&, Rng&);
const Body kBodies[kCriterionCount] = {unknot_homology, euler_identity, move_invariance, gpv_order, f_order,
                                       family_sums,     reference_values, switch_certificate, unknotting, braids};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id - 1];
  Rng rng(seed + static_cast<std::uint64_t>(id));
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    kBodies[id - 1](c, rng);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = c.ok;
  r.detail = c.note.str();
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace vknot
