// Triangles, forbidden moves, formal expansions over site families and
// triviality verdicts.

#pragma once

#include <bit>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/invariant.hpp"
#include "vknot/moves.hpp"

namespace vknot {

// Adjacent endpoints at (slot, next slot): two tails (Fo) or two heads (Fu)
// of distinct chords.
struct TriangleSite {
  int slot = 0;
  MoveKind kind = MoveKind::Fo;
  int sign = 1;

  bool operator==(const TriangleSite&) const = default;
};

// Sign of the triangle at (slot, next slot) holding endpoints of chords a
// then b: +1 when the other endpoint of a comes before the other endpoint of
// b, reading from the slot after the pair (cyclically for closed diagrams,
// by slot index for long ones). Exchanging the pair flips it.
int triangle_sign(const GaussDiagram& d, int slot);

std::vector<TriangleSite> find_triangles(const GaussDiagram& d);

// Throws MoveError("stale site ...") if s no longer describes d.
GaussDiagram apply_forbidden(const GaussDiagram& d, const TriangleSite& s);

// Throws MoveError when two sites share a slot or a chord.
void require_disjoint(const GaussDiagram& d, const std::vector<TriangleSite>& sites);
// Throws DiagramError for unknown ids, MoveError for repeats.
void require_distinct_chords(const GaussDiagram& d, const std::vector<int>& chords);

template <class V>
V f_alt_sum(const Invariant<V>& v, const GaussDiagram& d, const std::vector<TriangleSite>& sites) {
  require_disjoint(d, sites);
  V total{};
  const size_t n = sites.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    GaussDiagram cur = d;
    for (size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) cur = apply_forbidden(cur, sites[k]);
    if (std::popcount(mask) % 2)
      total -= v(cur);
    else
      total += v(cur);
  }
  return total;
}

struct FormalDiagramSum {
  std::vector<std::pair<long long, GaussDiagram>> terms;

  template <class V>
  V eval(const Invariant<V>& v) const {
    V total{};
    for (const auto& [c, d] : terms) total += v(d) * c;
    return total;
  }
};

// Sum over V subset of M of (-1)^|V| (d with V deleted).
FormalDiagramSum expand_semivirtual(const GaussDiagram& d, const std::vector<int>& chords);
// Sum over V subset of M of (prod of all site signs) (-1)^|V| (d with V
// exchanged). With one site of sign e this is e (d - d'), the formal value
// of a semi-triple point.
FormalDiagramSum expand_semitriple(const GaussDiagram& d, const std::vector<TriangleSite>& sites);

enum class FamilyMode : std::uint8_t { GPV, F };

std::string to_string(FamilyMode m);

// Ordered members of one family: chord ids (GPV) or triangle sites (F).
struct Family {
  std::vector<int> chords;
  std::vector<TriangleSite> sites;

  int size(FamilyMode m) const { return static_cast<int>(m == FamilyMode::GPV ? chords.size() : sites.size()); }
};

// Throws MoveError when members overlap within or across families, or when
// a family is empty.
void require_disjoint_families(const GaussDiagram& d, const std::vector<Family>& families, FamilyMode mode);

// d with the first `count` members of `f` applied.
GaussDiagram apply_members(const GaussDiagram& d, const Family& f, int count, FamilyMode mode);
// d with every member of the families in `mask` applied.
GaussDiagram apply_families(const GaussDiagram& d, const std::vector<Family>& families, unsigned mask,
                            FamilyMode mode);

template <class V>
struct ResidualReport {
  V residual{};
  V v_k{};               // v(K)
  V v_kprime{};          // v(K'), every family applied
  V subfamily_sum{};     // sum over nonempty U of (-1)^{|U|+1} v(K(U))
  V matrix_sum{};        // sum over matrices of the signed expansion values
  bool subfamily_values_constant = true;  // v(K(U)) = v(K') for all U
};

// residual = v(K) - subfamily_sum - matrix_sum, which vanishes for every v.
// When all v(K(U)) agree it reads v(K) - v(K') = matrix_sum.
template <class V>
ResidualReport<V> family_sum_residual(const Invariant<V>& v, const GaussDiagram& d,
                                      const std::vector<Family>& families, FamilyMode mode) {
  require_disjoint_families(d, families, mode);
  const size_t n = families.size();
  ResidualReport<V> rep;
  rep.v_k = v(d);
  rep.v_kprime = v(apply_families(d, families, (1u << n) - 1u, mode));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const V value = v(apply_families(d, families, mask, mode));
    if (!(value == rep.v_kprime)) rep.subfamily_values_constant = false;
    if (std::popcount(mask) % 2)
      rep.subfamily_sum += value;
    else
      rep.subfamily_sum -= value;
  }
  // Matrix entries: for family j, members before index choice[j] applied,
  // member choice[j] expanded.
  std::vector<int> choice(n, 0);
  while (true) {
    GaussDiagram prefix = d;
    for (size_t j = 0; j < n; ++j) prefix = apply_members(prefix, families[j], choice[j], mode);
    if (mode == FamilyMode::GPV) {
      std::vector<int> marked;
      for (size_t j = 0; j < n; ++j) marked.push_back(families[j].chords[choice[j]]);
      rep.matrix_sum += expand_semivirtual(prefix, marked).eval(v);
    } else {
      std::vector<TriangleSite> marked;
      int sign = 1;
      for (size_t j = 0; j < n; ++j) {
        TriangleSite s = families[j].sites[choice[j]];
        s.sign = triangle_sign(prefix, s.slot);
        sign *= s.sign;
        marked.push_back(s);
      }
      V value = expand_semitriple(prefix, marked).eval(v);
      if (sign < 0)
        rep.matrix_sum -= value;
      else
        rep.matrix_sum += value;
    }
    size_t j = 0;
    while (j < n && ++choice[j] == families[j].size(mode)) choice[j++] = 0;
    if (j == n) break;
  }
  rep.residual = rep.v_k;
  rep.residual -= rep.subfamily_sum;
  rep.residual -= rep.matrix_sum;
  return rep;
}

struct Verdict {
  enum class Status : std::uint8_t { certified, refuted, unknown };
  Status status = Status::unknown;
  std::vector<MoveEvent> trace;  // certified: moves to the empty diagram
  std::string witness;           // refuted: invariant name
  std::string value;             // refuted: its value on the diagram
  std::string unknot_value;      // refuted: its value on the unknot
};

std::string to_string(Verdict::Status s);

inline constexpr long kDefaultCertifyBudget = 2000;

// Certified when simplify empties d within `budget`; otherwise Refuted by
// the first battery invariant that differs from the unknot's (jones_hat,
// normalized bracket, Khovanov dims within cap, and v21/v22 for long
// diagrams); otherwise Unknown.
Verdict certify_trivial(const GaussDiagram& d, long budget = kDefaultCertifyBudget);

struct NTrivialReport {
  std::vector<std::pair<unsigned, Verdict>> subsets;  // family mask -> verdict
  Verdict::Status aggregate = Verdict::Status::unknown;
};

NTrivialReport check_n_trivial(const GaussDiagram& d, const std::vector<Family>& families, FamilyMode mode,
                               long budget = kDefaultCertifyBudget);

// Exchanges the mixed pair (a head and a tail of distinct chords) at (slot,
// next slot) using only Reidemeister and forbidden moves. The returned
// moves, applied to d, give d with those two endpoints exchanged.
std::optional<std::vector<MoveEvent>> mixed_swap(const GaussDiagram& d, int slot);

// Iterative deepening over macro steps (one R1/R2 deletion, or sliding one
// endpoint of a chord to its partner and deleting it). `budget` is the
// maximum number of macro steps. The returned primitive moves empty d.
std::optional<std::vector<MoveEvent>> trivialize_forbidden(const GaussDiagram& d, int budget);

struct FamiliesSpec {
  FamilyMode mode = FamilyMode::GPV;
  std::vector<Family> families;
};

// {"mode": "GPV"|"F", "families": [[descriptor, ...], ...]}; GPV descriptors
// are chord ids, F descriptors {"slots": [k, k+1], "kind": "Fo"|"Fu"}.
// Triangle signs are read off d.
FamiliesSpec load_families(std::string_view json_text, const GaussDiagram& d);
FamiliesSpec read_families(const std::string& path, const GaussDiagram& d);

}  // namespace vknot
