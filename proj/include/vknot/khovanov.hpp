// Kauffman bracket, unnormalized Jones polynomial and Khovanov homology with
// Z/2 coefficients for virtual knots given as Gauss diagrams.
//
// A state chooses a marker for every chord: +1 (positive) or -1 (negative).
// Internally states are bitmasks over chord indices where a set bit is a
// negative marker, so mask 0 is the all-positive state.
//
// The base circle is cut into 2n arcs, arc k running from slot k to slot
// k+1. At a chord of sign e with marker m the smoothing follows the
// orientation when e*m = +1 and reverses it otherwise. Long diagrams are
// evaluated on their closure.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vknot/gauss_diagram.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

class HomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using StateVec = std::vector<int>;  // marker per chord index, +1 or -1

enum class CircleLabel : std::uint8_t { one, x };

struct CircleSet {
  std::vector<int> circle_of_arc;  // size 2n, circles numbered by first arc
  int count = 1;
};

struct EnhancedState {
  StateVec markers;
  std::vector<CircleLabel> labels;  // one per circle, in CircleSet order

  bool operator==(const EnhancedState&) const = default;
};

struct Gradings {
  int sigma = 0;  // #positive - #negative markers
  int tau = 0;    // #1 labels - #x labels
  int i = 0;
  int j = 0;
};

using GradedDims = std::map<std::pair<int, int>, long long>;  // (i, j) -> dim

inline constexpr int kDefaultHomologyCap = 12;

StateVec all_positive(const GaussDiagram& d);
std::uint32_t state_mask(const StateVec& markers);
StateVec markers_of(const GaussDiagram& d, std::uint32_t mask);

// Throws HomologyError on a marker count mismatch or a marker outside {+1,-1}.
CircleSet trace_circles(const GaussDiagram& d, const StateVec& markers);
int circle_count(const GaussDiagram& d, std::uint32_t mask);

Gradings gradings(const GaussDiagram& d, const EnhancedState& s);

// Sum over states of A^sigma (-A^2 - A^-2)^{#circles}.
LaurentPoly bracket(const GaussDiagram& d);
// Sum over enhanced states of (-1)^i q^j.
LaurentPoly jones_hat(const GaussDiagram& d);

// Images of s under the differential: one marker at a time switched from
// positive to negative; merges and splits as in the Frobenius algebra
// 1*1 = 1, 1*x = x, x*x = 0; 1 -> 1x + x1, x -> xx; count-preserving
// switches give zero.
std::vector<EnhancedState> differential(const GaussDiagram& d, const EnhancedState& s);

struct HomologyResult {
  GradedDims homology;
  GradedDims chain;  // dim C^{i,j}
  bool d_squared_zero = true;
};

HomologyResult khovanov(const GaussDiagram& d, int cap = kDefaultHomologyCap);
GradedDims homology(const GaussDiagram& d, int cap = kDefaultHomologyCap);

// Sum over (i, j) of (-1)^i dim q^j.
LaurentPoly graded_euler(const GradedDims& dims);

// Both single-switch conditions: every positive -> negative switch keeps the
// circle count and no negative -> positive switch increases it.
bool switch_check(const GaussDiagram& d, const StateVec& markers);

// Enhanced states other than S (the state `markers` with every circle
// labelled 1) having j(T) = j(S) and |i(T) - i(S)| <= 1. With
// `labels_all_one` only candidates whose circles are all labelled 1 count.
// At most `limit` states are returned.
std::vector<EnhancedState> switch_competitors(const GaussDiagram& d, const StateVec& markers,
                                              bool labels_all_one, int limit = 4);

struct UnknotDistinction {
  bool nontrivial = false;
  int i = 0;
  int j = 0;
  long long dim = 0;
};

// A group KH^{i,j} != 0 with |j| != 1 proves the knot is not the unknot.
UnknotDistinction distinguish_from_unknot(const GaussDiagram& d, int cap = kDefaultHomologyCap);

}  // namespace vknot
