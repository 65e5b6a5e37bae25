// Arrow-diagram patterns and their pairing with Gauss diagrams.
//
// A pattern is a Gauss diagram whose chords carry labels and optional sign
// constraints. pairing(A, D) counts the subdiagrams of D that are copies of
// each pattern of A, weighting each copy by the product of the signs of its
// unconstrained chords.

#pragma once

#include <bit>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_diagram.hpp"
#include "vknot/invariant.hpp"

namespace vknot {

class ArrowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SignConstraint : std::uint8_t { free, plus, minus };

struct PatternEndpoint {
  std::string label;
  Role role = Role::tail;
};

class ArrowPattern {
 public:
  // Throws ArrowError unless every label has exactly one tail and one head.
  ArrowPattern(Kind kind, std::vector<PatternEndpoint> endpoints,
               std::map<std::string, SignConstraint> signs = {});

  Kind kind() const { return kind_; }
  int chord_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<PatternEndpoint>& endpoints() const { return endpoints_; }
  // Labels in order of first appearance.
  const std::vector<std::string>& labels() const { return labels_; }
  SignConstraint constraint(const std::string& label) const;

  // Label index (into labels()) of each endpoint.
  const std::vector<int>& endpoint_labels() const { return endpoint_label_; }

 private:
  Kind kind_;
  std::vector<PatternEndpoint> endpoints_;
  std::map<std::string, SignConstraint> signs_;
  std::vector<std::string> labels_;
  std::vector<int> endpoint_label_;
};

// Pattern label -> diagram chord id, one per matched subdiagram.
struct Matching {
  std::map<std::string, int> chord_of;
  long long weight = 1;
};

struct ArrowTerm {
  long long coeff = 0;
  ArrowPattern pattern;
};

struct ArrowPolynomial {
  Kind kind = Kind::long_knot;
  std::vector<ArrowTerm> terms;

  int degree() const;  // largest pattern chord count (0 if no terms)
};

// One matching per subdiagram of D isomorphic to p (respecting roles, signs
// constraints and the linear or cyclic order). Throws ArrowError on a kind
// mismatch.
std::vector<Matching> embeddings(const ArrowPattern& p, const GaussDiagram& d);

long long pairing(const ArrowPolynomial& a, const GaussDiagram& d);

// All 2^n chord subsets of d (bit i of the index keeps chord i).
std::vector<GaussDiagram> subdiagram_expand(const GaussDiagram& d, int cap = 16);

// The two built-in degree-2 long-knot invariants.
const ArrowPattern& v21_pattern();
const ArrowPattern& v22_pattern();
long long v21(const GaussDiagram& d);
long long v22(const GaussDiagram& d);
IntInvariant v21_invariant();
IntInvariant v22_invariant();
IntInvariant polynomial_invariant(const ArrowPolynomial& a, const std::string& name);

// JSON form: {"kind": "long"|"closed", "terms": [{"coeff": int,
//   "endpoints": [["1","t"], ...], "signs": {"1": "free"|"+"|"-"}}]}
ArrowPolynomial load_arrow_polynomial(std::string_view json_text);
ArrowPolynomial read_arrow_polynomial(const std::string& path);

// Sum over subsets V of `chords` of (-1)^|V| v(D with V deleted). Throws
// DiagramError for an unknown or repeated id.
template <class V>
V gpv_alt_sum(const Invariant<V>& v, const GaussDiagram& d, const std::vector<int>& chords) {
  for (size_t i = 0; i < chords.size(); ++i) {
    d.require_index(chords[i]);
    for (size_t j = 0; j < i; ++j)
      if (chords[j] == chords[i]) throw DiagramError("chord " + std::to_string(chords[i]) + " listed twice");
  }
  V total{};
  const size_t n = chords.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<Letter> w;
    for (const Letter& l : d.word()) {
      bool drop = false;
      for (size_t k = 0; k < n; ++k) drop |= (mask >> k & 1u) && chords[k] == l.id;
      if (!drop) w.push_back(l);
    }
    const V value = v(GaussDiagram::from_word(d.kind(), std::move(w)));
    if (std::popcount(mask) % 2)
      total -= value;
    else
      total += value;
  }
  return total;
}

}  // namespace vknot
