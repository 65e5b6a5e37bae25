// Four-strand braid words with real and virtual crossings, the commutator
// family b(k) and closures to Gauss diagrams.
//
// Strands run downward. Letter s_p (p in 1..3) exchanges positions p and
// p+1 with a positive crossing, S_p with a negative one, v_p virtually.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_diagram.hpp"

namespace vknot {

inline constexpr int kStrands = 4;

class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CrossingType : std::uint8_t { real_pos, real_neg, virt };

struct BraidLetter {
  int position = 1;  // 1..3
  CrossingType type = CrossingType::real_pos;

  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  std::vector<BraidLetter> letters;
  std::string name;

  int size() const { return static_cast<int>(letters.size()); }
  int real_count() const;
  bool operator==(const BraidWord& o) const { return letters == o.letters; }
};

// Whitespace-separated letters s1..s3, S1..S3, v1..v3.
BraidWord parse_braid(std::string_view text);
std::string to_string(const BraidWord& w);

BraidWord inverse(const BraidWord& w);
BraidWord product(const BraidWord& u, const BraidWord& v);
BraidWord commutator(const BraidWord& u, const BraidWord& v);  // u v u^-1 v^-1
// Cancels adjacent s_p S_p, S_p s_p and v_p v_p until none remain.
BraidWord free_reduce(const BraidWord& w);

// Position (0-based) at the bottom of the strand entering at top position i.
std::vector<int> strand_permutation(const BraidWord& w);

struct GeneratorDef {
  BraidWord a;
  BraidWord b;
};

// {"A": "<word>", "B": "<word>"}
GeneratorDef load_generators(std::string_view json_text);
GeneratorDef read_generators(const std::string& path);

// b(1) = A, b(2) = [B, b(1)], and for u >= 1: b(4u-1) = [B, b(4u-2)],
// b(4u) = [A, b(4u-1)], b(4u+1) = [A, b(4u)], b(4u+2) = [B, b(4u+1)].
BraidWord b_family(int k, const GeneratorDef& defs);
// Generator used at step k >= 2 of the recursion ('A' or 'B').
char b_family_generator(int k);

// The bottom of position j is joined to the top of position j-1 (mod 4) by
// an arc that crosses everything virtually. Real letters become chords
// numbered by their index in the word (1-based among real letters).
// Throws BraidError when the result has more than one component.
GaussDiagram closure(const BraidWord& w);

// Ordinary closure on the first `strands` strands (top i joined to bottom
// i), as for classical braids. Letters must act on those strands only.
GaussDiagram standard_closure(const BraidWord& w, int strands);

struct ScanRow {
  int k = 0;
  int word_length = 0;
  int chords = 0;
  bool skipped = false;
  std::string skip_reason;
  bool nontrivial = false;
  int witness_i = 0;
  int witness_j = 0;
  int certificate_hits = 0;  // states passing switch_check whose j0 has |j0| != 1
};

// Rows for k in [k_first, k_last]; closures with more than `cap` chords are
// marked skipped.
std::vector<ScanRow> scan_family(int k_first, int k_last, const GeneratorDef& defs, int cap);

}  // namespace vknot
