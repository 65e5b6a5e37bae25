// Gauss diagrams of virtual knots and long virtual knots.
//
// A diagram is a based circle (closed) or a line (long) carrying 2n endpoints
// of n signed, directed chords. The tail of a chord is the over-passage of the
// crossing, the head is the under-passage. Endpoints are stored as a flat slot
// array so that adjacency queries are O(1).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

enum class Kind : std::uint8_t { closed, long_knot };

enum class Role : std::uint8_t { tail, head };

inline Role opposite(Role r) { return r == Role::tail ? Role::head : Role::tail; }

std::string to_string(Kind k);

struct Chord {
  int id = 0;
  int tail = 0;  // slot of the over-passage
  int head = 0;  // slot of the under-passage
  int sign = 1;  // +1 or -1

  int slot(Role r) const { return r == Role::tail ? tail : head; }
};

// One entry of the slot array.
struct Endpoint {
  int chord = 0;  // index into GaussDiagram::chords()
  Role role = Role::tail;
};

// Letter of a Gauss word: the endpoint at one slot, spelled by chord id.
struct Letter {
  int id = 0;
  Role role = Role::tail;
  int sign = 1;

  bool operator==(const Letter&) const = default;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GaussDiagram {
 public:
  GaussDiagram() = default;
  explicit GaussDiagram(Kind kind) : kind_(kind) {}

  // Validates the word: every id appears once as tail and once as head with
  // equal signs. Throws DiagramError otherwise.
  static GaussDiagram from_word(Kind kind, std::vector<Letter> word);

  Kind kind() const { return kind_; }
  bool is_long() const { return kind_ == Kind::long_knot; }
  bool empty() const { return chords_.empty(); }
  int size() const { return static_cast<int>(chords_.size()); }
  int slot_count() const { return static_cast<int>(slots_.size()); }

  std::span<const Chord> chords() const { return chords_; }
  const Chord& chord(int index) const { return chords_[index]; }
  const Endpoint& at(int slot) const { return slots_[slot]; }
  std::span<const Letter> word() const { return word_; }

  std::optional<int> index_of(int id) const;
  // Throws DiagramError naming the id when absent.
  int require_index(int id) const;
  int max_id() const;
  int writhe() const;

  // Slot after / before `slot`, or -1 when the line ends (long diagrams).
  int next_slot(int slot) const;
  int prev_slot(int slot) const;
  // True when slot b immediately follows slot a (cyclically for closed).
  bool follows(int a, int b) const { return next_slot(a) == b; }

  GaussDiagram with_kind(Kind k) const;

  // Token form with the stored ids, e.g. "O1+ U2+ O3+ U1+ O2+ U3+".
  std::string code() const;
  // Ids renumbered 1..n by first appearance; closed diagrams are additionally
  // rotated to the lexicographically smallest such code.
  std::string canonical_code() const;
  // Same diagram after relabeling ids 1..n by first appearance (no rotation).
  GaussDiagram relabeled() const;

  bool operator==(const GaussDiagram& other) const {
    return kind_ == other.kind_ && word_ == other.word_;
  }

 private:
  Kind kind_ = Kind::closed;
  std::vector<Letter> word_;
  std::vector<Chord> chords_;
  std::vector<Endpoint> slots_;
};

// Equality up to chord relabeling (and rotation, for closed diagrams).
bool equivalent_up_to_relabeling(const GaussDiagram& a, const GaussDiagram& b);

// --- text forms -----------------------------------------------------------

enum class ParseErrorCode {
  bad_token,
  duplicate_role,
  sign_mismatch,
  unpaired_label,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, std::string token, const std::string& what)
      : std::runtime_error(what), code_(code), token_(std::move(token)) {}
  ParseErrorCode code() const { return code_; }
  const std::string& token() const { return token_; }

 private:
  ParseErrorCode code_;
  std::string token_;
};

// Tokens are (O|U)<label><+|-> separated by whitespace and/or commas.
GaussDiagram parse_gauss_code(std::string_view text, Kind kind);

struct DiagramEntry {
  int line = 0;
  GaussDiagram diagram;
};

// One code per line, '#' starts a comment, optional "long:" / "closed:"
// prefix (default closed). A prefix with nothing after it is the empty
// diagram; blank lines are skipped.
std::vector<DiagramEntry> parse_diagram_file(std::string_view text);
std::vector<DiagramEntry> read_diagram_file(const std::string& path);

}  // namespace vknot
