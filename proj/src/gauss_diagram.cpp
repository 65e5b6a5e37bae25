#include "vknot/gauss_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace vknot {

std::string to_string(Kind k) { return k == Kind::closed ? "closed" : "long"; }

GaussDiagram GaussDiagram::from_word(Kind kind, std::vector<Letter> word) {
  GaussDiagram d(kind);
  std::unordered_map<int, int> index;
  for (int slot = 0; slot < static_cast<int>(word.size()); ++slot) {
    const Letter& l = word[slot];
    if (l.sign != 1 && l.sign != -1)
      throw DiagramError("chord " + std::to_string(l.id) + " has sign " + std::to_string(l.sign));
    auto [it, fresh] = index.try_emplace(l.id, static_cast<int>(d.chords_.size()));
    if (fresh) {
      d.chords_.push_back(Chord{l.id, -1, -1, l.sign});
    }
    Chord& c = d.chords_[it->second];
    int& s = l.role == Role::tail ? c.tail : c.head;
    if (s != -1)
      throw DiagramError("chord " + std::to_string(l.id) + " has two " +
                         (l.role == Role::tail ? "tails" : "heads"));
    if (c.sign != l.sign)
      throw DiagramError("chord " + std::to_string(l.id) + " has inconsistent signs");
    s = slot;
    d.slots_.push_back(Endpoint{it->second, l.role});
  }
  for (const Chord& c : d.chords_) {
    if (c.tail < 0 || c.head < 0)
      throw DiagramError("chord " + std::to_string(c.id) + " is missing an endpoint");
  }
  d.word_ = std::move(word);
  return d;
}

std::optional<int> GaussDiagram::index_of(int id) const {
  for (int i = 0; i < size(); ++i)
    if (chords_[i].id == id) return i;
  return std::nullopt;
}

int GaussDiagram::require_index(int id) const {
  auto i = index_of(id);
  if (!i) throw DiagramError("unknown chord id " + std::to_string(id));
  return *i;
}

int GaussDiagram::max_id() const {
  int m = 0;
  for (const Chord& c : chords_) m = std::max(m, c.id);
  return m;
}

int GaussDiagram::writhe() const {
  int w = 0;
  for (const Chord& c : chords_) w += c.sign;
  return w;
}

int GaussDiagram::next_slot(int slot) const {
  const int m = slot_count();
  if (slot + 1 < m) return slot + 1;
  return is_long() || m == 0 ? -1 : 0;
}

int GaussDiagram::prev_slot(int slot) const {
  if (slot > 0) return slot - 1;
  return is_long() || slot_count() == 0 ? -1 : slot_count() - 1;
}

GaussDiagram GaussDiagram::with_kind(Kind k) const {
  GaussDiagram d = *this;
  d.kind_ = k;
  return d;
}

namespace {

void append_token(std::string& out, const Letter& l) {
  if (!out.empty()) out += ' ';
  out += l.role == Role::tail ? 'O' : 'U';
  out += std::to_string(l.id);
  out += l.sign > 0 ? '+' : '-';
}

std::vector<Letter> relabel_from(std::span<const Letter> word, int start) {
  std::unordered_map<int, int> fresh;
  std::vector<Letter> out;
  out.reserve(word.size());
  const int m = static_cast<int>(word.size());
  for (int k = 0; k < m; ++k) {
    Letter l = word[(start + k) % m];
    auto [it, inserted] = fresh.try_emplace(l.id, static_cast<int>(fresh.size()) + 1);
    l.id = it->second;
    out.push_back(l);
  }
  return out;
}

std::string spell(std::span<const Letter> word) {
  std::string s;
  for (const Letter& l : word) append_token(s, l);
  return s;
}

}  // namespace

std::string GaussDiagram::code() const { return spell(word_); }

GaussDiagram GaussDiagram::relabeled() const {
  return from_word(kind_, relabel_from(word_, 0));
}

std::string GaussDiagram::canonical_code() const {
  if (!is_long() && !word_.empty()) {
    std::string best;
    for (int start = 0; start < slot_count(); ++start) {
      std::string s = spell(relabel_from(word_, start));
      if (start == 0 || s < best) best = std::move(s);
    }
    return best;
  }
  return spell(relabel_from(word_, 0));
}

bool equivalent_up_to_relabeling(const GaussDiagram& a, const GaussDiagram& b) {
  return a.kind() == b.kind() && a.size() == b.size() && a.canonical_code() == b.canonical_code();
}

// --- parsing ---------------------------------------------------------------

namespace {

Letter parse_token(std::string_view tok) {
  auto bad = [&](const std::string& why) {
    return ParseError(ParseErrorCode::bad_token, std::string(tok),
                      "bad token '" + std::string(tok) + "': " + why);
  };
  if (tok.size() < 3) throw bad("expected (O|U)<label><+|->");
  Letter l;
  const char r = tok.front();
  if (r == 'O' || r == 'o')
    l.role = Role::tail;
  else if (r == 'U' || r == 'u')
    l.role = Role::head;
  else
    throw bad("must start with O or U");
  const char s = tok.back();
  if (s == '+')
    l.sign = 1;
  else if (s == '-')
    l.sign = -1;
  else
    throw bad("must end with + or -");
  std::string_view digits = tok.substr(1, tok.size() - 2);
  if (digits.empty() || digits.size() > 9 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw bad("label must be a non-negative integer");
  l.id = std::stoi(std::string(digits));
  return l;
}

}  // namespace

GaussDiagram parse_gauss_code(std::string_view text, Kind kind) {
  std::vector<Letter> word;
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
      flush();
    else
      cur += c;
  }
  flush();

  struct Seen {
    int tail_token = -1;
    int head_token = -1;
    int sign = 0;
  };
  std::map<int, Seen> seen;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    Letter l = parse_token(tokens[i]);
    Seen& s = seen[l.id];
    int& slot = l.role == Role::tail ? s.tail_token : s.head_token;
    if (slot != -1)
      throw ParseError(ParseErrorCode::duplicate_role, tokens[i],
                       "duplicate " + std::string(l.role == Role::tail ? "O" : "U") + " for label " +
                           std::to_string(l.id) + " at token '" + tokens[i] + "'");
    if (s.sign != 0 && s.sign != l.sign)
      throw ParseError(ParseErrorCode::sign_mismatch, tokens[i],
                       "sign mismatch on label " + std::to_string(l.id) + " at token '" + tokens[i] + "'");
    slot = i;
    s.sign = l.sign;
    word.push_back(l);
  }
  for (const auto& [id, s] : seen) {
    if (s.tail_token == -1 || s.head_token == -1) {
      const std::string& tok = tokens[s.tail_token != -1 ? s.tail_token : s.head_token];
      throw ParseError(ParseErrorCode::unpaired_label, tok,
                       "unpaired label " + std::to_string(id) + " at token '" + tok + "'");
    }
  }
  return GaussDiagram::from_word(kind, std::move(word));
}

std::vector<DiagramEntry> parse_diagram_file(std::string_view text) {
  std::vector<DiagramEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view body = line;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.empty()) continue;
    Kind kind = Kind::closed;
    if (body.starts_with("long:")) {
      kind = Kind::long_knot;
      body.remove_prefix(5);
    } else if (body.starts_with("closed:")) {
      body.remove_prefix(7);
    }
    try {
      out.push_back({lineno, parse_gauss_code(body, kind)});
    } catch (const ParseError& e) {
      throw ParseError(e.code(), e.token(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<DiagramEntry> read_diagram_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_diagram_file(ss.str());
}

}  // namespace vknot
