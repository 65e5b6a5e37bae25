#include "vknot/arrow.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace vknot {

ArrowPattern::ArrowPattern(Kind kind, std::vector<PatternEndpoint> endpoints,
                           std::map<std::string, SignConstraint> signs)
    : kind_(kind), endpoints_(std::move(endpoints)), signs_(std::move(signs)) {
  std::map<std::string, std::pair<int, int>> seen;  // label -> (tails, heads)
  for (const PatternEndpoint& e : endpoints_) {
    auto [it, fresh] = seen.try_emplace(e.label, 0, 0);
    if (fresh) labels_.push_back(e.label);
    int& count = e.role == Role::tail ? it->second.first : it->second.second;
    if (++count > 1)
      throw ArrowError("pattern label '" + e.label + "' appears twice as " +
                       (e.role == Role::tail ? "tail" : "head"));
    endpoint_label_.push_back(
        static_cast<int>(std::find(labels_.begin(), labels_.end(), e.label) - labels_.begin()));
  }
  for (const auto& [label, counts] : seen)
    if (counts.first != 1 || counts.second != 1)
      throw ArrowError("pattern label '" + label + "' needs one tail and one head");
  for (const auto& [label, c] : signs_)
    if (!seen.contains(label)) throw ArrowError("sign given for unknown pattern label '" + label + "'");
}

SignConstraint ArrowPattern::constraint(const std::string& label) const {
  auto it = signs_.find(label);
  return it == signs_.end() ? SignConstraint::free : it->second;
}

int ArrowPolynomial::degree() const {
  int d = 0;
  for (const ArrowTerm& t : terms) d = std::max(d, t.pattern.chord_count());
  return d;
}

namespace {

class Embedder {
 public:
  Embedder(const ArrowPattern& p, const GaussDiagram& d) : p_(p), d_(d) {
    const int k = p.chord_count();
    assigned_.assign(k, -1);
    used_.assign(d.size(), false);
    for (int l = 0; l < k; ++l) constraint_.push_back(p.constraint(p.labels()[l]));
  }

  std::vector<Matching> run() {
    const int m = d_.slot_count();
    const int len = static_cast<int>(p_.endpoints().size());
    if (len == 0) {
      record();
      return std::move(out_);
    }
    if (len > m) return {};
    if (d_.is_long()) {
      origin_ = 0;
      extend(0, -1);
    } else {
      for (int s0 = 0; s0 < m; ++s0) {
        origin_ = s0;
        extend(0, -1);
      }
    }
    return std::move(out_);
  }

 private:
  int offset(int slot) const {
    const int m = d_.slot_count();
    return (slot - origin_ + m) % m;
  }

  bool sign_ok(int label, int chord) const {
    const int s = d_.chord(chord).sign;
    switch (constraint_[label]) {
      case SignConstraint::plus: return s > 0;
      case SignConstraint::minus: return s < 0;
      case SignConstraint::free: return true;
    }
    return false;
  }

  void extend(int i, int prev) {
    const int len = static_cast<int>(p_.endpoints().size());
    if (i == len) {
      record();
      return;
    }
    const Role role = p_.endpoints()[i].role;
    const int label = p_.endpoint_labels()[i];
    if (assigned_[label] >= 0) {
      const int off = offset(d_.chord(assigned_[label]).slot(role));
      if (off > prev) extend(i + 1, off);
      return;
    }
    const int m = d_.slot_count();
    // Closed diagrams pin the first pattern endpoint at the origin.
    const int lo = prev + 1;
    const int hi = (!d_.is_long() && i == 0) ? 0 : m - (len - i);
    for (int off = lo; off <= hi; ++off) {
      const int slot = (origin_ + off) % m;
      const Endpoint& ep = d_.at(slot);
      if (ep.role != role || used_[ep.chord] || !sign_ok(label, ep.chord)) continue;
      if (offset(d_.chord(ep.chord).slot(opposite(role))) <= off) continue;
      assigned_[label] = ep.chord;
      used_[ep.chord] = true;
      extend(i + 1, off);
      used_[ep.chord] = false;
      assigned_[label] = -1;
    }
  }

  void record() {
    std::vector<int> image;
    for (int c : assigned_) image.push_back(d_.chord(c).id);
    std::sort(image.begin(), image.end());
    if (!images_.insert(image).second) return;
    Matching mt;
    for (size_t l = 0; l < assigned_.size(); ++l) {
      const Chord& c = d_.chord(assigned_[l]);
      mt.chord_of[p_.labels()[l]] = c.id;
      if (constraint_[l] == SignConstraint::free) mt.weight *= c.sign;
    }
    out_.push_back(std::move(mt));
  }

  const ArrowPattern& p_;
  const GaussDiagram& d_;
  std::vector<SignConstraint> constraint_;
  std::vector<int> assigned_;
  std::vector<bool> used_;
  int origin_ = 0;
  std::set<std::vector<int>> images_;
  std::vector<Matching> out_;
};

}  // namespace

std::vector<Matching> embeddings(const ArrowPattern& p, const GaussDiagram& d) {
  if (p.kind() != d.kind())
    throw ArrowError("pattern is " + to_string(p.kind()) + " but diagram is " + to_string(d.kind()));
  return Embedder(p, d).run();
}

long long pairing(const ArrowPolynomial& a, const GaussDiagram& d) {
  if (a.kind != d.kind())
    throw ArrowError("polynomial is " + to_string(a.kind) + " but diagram is " + to_string(d.kind()));
  long long total = 0;
  for (const ArrowTerm& t : a.terms) {
    long long s = 0;
    for (const Matching& mt : embeddings(t.pattern, d)) s += mt.weight;
    total += t.coeff * s;
  }
  return total;
}

std::vector<GaussDiagram> subdiagram_expand(const GaussDiagram& d, int cap) {
  const int n = d.size();
  if (n > cap)
    throw ArrowError("subdiagram expansion of " + std::to_string(n) + " chords exceeds cap " + std::to_string(cap));
  std::vector<GaussDiagram> out;
  out.reserve(size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Letter> w;
    for (int s = 0; s < d.slot_count(); ++s)
      if (mask >> d.at(s).chord & 1u) w.push_back(d.word()[s]);
    out.push_back(GaussDiagram::from_word(d.kind(), std::move(w)));
  }
  return out;
}

namespace {

ArrowPattern two_chord_pattern(std::initializer_list<PatternEndpoint> eps) {
  return ArrowPattern(Kind::long_knot, std::vector<PatternEndpoint>(eps));
}

}  // namespace

// Arrows 1 -> 3 and 4 -> 2 on the line.
const ArrowPattern& v21_pattern() {
  static const ArrowPattern p = two_chord_pattern(
      {{"1", Role::tail}, {"2", Role::head}, {"1", Role::head}, {"2", Role::tail}});
  return p;
}

// Arrows 3 -> 1 and 2 -> 4 on the line.
const ArrowPattern& v22_pattern() {
  static const ArrowPattern p = two_chord_pattern(
      {{"1", Role::head}, {"2", Role::tail}, {"1", Role::tail}, {"2", Role::head}});
  return p;
}

namespace {

long long single_pattern_sum(const ArrowPattern& p, const GaussDiagram& d, const char* name) {
  if (!d.is_long()) throw ArrowError(std::string(name) + " needs a long diagram");
  long long s = 0;
  for (const Matching& mt : embeddings(p, d)) s += mt.weight;
  return s;
}

}  // namespace

long long v21(const GaussDiagram& d) { return single_pattern_sum(v21_pattern(), d, "v21"); }
long long v22(const GaussDiagram& d) { return single_pattern_sum(v22_pattern(), d, "v22"); }

IntInvariant v21_invariant() { return {"v21", [](const GaussDiagram& d) { return v21(d); }, Kind::long_knot}; }
IntInvariant v22_invariant() { return {"v22", [](const GaussDiagram& d) { return v22(d); }, Kind::long_knot}; }

IntInvariant polynomial_invariant(const ArrowPolynomial& a, const std::string& name) {
  return {name, [a](const GaussDiagram& d) { return pairing(a, d); }, a.kind};
}

// --- JSON ---------------------------------------------------------------

namespace {

using nlohmann::json;

Kind parse_kind(const json& j, const std::string& where) {
  if (!j.is_string()) throw ArrowError(where + ": kind must be a string");
  const auto s = j.get<std::string>();
  if (s == "long") return Kind::long_knot;
  if (s == "closed") return Kind::closed;
  throw ArrowError(where + ": kind must be \"long\" or \"closed\", got \"" + s + "\"");
}

std::string label_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ArrowError(where + ": chord label must be a string or integer");
}

}  // namespace

ArrowPolynomial load_arrow_polynomial(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ArrowError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ArrowError("arrow polynomial must be a JSON object");
  if (!doc.contains("kind")) throw ArrowError("missing \"kind\"");
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw ArrowError("missing \"terms\" array");
  ArrowPolynomial poly;
  poly.kind = parse_kind(doc["kind"], "polynomial");
  int index = 0;
  for (const json& t : doc["terms"]) {
    const std::string where = "term " + std::to_string(index++);
    if (!t.is_object()) throw ArrowError(where + ": must be an object");
    if (t.contains("kind") && parse_kind(t["kind"], where) != poly.kind)
      throw ArrowError(where + ": kind differs from the polynomial's kind");
    if (!t.contains("coeff") || !t["coeff"].is_number_integer())
      throw ArrowError(where + ": \"coeff\" must be an integer");
    if (!t.contains("endpoints") || !t["endpoints"].is_array())
      throw ArrowError(where + ": \"endpoints\" must be an array");
    std::vector<PatternEndpoint> eps;
    for (const json& e : t["endpoints"]) {
      if (!e.is_array() || e.size() != 2 || !e[1].is_string())
        throw ArrowError(where + ": endpoint must be [label, \"t\"|\"h\"]");
      const auto role = e[1].get<std::string>();
      if (role != "t" && role != "h") throw ArrowError(where + ": endpoint role must be \"t\" or \"h\"");
      eps.push_back({label_of(e[0], where), role == "t" ? Role::tail : Role::head});
    }
    std::map<std::string, SignConstraint> signs;
    if (t.contains("signs")) {
      if (!t["signs"].is_object()) throw ArrowError(where + ": \"signs\" must be an object");
      for (const auto& [label, v] : t["signs"].items()) {
        const std::string s = v.is_string() ? v.get<std::string>() : "";
        if (s == "free")
          signs[label] = SignConstraint::free;
        else if (s == "+")
          signs[label] = SignConstraint::plus;
        else if (s == "-")
          signs[label] = SignConstraint::minus;
        else
          throw ArrowError(where + ": sign of label '" + label + "' must be \"free\", \"+\" or \"-\"");
      }
    }
    try {
      poly.terms.push_back({t["coeff"].get<long long>(), ArrowPattern(poly.kind, std::move(eps), std::move(signs))});
    } catch (const ArrowError& e) {
      throw ArrowError(where + ": " + e.what());
    }
  }
  return poly;
}

ArrowPolynomial read_arrow_polynomial(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArrowError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_arrow_polynomial(ss.str());
}

}  // namespace vknot
