#include "vknot/braid.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vknot/khovanov.hpp"

namespace vknot {

int BraidWord::real_count() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                        [](const BraidLetter& l) { return l.type != CrossingType::virt; }));
}

BraidWord parse_braid(std::string_view text) {
  BraidWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 2 || tok[1] < '1' || tok[1] > '3')
      throw BraidError("bad braid letter '" + tok + "' (expected s1..s3, S1..S3 or v1..v3)");
    BraidLetter l;
    l.position = tok[1] - '0';
    switch (tok[0]) {
      case 's': l.type = CrossingType::real_pos; break;
      case 'S': l.type = CrossingType::real_neg; break;
      case 'v': l.type = CrossingType::virt; break;
      default: throw BraidError("bad braid letter '" + tok + "' (expected s1..s3, S1..S3 or v1..v3)");
    }
    w.letters.push_back(l);
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const BraidLetter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l.type == CrossingType::real_pos ? 's' : l.type == CrossingType::real_neg ? 'S' : 'v';
    out += static_cast<char>('0' + l.position);
  }
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    BraidLetter l = *it;
    if (l.type == CrossingType::real_pos)
      l.type = CrossingType::real_neg;
    else if (l.type == CrossingType::real_neg)
      l.type = CrossingType::real_pos;
    out.letters.push_back(l);
  }
  return out;
}

BraidWord product(const BraidWord& u, const BraidWord& v) {
  BraidWord out = u;
  out.name.clear();
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

BraidWord commutator(const BraidWord& u, const BraidWord& v) {
  return product(product(product(u, v), inverse(u)), inverse(v));
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (const BraidLetter& l : w.letters) {
    if (!out.letters.empty()) {
      const BraidLetter& top = out.letters.back();
      const bool cancels =
          top.position == l.position &&
          ((top.type == CrossingType::virt && l.type == CrossingType::virt) ||
           (top.type == CrossingType::real_pos && l.type == CrossingType::real_neg) ||
           (top.type == CrossingType::real_neg && l.type == CrossingType::real_pos));
      if (cancels) {
        out.letters.pop_back();
        continue;
      }
    }
    out.letters.push_back(l);
  }
  return out;
}

std::vector<int> strand_permutation(const BraidWord& w) {
  std::vector<int> at(kStrands);  // at[position] = strand
  for (int i = 0; i < kStrands; ++i) at[i] = i;
  for (const BraidLetter& l : w.letters) std::swap(at[l.position - 1], at[l.position]);
  std::vector<int> perm(kStrands);
  for (int pos = 0; pos < kStrands; ++pos) perm[at[pos]] = pos;
  return perm;
}

namespace {

BraidWord word_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string())
    throw BraidError(std::string("generator file needs a \"") + key + "\" word");
  BraidWord w = parse_braid(doc[key].get<std::string>());
  w.name = key;
  return w;
}

}  // namespace

GeneratorDef load_generators(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw BraidError(std::string("malformed generator JSON: ") + e.what());
  }
  if (!doc.is_object()) throw BraidError("generator file must be a JSON object");
  return {word_field(doc, "A"), word_field(doc, "B")};
}

GeneratorDef read_generators(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw BraidError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_generators(ss.str());
}

char b_family_generator(int k) {
  if (k < 2) throw BraidError("the recursion starts at k = 2");
  if (k == 2) return 'B';
  switch (k % 4) {
    case 3: return 'B';  // 4u - 1
    case 0: return 'A';  // 4u
    case 1: return 'A';  // 4u + 1
    default: return 'B'; // 4u + 2
  }
}

BraidWord b_family(int k, const GeneratorDef& defs) {
  if (k < 1) throw BraidError("b(k) needs k >= 1");
  BraidWord w = defs.a;
  for (int step = 2; step <= k; ++step) w = commutator(b_family_generator(step) == 'A' ? defs.a : defs.b, w);
  w.name = "b(" + std::to_string(k) + ")";
  return w;
}

namespace {

// Gauss word of the closure whose return arcs send bottom position j to top
// position next_top(j).
template <class NextTop>
GaussDiagram close_up(const BraidWord& w, int strands, NextTop next_top) {
  std::vector<int> perm = strand_permutation(w);
  std::vector<int> order;
  std::vector<bool> seen(strands, false);
  for (int top = 0; !seen[top]; top = next_top(perm[top])) {
    seen[top] = true;
    order.push_back(top);
  }
  if (static_cast<int>(order.size()) != strands)
    throw BraidError("closure of '" + to_string(w) + "' has more than one component");

  std::vector<int> chord_of_letter(w.letters.size(), 0);
  int next_id = 0;
  for (size_t k = 0; k < w.letters.size(); ++k)
    if (w.letters[k].type != CrossingType::virt) chord_of_letter[k] = ++next_id;

  std::vector<Letter> word;
  for (int start : order) {
    int pos = start;
    for (size_t k = 0; k < w.letters.size(); ++k) {
      const BraidLetter& l = w.letters[k];
      const int left = l.position - 1, right = l.position;
      if (pos != left && pos != right) continue;
      const bool from_left = pos == left;
      pos = from_left ? right : left;
      if (l.type == CrossingType::virt) continue;
      // Moving downward, a positive crossing has the strand coming from the
      // right on top.
      const bool over = l.type == CrossingType::real_pos ? !from_left : from_left;
      const int sign = l.type == CrossingType::real_pos ? 1 : -1;
      word.push_back({chord_of_letter[k], over ? Role::tail : Role::head, sign});
    }
  }
  return GaussDiagram::from_word(Kind::closed, std::move(word));
}

}  // namespace

GaussDiagram closure(const BraidWord& w) {
  return close_up(w, kStrands, [](int bottom) { return (bottom + kStrands - 1) % kStrands; });
}

GaussDiagram standard_closure(const BraidWord& w, int strands) {
  if (strands < 1 || strands > kStrands) throw BraidError("strand count must be in 1..4");
  for (const BraidLetter& l : w.letters)
    if (l.position >= strands) throw BraidError("letter acts outside the first " + std::to_string(strands) + " strands");
  return close_up(w, strands, [](int bottom) { return bottom; });
}

std::vector<ScanRow> scan_family(int k_first, int k_last, const GeneratorDef& defs, int cap) {
  if (k_first < 1 || k_last < k_first) throw BraidError("scan range must satisfy 1 <= first <= last");
  std::vector<ScanRow> rows;
  const long long max_letters = 1LL << 22;
  long long len = defs.a.size();
  for (int k = k_first; k <= k_last; ++k) {
    ScanRow row;
    row.k = k;
    // Length follows |b(k)| = 2(|gen| + |b(k-1)|); avoid building huge words.
    len = defs.a.size();
    for (int s = 2; s <= k && len <= max_letters; ++s)
      len = 2 * ((b_family_generator(s) == 'A' ? defs.a.size() : defs.b.size()) + len);
    if (len > max_letters) {
      row.word_length = -1;
      row.skipped = true;
      row.skip_reason = "word too long";
      rows.push_back(row);
      continue;
    }
    const BraidWord w = b_family(k, defs);
    row.word_length = w.size();
    row.chords = w.real_count();
    if (row.chords > cap) {
      row.skipped = true;
      row.skip_reason = "chord count exceeds cap";
      rows.push_back(row);
      continue;
    }
    GaussDiagram d;
    try {
      d = closure(w);
    } catch (const BraidError& e) {
      row.skipped = true;
      row.skip_reason = e.what();
      rows.push_back(row);
      continue;
    }
    const UnknotDistinction u = distinguish_from_unknot(d, cap);
    row.nontrivial = u.nontrivial;
    row.witness_i = u.i;
    row.witness_j = u.j;
    for (std::uint32_t mask = 0; mask < (1u << d.size()); ++mask) {
      const StateVec s = markers_of(d, mask);
      if (!switch_check(d, s)) continue;
      const int i = (d.writhe() - (d.size() - 2 * std::popcount(mask))) / 2;
      const int j0 = d.writhe() + i + trace_circles(d, s).count;
      if (std::abs(j0) != 1) ++row.certificate_hits;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace vknot
