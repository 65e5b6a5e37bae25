// vknot: command-line front end for the virtual knot toolkit.
//
// Exit status: 0 success, 1 input error, 2 cap or budget exhausted (the
// partial report is still printed), 3 selftest criteria failed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vknot/arrow.hpp"
#include "vknot/braid.hpp"
#include "vknot/forbidden.hpp"
#include "vknot/gauss_diagram.hpp"
#include "vknot/khovanov.hpp"
#include "vknot/selftest.hpp"

using nlohmann::json;
using namespace vknot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitSelftest = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::optional<std::string> code;
  std::string format = "json";
  int cap = kDefaultHomologyCap;
  long budget = -1;
  std::uint64_t seed = kDefaultSeed;
  std::string arrow_poly;
  std::string families;
  std::string gens;
  std::string invariant = "v21";
  std::vector<int> chords;
  std::vector<int> slots;
  std::string word;
  int k = -1;
  int k_first = 1;
  int k_last = -1;
  bool want_v21 = false, want_v22 = false, want_bracket = false, want_jones = false;
};

json poly_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [c, e] : coefficient_pairs(p)) out.push_back({c, e});
  return out;
}

std::string marker_string(const StateVec& s) {
  std::string out;
  for (int m : s) out += m > 0 ? '+' : '-';
  return out;
}

json trace_json(const std::vector<MoveEvent>& trace) {
  json out = json::array();
  for (const MoveEvent& e : trace) out.push_back(e.describe());
  return out;
}

std::vector<GaussDiagram> load_inputs(const Config& cfg) {
  std::vector<GaussDiagram> out;
  if (cfg.code) {
    std::string_view text = *cfg.code;
    const auto entries = parse_diagram_file(text);
    if (entries.empty()) {
      // An empty or comment-only code is the unknot.
      out.emplace_back(Kind::closed);
    }
    for (const auto& e : entries) out.push_back(e.diagram);
  }
  if (!cfg.input.empty())
    for (const auto& e : read_diagram_file(cfg.input)) out.push_back(e.diagram);
  if (out.empty()) throw InputError("no diagrams given (use --input PATH or --code TEXT)");
  return out;
}

IntInvariant named_invariant(const Config& cfg) {
  if (!cfg.arrow_poly.empty()) return polynomial_invariant(read_arrow_polynomial(cfg.arrow_poly), cfg.arrow_poly);
  if (cfg.invariant == "v21") return v21_invariant();
  if (cfg.invariant == "v22") return v22_invariant();
  throw InputError("unknown invariant \"" + cfg.invariant + "\" (expected v21 or v22)");
}

// Collects per-diagram reports and the worst exit status.
class Report {
 public:
  explicit Report(const Config& cfg) : table_(cfg.format == "table") {}

  void emit(const json& row, const std::string& text) {
    if (table_)
      std::cout << text;
    else
      std::cout << row.dump() << '\n';
  }
  void cap_hit() { status_ = std::max(status_, kExitCap); }
  int status() const { return status_; }
  bool table() const { return table_; }

 private:
  bool table_;
  int status_ = kExitOk;
};

json skipped(const GaussDiagram& d, const std::string& why) {
  return {{"code", d.code()}, {"kind", to_string(d.kind())}, {"skipped", why}};
}

std::string over_cap(const GaussDiagram& d, int cap) {
  return std::to_string(d.size()) + " chords exceeds cap " + std::to_string(cap);
}

// --- subcommands ---------------------------------------------------------

int run_eval(const Config& cfg) {
  Report rep(cfg);
  const bool all = !(cfg.want_v21 || cfg.want_v22 || cfg.want_bracket || cfg.want_jones || !cfg.arrow_poly.empty());
  std::optional<ArrowPolynomial> poly;
  if (!cfg.arrow_poly.empty()) poly = read_arrow_polynomial(cfg.arrow_poly);
  for (const GaussDiagram& d : load_inputs(cfg)) {
    json row{{"code", d.code()}, {"kind", to_string(d.kind())}, {"writhe", d.writhe()}};
    std::ostringstream text;
    text << (d.code().empty() ? "(empty)" : d.code()) << '\n';
    if (all || cfg.want_bracket || cfg.want_jones) {
      if (d.size() > cfg.cap) {
        row["skipped"] = over_cap(d, cfg.cap);
        text << "  state sums skipped: " << over_cap(d, cfg.cap) << '\n';
        rep.cap_hit();
      } else {
        if (all || cfg.want_bracket) {
          row["bracket"] = poly_json(bracket(d));
          text << "  bracket   " << to_string(bracket(d), "A") << '\n';
        }
        if (all || cfg.want_jones) {
          row["jones_hat"] = poly_json(jones_hat(d));
          text << "  jones_hat " << to_string(jones_hat(d), "q") << '\n';
        }
      }
    }
    // v21/v22 are defined for long diagrams; skip closed ones unless asked.
    if (cfg.want_v21 || (all && d.is_long())) {
      row["v21"] = v21(d);
      text << "  v21       " << v21(d) << '\n';
    }
    if (cfg.want_v22 || (all && d.is_long())) {
      row["v22"] = v22(d);
      text << "  v22       " << v22(d) << '\n';
    }
    if (poly) {
      if (poly->kind != d.kind()) {
        row["arrow_poly_skipped"] = "kind mismatch";
        text << "  pairing   skipped (kind mismatch)\n";
      } else {
        row["arrow_poly"] = pairing(*poly, d);
        text << "  pairing   " << pairing(*poly, d) << '\n';
      }
    }
    if (rep.table() && cfg.want_v21 && !all && !(cfg.want_v22 || cfg.want_bracket || cfg.want_jones || poly))
      text.str(std::to_string(v21(d)) + '\n');
    rep.emit(row, text.str());
  }
  return rep.status();
}

int run_kh(const Config& cfg) {
  Report rep(cfg);
  for (const GaussDiagram& d : load_inputs(cfg)) {
    if (d.size() > cfg.cap) {
      rep.cap_hit();
      rep.emit(skipped(d, over_cap(d, cfg.cap)), d.code() + ": skipped, " + over_cap(d, cfg.cap) + '\n');
      continue;
    }
    const HomologyResult h = khovanov(d, cfg.cap);
    const LaurentPoly jones = jones_hat(d);
    const bool euler_ok = graded_euler(h.homology) == jones;
    json table = json::array();
    std::ostringstream text;
    text << (d.code().empty() ? "(empty)" : d.code()) << "  writhe " << d.writhe() << '\n';
    text << "     i      j    dim\n";
    for (const auto& [ij, dim] : h.homology) {
      table.push_back({{"i", ij.first}, {"j", ij.second}, {"dim", dim}});
      text << std::setw(6) << ij.first << ' ' << std::setw(6) << ij.second << ' ' << std::setw(6) << dim << '\n';
    }
    text << "  jones_hat " << to_string(jones, "q") << "\n  euler check " << (euler_ok ? "ok" : "MISMATCH") << '\n';
    rep.emit({{"code", d.code()},
              {"kind", to_string(d.kind())},
              {"writhe", d.writhe()},
              {"table", table},
              {"jones_hat", poly_json(jones)},
              {"bracket", poly_json(bracket(d))},
              {"euler_check", euler_ok ? "ok" : "mismatch"}},
             text.str());
  }
  return rep.status();
}

int run_gpv_sum(const Config& cfg) {
  Report rep(cfg);
  const IntInvariant v = named_invariant(cfg);
  if (cfg.chords.empty()) throw InputError("--chords is required");
  for (const GaussDiagram& d : load_inputs(cfg)) {
    const long long s = gpv_alt_sum(v, d, cfg.chords);
    rep.emit({{"code", d.code()}, {"invariant", v.name}, {"chords", cfg.chords}, {"value", s}},
             d.code() + "  " + v.name + " alternating sum = " + std::to_string(s) + '\n');
  }
  return rep.status();
}

std::vector<TriangleSite> sites_at(const GaussDiagram& d, const std::vector<int>& slots) {
  const auto all = find_triangles(d);
  std::vector<TriangleSite> out;
  for (int slot : slots) {
    auto it = std::find_if(all.begin(), all.end(), [&](const TriangleSite& s) { return s.slot == slot; });
    if (it == all.end()) throw InputError("no triangle at slot " + std::to_string(slot) + " of " + d.code());
    out.push_back(*it);
  }
  return out;
}

int run_f_sum(const Config& cfg) {
  Report rep(cfg);
  const IntInvariant v = named_invariant(cfg);
  if (cfg.slots.empty()) throw InputError("--slots is required");
  for (const GaussDiagram& d : load_inputs(cfg)) {
    const auto sites = sites_at(d, cfg.slots);
    const long long s = f_alt_sum(v, d, sites);
    json js = json::array();
    for (const TriangleSite& t : sites) js.push_back({{"slot", t.slot}, {"kind", to_string(t.kind)}, {"sign", t.sign}});
    rep.emit({{"code", d.code()}, {"invariant", v.name}, {"sites", js}, {"value", s}},
             d.code() + "  " + v.name + " alternating sum = " + std::to_string(s) + '\n');
  }
  return rep.status();
}

json verdict_json(const Verdict& v) {
  json out{{"status", to_string(v.status)}};
  if (v.status == Verdict::Status::certified) out["trace"] = trace_json(v.trace);
  if (v.status == Verdict::Status::refuted)
    out["witness"] = {{"invariant", v.witness}, {"value", v.value}, {"unknot_value", v.unknot_value}};
  return out;
}

int run_ntrivial(const Config& cfg) {
  Report rep(cfg);
  if (cfg.families.empty()) throw InputError("--families is required");
  const long budget = cfg.budget > 0 ? cfg.budget : kDefaultCertifyBudget;
  for (const GaussDiagram& d : load_inputs(cfg)) {
    const FamiliesSpec spec = read_families(cfg.families, d);
    const NTrivialReport r = check_n_trivial(d, spec.families, spec.mode, budget);
    json subsets = json::array();
    std::ostringstream text;
    text << d.code() << "  " << to_string(spec.mode) << " families: " << spec.families.size() << '\n';
    for (const auto& [mask, verdict] : r.subsets) {
      json members = json::array();
      for (size_t f = 0; f < spec.families.size(); ++f)
        if (mask >> f & 1u) members.push_back(f);
      json row = verdict_json(verdict);
      row["families"] = members;
      subsets.push_back(row);
      text << "  " << members.dump() << "  " << to_string(verdict.status);
      if (verdict.status == Verdict::Status::refuted) text << " (" << verdict.witness << ")";
      text << '\n';
    }
    text << "  aggregate " << to_string(r.aggregate) << '\n';
    if (r.aggregate == Verdict::Status::unknown) rep.cap_hit();
    rep.emit({{"code", d.code()}, {"mode", to_string(spec.mode)}, {"subsets", subsets},
              {"aggregate", to_string(r.aggregate)}},
             text.str());
  }
  return rep.status();
}

int run_trivialize(const Config& cfg) {
  Report rep(cfg);
  const int budget = cfg.budget > 0 ? static_cast<int>(cfg.budget) : 10;
  for (const GaussDiagram& d : load_inputs(cfg)) {
    const auto trace = trivialize_forbidden(d, budget);
    json row{{"code", d.code()}, {"kind", to_string(d.kind())}, {"budget", budget}, {"found", trace.has_value()}};
    std::ostringstream text;
    text << (d.code().empty() ? "(empty)" : d.code()) << '\n';
    if (trace) {
      row["trace"] = trace_json(*trace);
      row["replays_to_empty"] = apply_trace(d, *trace).empty();
      for (const MoveEvent& e : *trace) text << "  " << e.describe() << '\n';
    } else {
      rep.cap_hit();
      text << "  no trace within " << budget << " macro steps\n";
    }
    rep.emit(row, text.str());
  }
  return rep.status();
}

json scan_row_json(const ScanRow& r) {
  json out{{"k", r.k}, {"word_length", r.word_length}, {"chords", r.chords}};
  if (r.skipped) {
    out["skipped"] = r.skip_reason;
  } else {
    out["nontrivial"] = r.nontrivial;
    if (r.nontrivial) out["witness"] = {{"i", r.witness_i}, {"j", r.witness_j}};
    out["certificate_hits"] = r.certificate_hits;
  }
  return out;
}

int run_braid(const Config& cfg) {
  Report rep(cfg);
  if (cfg.k_last >= 0) {
    if (cfg.gens.empty()) throw InputError("--scan needs --gens");
    const GeneratorDef defs = read_generators(cfg.gens);
    json rows = json::array();
    std::ostringstream text;
    text << "   k  length  chords  result\n";
    for (const ScanRow& r : scan_family(cfg.k_first, cfg.k_last, defs, cfg.cap)) {
      rows.push_back(scan_row_json(r));
      text << std::setw(4) << r.k << std::setw(8) << r.word_length << std::setw(8) << r.chords << "  ";
      if (r.skipped) {
        rep.cap_hit();
        text << "skipped (" << r.skip_reason << ")\n";
      } else if (r.nontrivial) {
        text << "nontrivial, KH^{" << r.witness_i << "," << r.witness_j << "} != 0\n";
      } else {
        text << "not distinguished\n";
      }
    }
    rep.emit({{"scan", rows}}, text.str());
    return rep.status();
  }
  BraidWord w;
  if (!cfg.word.empty()) {
    w = parse_braid(cfg.word);
  } else if (cfg.k >= 1) {
    if (cfg.gens.empty()) throw InputError("--k needs --gens");
    w = b_family(cfg.k, read_generators(cfg.gens));
  } else {
    throw InputError("braid needs --word, --k with --gens, or --scan with --gens");
  }
  const GaussDiagram d = closure(w);
  json row{{"word", to_string(w)}, {"length", w.size()}, {"closure", d.code()}, {"chords", d.size()}};
  std::ostringstream text;
  text << "word     " << (w.size() ? to_string(w) : "(empty)") << "\nclosure  " << (d.code().empty() ? "(empty)" : d.code())
       << '\n';
  if (d.size() <= cfg.cap) {
    const UnknotDistinction u = distinguish_from_unknot(d, cfg.cap);
    row["nontrivial"] = u.nontrivial;
    if (u.nontrivial) row["witness"] = {{"i", u.i}, {"j", u.j}, {"dim", u.dim}};
    text << "homology " << (u.nontrivial ? "nontrivial" : "not distinguished from the unknot") << '\n';
  } else {
    rep.cap_hit();
    row["skipped"] = over_cap(d, cfg.cap);
    text << "homology skipped: " << over_cap(d, cfg.cap) << '\n';
  }
  rep.emit(row, text.str());
  return rep.status();
}

int run_states(const Config& cfg) {
  Report rep(cfg);
  for (const GaussDiagram& d : load_inputs(cfg)) {
    if (d.size() > cfg.cap) {
      rep.cap_hit();
      rep.emit(skipped(d, over_cap(d, cfg.cap)), d.code() + ": skipped, " + over_cap(d, cfg.cap) + '\n');
      continue;
    }
    json states = json::array();
    std::ostringstream text;
    text << (d.code().empty() ? "(empty)" : d.code()) << '\n';
    for (std::uint32_t mask = 0; mask < (1u << d.size()); ++mask) {
      const StateVec s = markers_of(d, mask);
      if (!switch_check(d, s)) continue;
      EnhancedState all_one{s, std::vector<CircleLabel>(circle_count(d, mask), CircleLabel::one)};
      const Gradings g = gradings(d, all_one);
      const auto rivals = switch_competitors(d, s, false, 4);
      json row{{"markers", marker_string(s)}, {"i", g.i}, {"j", g.j}, {"singleton", rivals.empty()}};
      if (!rivals.empty()) {
        std::string labels;
        for (CircleLabel l : rivals.front().labels) labels += l == CircleLabel::one ? '1' : 'x';
        row["competitor"] = {{"markers", marker_string(rivals.front().markers)}, {"labels", labels}};
      }
      states.push_back(row);
      text << "  " << marker_string(s) << "  i=" << g.i << " j=" << g.j << "  "
           << (rivals.empty() ? "singleton" : "competitor " + marker_string(rivals.front().markers)) << '\n';
    }
    rep.emit({{"code", d.code()}, {"states", states}}, text.str());
  }
  return rep.status();
}

int run_selftest(const Config& cfg) {
  json rows = json::array();
  bool all = true;
  const bool table = cfg.format == "table";
  run_acceptance(cfg.seed, [&](const CriterionResult& r) {
    all &= r.passed;
    rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    if (table)
      std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << "): " << r.detail
                << std::endl;
  });
  if (!table) std::cout << json{{"seed", cfg.seed}, {"criteria", rows}}.dump() << '\n';
  return all ? kExitOk : kExitSelftest;
}

void add_diagram_input(CLI::App* sub, Config& cfg) {
  sub->add_option("--input", cfg.input, "Diagram file: one code per line, optional long:/closed: prefix");
  sub->add_option("--code", cfg.code, "A single diagram code, e.g. \"long: O1+ U2+ O3+ U1+ O2+ U3+\"");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Gauss-diagram invariants of virtual knots"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cap-chords", cfg.cap, "Largest chord count for state sums and homology")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Search budget (simplification steps or macro depth)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--arrow-poly", cfg.arrow_poly, "Arrow polynomial JSON file")->check(CLI::ExistingFile);
  app.add_option("--families", cfg.families, "Families JSON file")->check(CLI::ExistingFile);
  app.add_option("--gens", cfg.gens, "Generator definitions JSON file")->check(CLI::ExistingFile);
  app.fallthrough();

  auto* eval = app.add_subcommand("eval", "Bracket, jones_hat, v21, v22 and arrow-polynomial pairing");
  add_diagram_input(eval, cfg);
  eval->add_flag("--v21", cfg.want_v21, "Only v21 (plus any other selected value)");
  eval->add_flag("--v22", cfg.want_v22);
  eval->add_flag("--bracket", cfg.want_bracket);
  eval->add_flag("--jones", cfg.want_jones);

  auto* kh = app.add_subcommand("kh", "Khovanov homology table over Z/2 with Euler check");
  add_diagram_input(kh, cfg);

  auto* gpv = app.add_subcommand("gpv-sum", "Alternating sum over virtualizations of the given chords");
  add_diagram_input(gpv, cfg);
  gpv->add_option("--invariant", cfg.invariant, "v21 or v22 (ignored with --arrow-poly)");
  gpv->add_option("--chords", cfg.chords, "Chord ids")->delimiter(',');

  auto* fsum = app.add_subcommand("f-sum", "Alternating sum over forbidden moves at the given triangles");
  add_diagram_input(fsum, cfg);
  fsum->add_option("--invariant", cfg.invariant, "v21 or v22 (ignored with --arrow-poly)");
  fsum->add_option("--slots", cfg.slots, "First slot of each triangle")->delimiter(',');

  auto* ntrivial = app.add_subcommand("ntrivial", "Certify every nonempty union of families");
  add_diagram_input(ntrivial, cfg);

  auto* triv = app.add_subcommand("trivialize", "Search for a forbidden-move unknotting trace");
  add_diagram_input(triv, cfg);

  auto* braid = app.add_subcommand("braid", "Build, close and scan braid words on four strands");
  braid->add_option("--word", cfg.word, "Braid word, e.g. \"s1 v2 S3\"");
  braid->add_option("--k", cfg.k, "Build b(k) from --gens")->check(CLI::PositiveNumber);
  std::string scan;
  braid->add_option("--scan", scan, "Range FIRST:LAST of k to scan");

  auto* states = app.add_subcommand("states", "States passing the switch conditions, with brute-force check");
  add_diagram_input(states, cfg);

  auto* selftest = app.add_subcommand("selftest", "Run the randomized acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!scan.empty()) {
      const auto colon = scan.find(':');
      if (colon == std::string::npos) throw InputError("--scan expects FIRST:LAST");
      cfg.k_first = std::stoi(scan.substr(0, colon));
      cfg.k_last = std::stoi(scan.substr(colon + 1));
      if (cfg.k_first < 1 || cfg.k_last < cfg.k_first) throw InputError("--scan range must satisfy 1 <= FIRST <= LAST");
    }
    if (*eval) return run_eval(cfg);
    if (*kh) return run_kh(cfg);
    if (*gpv) return run_gpv_sum(cfg);
    if (*fsum) return run_f_sum(cfg);
    if (*ntrivial) return run_ntrivial(cfg);
    if (*triv) return run_trivialize(cfg);
    if (*braid) return run_braid(cfg);
    if (*states) return run_states(cfg);
    if (*selftest) return run_selftest(cfg);
  } catch (const HomologyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
