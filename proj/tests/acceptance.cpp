#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "uninorm/cli.hpp"
#include "uninorm/constructions.hpp"
#include "uninorm/corpus.hpp"
#include "uninorm/io.hpp"
#include "uninorm/latticegen.hpp"
#include "uninorm/verification.hpp"

using namespace uninorm;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kTable2Seconds = 1.0;
constexpr double kFuzzSeconds = 60.0;
constexpr std::size_t kFuzzPerTheorem = 500;
constexpr std::size_t kFuzzMaxSize = 9;
constexpr std::size_t kNecessityCount = 200;
constexpr std::size_t kRandomInstances = 100;
constexpr std::size_t kMagmas = 1000;
constexpr std::size_t kMagmaMaxSize = 6;
constexpr std::size_t kMinNonAssociative = 100;
constexpr std::size_t kDualityCount = 200;

using Cell = std::array<ElementId, 2>;
using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

std::vector<Cell> sorted(std::vector<Cell> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Cell> errata_cells(const CorpusEntry& c, const std::string& table) {
  std::vector<Cell> out;
  for (const auto& e : c.errata) {
    if (e.table == table) out.push_back({e.row, e.col});
  }
  return sorted(out);
}

std::string monotone_text(const BoundedLattice& l, const AxiomReport& r) {
  if (!r.nonmonotone) return "no monotonicity witness";
  const auto& w = *r.nonmonotone;
  return "monotone witness " + l.name(w.lo) + " <= " + l.name(w.hi) + " against " + l.name(w.other);
}

// The cited pair U(x, other) vs U(y, other) with {x, y} = {lo, hi}, in either argument.
bool witness_matches(const BoundedLattice& l, const AxiomReport& r, const char* x, const char* y,
                     const char* other) {
  if (!r.nonmonotone) return false;
  const auto& w = *r.nonmonotone;
  std::array<ElementId, 2> got{w.lo, w.hi}, want{l.id(x), l.id(y)};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want && w.other == l.id(other);
}

std::vector<ConstructionSpec> corpus_specs(Equation eq) {
  std::vector<ConstructionSpec> out;
  for (const auto& id : corpus_ids()) {
    CorpusEntry c = load_corpus(id);
    if (eq == Equation::eq1) {
      out.push_back(c.spec);
    } else {
      auto dl = std::make_shared<const BoundedLattice>(c.lattice->dual());
      out.push_back(dual_spec(c.spec, dl));
    }
  }
  return out;
}

std::vector<ConstructionSpec> random_specs(std::size_t count, Equation eq, std::uint64_t seed) {
  std::vector<ConstructionSpec> out;
  GenConfig cfg;
  cfg.seed = seed;
  cfg.min_size = 4;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    const AnchorClass ac = static_cast<AnchorClass>(i % 3);
    out.push_back(gen_spec(derive(cfg, i), ac, false, eq));
  }
  return out;
}

Result c1_table2() {
  const auto t0 = Clock::now();
  CorpusEntry c = load_corpus("L11");
  OpTable u = construct_eq1(c.spec);
  AxiomReport r = is_uninorm(u, c.spec.neutral);
  const double dt = seconds_since(t0);
  const OpTable& printed = c.tables.at("U1");
  const auto diff = u.diff(printed);
  const std::size_t cells = u.order() * u.order();
  Result res;
  res.pass = diff.empty() && cells == 121 && r.passed() && dt < kTable2Seconds;
  res.detail = std::to_string(cells - diff.size()) + "/" + std::to_string(cells) + " cells match, " +
               (r.passed() ? "uninorm" : "not a uninorm") + ", " + fmt_seconds(dt);
  return res;
}

Result c2_errata() {
  Result res;
  for (const char* id : {"L12", "L21"}) {
    CorpusEntry c = load_corpus(id);
    const BoundedLattice& l = *c.lattice;
    OpTable u = construct(c.spec);
    const auto diff = sorted(u.diff(c.tables.at(c.constructed)));
    const auto expected = errata_cells(c, c.constructed);
    ElementId e = l.id("e"), f = l.id("f");
    const bool forced = u(e, f) == f && u(f, e) == f;
    res.pass = res.pass && diff == expected && !diff.empty() && forced;
    res.detail += std::string(id) + ": " + std::to_string(diff.size()) + " diff cell(s), " +
                  (diff == expected ? "equal to" : "differ from") + " errata, U(e,f)=" + l.name(u(e, f)) + "; ";
  }
  return res;
}

Result c3_counterexamples() {
  Result res;
  struct Cited {
    const char* id;
    const char* x;
    const char* y;
    const char* other;
    const char* text;
  };
  for (Cited k : {Cited{"L13", "t", "s", "m", "(t,m) vs (s,m)"}, Cited{"L22", "m", "s", "t", "(t,m) vs (t,s)"}}) {
    CorpusEntry c = load_corpus(k.id);
    const BoundedLattice& l = *c.lattice;
    OpTable u = construct(c.spec);
    const auto diff = sorted(u.diff(c.tables.at(c.constructed)));
    const auto errata = errata_cells(c, c.constructed);
    const bool within = std::includes(errata.begin(), errata.end(), diff.begin(), diff.end());
    AxiomReport r = is_uninorm(u, c.spec.neutral);
    const bool cited = !r.passed() && witness_matches(l, r, k.x, k.y, k.other);
    res.pass = res.pass && within && cited;
    res.detail += std::string(k.id) + ": diff " + (within ? "within" : "outside") + " errata, " +
                  (r.passed() ? "uninorm" : "not a uninorm") + ", " + monotone_text(l, r) + ", cited " + k.text + "; ";
  }
  return res;
}

Result c4_fuzz() {
  Result res;
  const auto t0 = Clock::now();
  GenConfig cfg;
  cfg.seed = 0;
  cfg.min_size = 4;
  cfg.max_size = kFuzzMaxSize;
  for (Theorem th : {Theorem::th31, Theorem::th33, Theorem::th34, Theorem::th36}) {
    std::size_t agree = 0, negative = 0;
    for (std::size_t i = 0; i < kFuzzPerTheorem; ++i) {
      FuzzInstance inst = gen_fuzz_instance(cfg, th, i);
      if (inst.spec.lattice->size() > kFuzzMaxSize) continue;
      EquivalenceVerdict v = verify_equivalence(inst.spec, th);
      agree += v.agree ? 1 : 0;
      negative += v.observed ? 0 : 1;
    }
    res.pass = res.pass && agree == kFuzzPerTheorem;
    res.detail += std::string(to_string(th)) + " " + std::to_string(agree) + "/" + std::to_string(kFuzzPerTheorem) +
                  " (" + std::to_string(negative) + " negative); ";
  }
  const double dt = seconds_since(t0);
  res.pass = res.pass && dt < kFuzzSeconds;
  res.detail += fmt_seconds(dt);
  return res;
}

Result c5_necessity() {
  GenConfig cfg;
  cfg.seed = 5;
  cfg.min_size = 4;
  std::size_t found = 0, assoc_witnessed = 0;
  for (std::uint64_t i = 0; found < kNecessityCount && i < kAttemptCap; ++i) {
    GenConfig c = derive(cfg, i);
    c.class_filter = i % 2 == 0 ? ClassFilter::none : ClassFilter::umin;
    const AnchorClass ac = i % 3 == 2 ? AnchorClass::threshold_incomparable
                           : i % 3 == 1 ? AnchorClass::neutral_incomparable
                                        : AnchorClass::between;
    ConstructionSpec spec = gen_spec(c, ac, false, Equation::eq1);
    if (in_class_ub(spec.inner, spec.neutral)) continue;
    HypothesisReport h = check_hypotheses(spec, *theorem_for(Equation::eq1, ac));
    if (!h.nonempty_guard()) continue;
    ++found;
    OpTable u = construct_eq1(spec, InnerCheck::skip);
    AxiomReport r = is_uninorm(u, spec.neutral);
    if (r.associativity_checked && r.nonassociative) {
      auto [a, b, x] = *r.nonassociative;
      if (u(u(a, b), x) != u(a, u(b, x))) ++assoc_witnessed;
    }
  }
  Result res;
  res.pass = found >= kNecessityCount && assoc_witnessed == found;
  res.detail = std::to_string(assoc_witnessed) + "/" + std::to_string(found) +
               " specs with inner outside U_b and nonempty guard fail with an associativity witness";
  return res;
}

Result c6_remarks() {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 5) failures.push_back(what);
  };
  for (Equation eq : {Equation::eq1, Equation::eq2}) {
    const bool one = eq == Equation::eq1;
    const std::string tag = one ? "eq1" : "eq2";
    std::vector<ConstructionSpec> specs = corpus_specs(eq);
    for (auto& s : random_specs(kRandomInstances, eq, one ? 61 : 62)) specs.push_back(std::move(s));
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const ConstructionSpec& spec = specs[i];
      const LatticePtr& lp = spec.lattice;
      const BoundedLattice& l = *lp;
      const std::string where = tag + " instance " + std::to_string(i);
      GenConfig g;
      g.seed = mix_seed(i, one ? 1 : 2);

      // Extreme threshold: the construction returns the inner uninorm.
      const ElementId extreme = one ? l.top() : l.bottom();
      OpTable full = gen_uninorm(lp, l.all(), spec.neutral, g);
      ConstructionSpec whole{lp, eq, extreme, spec.neutral, spec.anchor, full};
      expect(construct(whole) == full, where + ": extreme threshold");

      // Neutral at the bound: the construction is the t-conorm (t-norm) of the base construction.
      const ElementId bound = one ? l.bottom() : l.top();
      const ElementSet carrier = inner_carrier(l, eq, spec.threshold);
      OpTable w = gen_uninorm(lp, carrier, bound, g);
      ConstructionSpec at_bound{lp, eq, spec.threshold, bound, spec.anchor, w};
      OpTable base = one ? construct_th021_tconorm(lp, spec.threshold, w)
                         : construct_th021_tnorm(lp, spec.threshold, w);
      expect(construct(at_bound) == base, where + ": neutral at bound");

      // Class transfer.
      OpTable u = construct(spec);
      const ElementId e = spec.neutral;
      if (one) {
        if (in_class_ub(spec.inner, e)) expect(in_class_ub(u, e), where + ": U_b transfer");
        expect(in_class_umax(u, e) == in_class_umax(spec.inner, e), where + ": U_max equivalence");
      } else {
        if (in_class_ut(spec.inner, e)) expect(in_class_ut(u, e), where + ": U_t transfer");
        expect(in_class_umin(u, e) == in_class_umin(spec.inner, e), where + ": U_min equivalence");
      }
    }
  }
  Result res;
  res.pass = failures.empty();
  res.detail = std::to_string(checked - failures.size()) + "/" + std::to_string(checked) + " checks hold";
  for (const auto& f : failures) res.detail += "; " + f;
  return res;
}

Result c7_partitioned() {
  Rng rng(7, 7);
  GenConfig cfg;
  cfg.seed = 7;
  cfg.min_size = 2;
  cfg.max_size = kMagmaMaxSize;
  std::size_t agree = 0, nonassoc = 0;
  for (std::uint64_t i = 0; i < kMagmas; ++i) {
    auto l = std::make_shared<const BoundedLattice>(gen_lattice(derive(cfg, i)));
    const std::size_t n = l->size();
    std::vector<ElementId> v;
    if (i % 2 == 0) {
      v = gen_uninorm(l, l->all(), rng.pick(l->all()), derive(cfg, i)).values();
      for (std::size_t k = 0; k < i % 3; ++k) {
        std::size_t a = rng.below(n), b = rng.below(n);
        v[a * n + b] = v[b * n + a] = ElementId(rng.below(n));
      }
    } else {
      v.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) v[a * n + b] = v[b * n + a] = ElementId(rng.below(n));
      }
    }
    OpTable t(l, l->all(), v);
    const std::size_t k = 1 + rng.below(n);
    std::vector<ElementSet> classes(k);
    for (ElementId x : t.carrier()) classes[rng.below(k)].insert(x);
    Partition p = Partition::from_regions(classes, t.carrier());
    auto w = assoc_partitioned(t, p);
    auto naive = naive_associativity(t);
    bool ok = w.has_value() == naive.has_value();
    if (w) {
      auto [a, b, c] = w->triple;
      ok = ok && t(t(a, b), c) != t(a, t(b, c));
    }
    agree += ok ? 1 : 0;
    nonassoc += naive ? 1 : 0;
  }
  Result res;
  res.pass = agree == kMagmas && nonassoc >= kMinNonAssociative;
  res.detail = std::to_string(agree) + "/" + std::to_string(kMagmas) + " agree, " + std::to_string(nonassoc) +
               " non-associative";
  return res;
}

Result c8_restriction() {
  std::vector<std::pair<OpTable, ElementId>> uninorms;
  for (const auto& id : corpus_ids()) {
    CorpusEntry c = load_corpus(id);
    for (const auto& [name, printed] : c.tables) {
      OpTable t = c.corrected(name);
      if (is_uninorm(t, c.spec.neutral).passed()) uninorms.emplace_back(t, c.spec.neutral);
    }
  }
  const std::size_t from_corpus = uninorms.size();
  GenConfig cfg;
  cfg.seed = 8;
  for (std::uint64_t i = 0; i < kRandomInstances; ++i) {
    GenConfig c = derive(cfg, i);
    auto l = std::make_shared<const BoundedLattice>(gen_lattice(c));
    ElementId e = Rng(c.seed, 2).pick(l->all());
    uninorms.emplace_back(gen_uninorm(l, l->all(), e, c), e);
  }
  std::size_t ok = 0;
  for (const auto& [t, e] : uninorms) {
    const BoundedLattice& l = t.lattice();
    const ElementSet lower = l.interval(carrier_bottom(t), e);
    const ElementSet upper = l.interval(e, carrier_top(t));
    if (is_t_norm(restrict(t, lower)).passed() && is_t_conorm(restrict(t, upper)).passed()) ++ok;
  }
  Result res;
  res.pass = ok == uninorms.size() && from_corpus > 0;
  res.detail = std::to_string(ok) + "/" + std::to_string(uninorms.size()) + " uninorms (" +
               std::to_string(from_corpus) + " from corpus)";
  return res;
}

Result c9_duality() {
  GenConfig cfg;
  cfg.seed = 9;
  std::size_t equal = 0;
  for (std::uint64_t i = 0; i < kDualityCount; ++i) {
    ConstructionSpec spec = gen_spec(derive(cfg, i), static_cast<AnchorClass>(i % 3), false, Equation::eq2);
    OpTable direct = construct_eq2(spec);
    auto dl = std::make_shared<const BoundedLattice>(spec.lattice->dual());
    OpTable via = construct_eq1(dual_spec(spec, dl));
    if (OpTable(spec.lattice, via.carrier(), via.values()) == direct) ++equal;
  }
  Result res;
  res.pass = equal == kDualityCount;
  res.detail = std::to_string(equal) + "/" + std::to_string(kDualityCount) + " instances cell-exact";
  return res;
}

std::string slurp_dir(const fs::path& d) {
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(d)) files.push_back(f.path());
  std::sort(files.begin(), files.end());
  std::string all;
  for (const auto& f : files) all += f.filename().string() + "\n" + read_file(f.string());
  return all;
}

Result c10_cli() {
  Result res;
  std::ostringstream out, err;
  const int replay = run_cli({"corpus", "--replay"}, out, err);

  const fs::path dir = fs::temp_directory_path() / "uninorm_acceptance";
  fs::remove_all(dir);
  std::ostringstream sink;
  run_cli({"corpus", "--export", (dir / "a").string()}, sink, sink);

  CorpusEntry c = load_corpus("L13");
  const BoundedLattice& l = *c.lattice;
  const fs::path t7 = dir / "table7.table.json";
  write_file(t7.string(), write_table_file("L13", c.corrected("U1")));
  fs::copy_file(dir / "a" / "L13.lattice.json", dir / "L13.lattice.json");
  std::ostringstream vout, verr;
  const int verify = run_cli({"verify", t7.string(), "--e", "e"}, vout, verr);
  const std::string report = verr.str() + vout.str();
  const bool cited = report.find("monotone: FAIL") != std::string::npos &&
                     (report.find("U(t,m)") != std::string::npos || report.find("U(m,t)") != std::string::npos) &&
                     (report.find("U(s,m)") != std::string::npos || report.find("U(m,s)") != std::string::npos);

  // Import every exported file and write it again.
  bool round_trip = true;
  fs::create_directories(dir / "b");
  for (const auto& id : corpus_ids()) {
    const std::string lpath = (dir / "a" / (id + ".lattice.json")).string();
    const std::string ltext = read_file(lpath);
    LatticeFile lf = parse_lattice_file(ltext);
    const std::string lagain = write_lattice_file(lf.name, *lf.lattice);
    round_trip = round_trip && lagain == ltext;
    write_file((dir / "b" / (id + ".lattice.json")).string(), lagain);
    for (const auto& [name, table] : load_corpus(id).tables) {
      const std::string file = id + "." + name + ".table.json";
      const std::string ttext = read_file((dir / "a" / file).string());
      TableFile tf = parse_table_file(ttext, lf.lattice);
      const std::string tagain = write_table_file(tf.lattice_name, tf.table);
      round_trip = round_trip && tagain == ttext;
      write_file((dir / "b" / file).string(), tagain);
    }
  }
  round_trip = round_trip && slurp_dir(dir / "a") == slurp_dir(dir / "b");
  fs::remove_all(dir);

  AxiomReport r = is_uninorm(c.corrected("U1"), c.spec.neutral);
  res.pass = replay == 0 && verify == 1 && cited && round_trip;
  res.detail = "replay exit " + std::to_string(replay) + ", verify Table 7 exit " + std::to_string(verify) + " (" +
               monotone_text(l, r) + ", cited (t,m) vs (s,m)), round trip " +
               (round_trip ? "byte-identical" : "differs");
  return res;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {"table-reproduction", c1_table2},     {"table-errata", c2_errata},
      {"counterexample-tables", c3_counterexamples}, {"theorem-equivalence-fuzz", c4_fuzz},
      {"ub-necessity", c5_necessity},        {"remarks", c6_remarks},
      {"partitioned-associativity", c7_partitioned}, {"restriction", c8_restriction},
      {"duality", c9_duality},               {"cli-contract", c10_cli},
  };
  std::size_t passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& ex) {
      r = {false, std::string("exception: ") + ex.what()};
    }
    while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
    passed += r.pass ? 1 : 0;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].name << ": " << r.detail
              << std::endl;
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass" << std::endl;
  return passed == criteria.size() ? 0 : 1;
}
