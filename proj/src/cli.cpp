#include "uninorm/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "uninorm/corpus.hpp"
#include "uninorm/io.hpp"
#include "uninorm/latticegen.hpp"
#include "uninorm/verification.hpp"

namespace uninorm {

namespace {

namespace fs = std::filesystem;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kMalformed = 2;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("UNINORM_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

// Maps library errors to exit codes: structural failures are 1, unreadable input is 2.
int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UnknownElement*>(&e) ||
      dynamic_cast<const UnknownId*>(&e) || dynamic_cast<const UnknownClause*>(&e) ||
      dynamic_cast<const InvalidConfig*>(&e)) {
    return kMalformed;
  }
  return kFail;
}

LatticeFile load_lattice(const std::string& path) { return parse_lattice_file(read_file(path)); }

// Table file plus its lattice: --lattice when given, else <dir>/<lattice name>.lattice.json.
TableFile load_table(const std::string& path, const std::string& lattice_path, LatticePtr* lattice_out) {
  const std::string text = read_file(path);
  const std::string lname = table_file_lattice(text);
  std::string lpath = lattice_path;
  if (lpath.empty()) lpath = (fs::path(path).parent_path() / (lname + ".lattice.json")).string();
  LatticeFile lf = load_lattice(lpath);
  if (lf.name != lname) {
    throw ParseError("table refers to lattice '" + lname + "' but " + lpath + " holds '" + lf.name + "'");
  }
  if (lattice_out) *lattice_out = lf.lattice;
  return parse_table_file(text, lf.lattice);
}

std::optional<TableFormat> parse_format(const std::string& s) {
  if (s == "table") return TableFormat::table;
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  return std::nullopt;
}

struct SpecFlags {
  std::string corpus;
  std::string lattice;
  std::string ustar;
  std::string threshold;
  std::string neutral;
  std::string anchor;
  bool no_verify_inner = false;
};

struct LoadedSpec {
  std::string lattice_name;
  ConstructionSpec spec;
};

LoadedSpec load_spec(const SpecFlags& f, Equation eq) {
  if (!f.corpus.empty()) {
    CorpusEntry entry = load_corpus(f.corpus);
    ConstructionSpec spec = entry.spec;
    if (eq != spec.equation) spec = dual_spec(spec, std::make_shared<const BoundedLattice>(spec.lattice->dual()));
    return {entry.id, std::move(spec)};
  }
  if (f.lattice.empty() || f.ustar.empty() || f.threshold.empty() || f.neutral.empty() || f.anchor.empty()) {
    throw ParseError("spec needs --corpus, or --lattice, --ustar, the threshold, --e and --anchor");
  }
  LatticeFile lf = load_lattice(f.lattice);
  LatticePtr dummy;
  TableFile tf = load_table(f.ustar, f.lattice, &dummy);
  const BoundedLattice& l = *lf.lattice;
  OpTable inner(lf.lattice, tf.table.carrier(), tf.table.values());
  ConstructionSpec spec{lf.lattice, eq, l.id(f.threshold), l.id(f.neutral), l.id(f.anchor), std::move(inner)};
  validate(spec, f.no_verify_inner ? InnerCheck::skip : InnerCheck::verify);
  return {lf.name, std::move(spec)};
}

int cmd_check_lattice(const std::string& path, const std::string& e, const std::string& rho,
                      const std::string& sigma, std::ostream& out, std::ostream& err) {
  LatticeFile lf = load_lattice(path);
  const BoundedLattice& l = *lf.lattice;
  out << "lattice " << lf.name << ": valid bounded lattice with " << l.size() << " elements, bottom "
      << l.name(l.bottom()) << ", top " << l.name(l.top()) << '\n';
  if (e.empty()) return kPass;
  if (rho.empty() == sigma.empty()) {
    err << "error: --e needs exactly one of --rho and --sigma\n";
    return kMalformed;
  }
  const Equation eq = rho.empty() ? Equation::eq2 : Equation::eq1;
  const ElementId ne = l.id(e);
  const ElementId th = l.id(rho.empty() ? sigma : rho);
  const bool ordered = eq == Equation::eq1 ? l.leq(ne, th) : l.leq(th, ne);
  if (!ordered) {
    err << "error: the neutral element must lie " << (eq == Equation::eq1 ? "below rho" : "above sigma") << '\n';
    return kFail;
  }
  auto regions = threshold_regions(l, eq, ne, th);
  const char* labels1[] = {"[0,e]", "(e,rho]", "I_e^rho", "I_rho^e", "I_{e,rho}", "(rho,1]"};
  const char* labels2[] = {"[e,1]", "[sigma,e)", "I_e^sigma", "I_sigma^e", "I_{e,sigma}", "[0,sigma)"};
  for (std::size_t i = 0; i < regions.size(); ++i) {
    out << (eq == Equation::eq1 ? labels1[i] : labels2[i]) << ": " << describe(l, regions[i]) << '\n';
  }
  return kPass;
}

void print_hypotheses(const ConstructionSpec& spec, std::ostream& os) {
  auto ac = classify_anchor(*spec.lattice, spec.equation, spec.neutral, spec.threshold, spec.anchor);
  auto th = theorem_for(spec.equation, ac);
  if (!th) {
    os << "hypotheses: no theorem covers anchor class " << to_string(ac, spec.equation) << '\n';
    return;
  }
  try {
    os << format_report(*spec.lattice, check_hypotheses(spec, *th));
  } catch (const SpecInvalid& e) {
    os << "hypotheses: not checked (" << e.what() << ")\n";
  }
}

int cmd_construct(const SpecFlags& f, int eq_number, const std::string& out_path, const std::string& format,
                  bool verify, std::ostream& out, std::ostream& err) {
  if (eq_number != 1 && eq_number != 2) {
    err << "error: --eq must be 1 or 2\n";
    return kMalformed;
  }
  auto fmt = parse_format(format);
  if (!fmt) {
    err << "error: unknown format '" << format << "'\n";
    return kMalformed;
  }
  LoadedSpec ls = load_spec(f, eq_number == 1 ? Equation::eq1 : Equation::eq2);
  const InnerCheck check = f.no_verify_inner ? InnerCheck::skip : InnerCheck::verify;
  OpTable table = construct(ls.spec, check);
  const std::string rendered = render_table(table, *fmt, ls.lattice_name);
  if (out_path.empty()) {
    out << rendered;
  } else {
    write_file(out_path, rendered);
  }
  print_hypotheses(ls.spec, err);
  if (verify) {
    AxiomReport rep = is_uninorm(table, ls.spec.neutral);
    err << format_report(table, rep);
    return rep.passed() ? kPass : kFail;
  }
  return kPass;
}

int cmd_verify(const std::string& path, const std::string& lattice_path, const std::string& e, std::ostream& out,
               std::ostream& err) {
  LatticePtr l;
  TableFile tf = load_table(path, lattice_path, &l);
  AxiomReport rep = is_uninorm(tf.table, l->id(e));
  out << "verdict: " << (rep.passed() ? "uninorm" : "not a uninorm") << '\n';
  if (!rep.passed()) err << format_report(tf.table, rep);
  return rep.passed() ? kPass : kFail;
}

int cmd_theorem(const std::string& which, const SpecFlags& f, std::ostream& out, std::ostream& err) {
  auto th = parse_theorem(which);
  if (!th) {
    err << "error: unknown theorem '" << which << "'\n";
    return kMalformed;
  }
  LoadedSpec ls = load_spec(f, equation_of(*th));
  HypothesisReport rep = check_hypotheses(ls.spec, *th);
  out << format_report(*ls.spec.lattice, rep);
  if (auto failed = rep.failed_clause()) {
    out << "prediction: refused (standing hypothesis " << *failed << " fails)\n";
    OpTable table = construct(ls.spec, InnerCheck::skip);
    AxiomReport ax = is_uninorm(table, ls.spec.neutral);
    out << "brute force: " << (ax.passed() ? "uninorm" : "not a uninorm") << '\n';
    if (!ax.passed()) err << format_report(table, ax);
    return kPass;
  }
  EquivalenceVerdict v = verify_equivalence(ls.spec, *th);
  out << "prediction: " << (v.predicted ? "uninorm" : "not a uninorm") << '\n';
  out << "brute force: " << (v.observed ? "uninorm" : "not a uninorm") << '\n';
  out << "agreement: " << (v.agree ? "yes" : "NO") << '\n';
  if (v.counterwitness) {
    OpTable table = construct(ls.spec, InnerCheck::skip);
    err << format_report(table, *v.counterwitness);
  }
  return v.agree ? kPass : kFail;
}

void dump_instance(const std::string& dir, const std::string& stem, const ConstructionSpec& spec,
                   const OpTable& table) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  const std::string lname = stem;
  write_file((fs::path(dir) / (stem + ".lattice.json")).string(), write_lattice_file(lname, *spec.lattice));
  write_file((fs::path(dir) / (stem + ".Ustar.table.json")).string(), write_table_file(lname, spec.inner));
  write_file((fs::path(dir) / (stem + ".U.table.json")).string(), write_table_file(lname, table));
}

int cmd_fuzz(const std::string& which, std::size_t seeds, std::size_t size, std::uint64_t seed,
             const std::string& drop, const std::string& dump_dir, std::ostream& out, std::ostream& err) {
  auto th = parse_theorem(which);
  if (!th) {
    err << "error: unknown theorem '" << which << "'\n";
    return kMalformed;
  }
  if (size < 2 || size > kGenMaxSize) {
    err << "error: --size must lie in [2, " << kGenMaxSize << "]\n";
    return kMalformed;
  }
  if (!drop.empty()) {
    ClauseDrop d = make_clause_drop(*th, drop);
    const std::string label = d.clause ? which + " without " + *d.clause : which + " with all clauses";
    auto hit = find_counterexample(d, seeds, seed, std::max<std::size_t>(size, 4));
    if (!hit) {
      out << label << ": no counterexample within " << seeds << " generated instances\n";
      return kPass;
    }
    out << label << ": counterexample from " << hit->source << '\n';
    err << format_report(*hit->spec.lattice, hit->hypotheses);
    err << format_report(hit->table, hit->axioms);
    dump_instance(dump_dir, "counterexample", hit->spec, hit->table);
    // With every clause kept a counterexample contradicts the theorem.
    if (!d.clause) return kFail;
    return kPass;
  }
  GenConfig cfg;
  cfg.seed = seed;
  cfg.min_size = std::min<std::size_t>(4, size);
  cfg.max_size = size;
  std::size_t agree = 0;
  std::size_t positive = 0;
  std::size_t untargeted = 0;
  for (std::size_t i = 0; i < seeds; ++i) {
    FuzzInstance inst = gen_fuzz_instance(cfg, *th, i);
    if (inst.fell_back) ++untargeted;
    EquivalenceVerdict v = verify_equivalence(inst.spec, *th);
    if (v.agree) {
      ++agree;
    } else {
      err << "disagreement at instance " << i << '\n';
      dump_instance(dump_dir, "disagreement-" + std::to_string(i), inst.spec, construct(inst.spec));
    }
    if (v.observed) ++positive;
  }
  out << which << ": " << agree << "/" << seeds << " agree (" << positive << " uninorm, " << seeds - positive
      << " not a uninorm)\n";
  if (untargeted > 0) err << untargeted << " targeted instances fell back to uniform placement\n";
  return agree == seeds ? kPass : kFail;
}

int cmd_corpus(bool replay, const std::string& export_dir, std::ostream& out, std::ostream& err) {
  if (replay == !export_dir.empty()) {
    err << "error: give exactly one of --replay and --export\n";
    return kMalformed;
  }
  if (replay) {
    auto results = replay_all();
    std::size_t ok = 0;
    for (const auto& r : results) {
      (r.ok() ? out : err) << r.message << '\n';
      ok += r.ok() ? 1 : 0;
    }
    out << ok << "/" << results.size() << " corpus entries reproduce\n";
    return ok == results.size() ? kPass : kFail;
  }
  fs::create_directories(export_dir);
  for (const auto& id : corpus_ids()) {
    CorpusEntry e = load_corpus(id);
    write_file((fs::path(export_dir) / (id + ".lattice.json")).string(), write_lattice_file(id, *e.lattice));
    for (const auto& [name, table] : e.tables) {
      write_file((fs::path(export_dir) / (id + "." + name + ".table.json")).string(), write_table_file(id, table));
    }
    out << "exported " << id << '\n';
  }
  return kPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uninorm constructions on finite bounded lattices"};
  app.require_subcommand(1);

  std::string path, e, rho, sigma, lattice_path, out_path, format = "table", which, drop, dump_dir, export_dir;
  int eq_number = 1;
  bool verify = false, replay = false;
  std::size_t seeds = 100, size = 9;
  std::uint64_t seed = default_seed();
  SpecFlags sf;

  auto* check = app.add_subcommand("check-lattice", "Validate a lattice file and optionally print the region partition");
  check->add_option("lattice", path, "Lattice file")->required();
  check->add_option("--e", e, "Neutral element");
  check->add_option("--rho", rho, "Threshold for Eq. 1 regions");
  check->add_option("--sigma", sigma, "Threshold for Eq. 2 regions");

  auto add_spec = [&](CLI::App* c) {
    c->add_option("--corpus", sf.corpus, "Corpus entry id supplying the spec");
    c->add_option("--lattice", sf.lattice, "Lattice file");
    c->add_option("--ustar", sf.ustar, "Inner uninorm table file");
    c->add_option("--e", sf.neutral, "Neutral element");
    c->add_option("--anchor", sf.anchor, "Anchor q (Eq. 1) or p (Eq. 2)");
    c->add_flag("--no-verify-inner", sf.no_verify_inner, "Skip the axiom check of the inner table");
  };

  auto* cons = app.add_subcommand("construct", "Build the extended operation from an inner uninorm");
  cons->add_option("lattice_file", sf.lattice, "Lattice file")->required();
  cons->add_option("ustar_file", sf.ustar, "Inner uninorm table file")->required();
  cons->add_option("--eq", eq_number, "Construction: 1 (joins above) or 2 (meets below)");
  cons->add_option("--rho,--sigma", sf.threshold, "Threshold element")->required();
  cons->add_option("--e", sf.neutral, "Neutral element")->required();
  cons->add_option("--anchor", sf.anchor, "Anchor element")->required();
  cons->add_option("--out", out_path, "Write the table here instead of stdout");
  cons->add_option("--format", format, "table | csv | json");
  cons->add_flag("--no-verify-inner", sf.no_verify_inner, "Skip the axiom check of the inner table");
  cons->add_flag("--verify", verify, "Check the axioms of the result");

  auto* ver = app.add_subcommand("verify", "Check the uninorm axioms of a table file");
  ver->add_option("table", path, "Table file")->required();
  ver->add_option("--e", e, "Neutral element")->required();
  ver->add_option("--lattice", lattice_path, "Lattice file (default: <dir>/<lattice>.lattice.json)");

  auto* thm = app.add_subcommand("theorem", "Compare a theorem's prediction with brute force");
  thm->add_option("--which", which, "th31 | th33 | th34 | th36")->required();
  add_spec(thm);
  thm->add_option("--threshold,--rho,--sigma", sf.threshold, "Threshold element");

  auto* fuzz = app.add_subcommand("fuzz", "Seeded theorem equivalence runs or counterexample search");
  fuzz->add_option("--theorem", which, "th31 | th33 | th34 | th36")->required();
  fuzz->add_option("--seeds", seeds, "Number of instances");
  fuzz->add_option("--size", size, "Largest lattice size");
  fuzz->add_option("--seed", seed, "Base seed (default: UNINORM_SEED or 0)");
  fuzz->add_option("--drop-clause", drop, "Search for a counterexample without this clause");
  fuzz->add_option("--dump", dump_dir, "Directory for counterexample files");

  auto* corp = app.add_subcommand("corpus", "Replay or export the built-in examples");
  corp->add_flag("--replay", replay, "Rebuild every entry and compare with the stored tables");
  corp->add_option("--export", export_dir, "Write lattice and table files to this directory");

  std::vector<std::string> argv_store{"uninorm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& pe) {
    int code = app.exit(pe, out, err);
    return code == 0 ? kPass : kMalformed;
  }

  try {
    if (*check) return cmd_check_lattice(path, e, rho, sigma, out, err);
    if (*cons) return cmd_construct(sf, eq_number, out_path, format, verify, out, err);
    if (*ver) return cmd_verify(path, lattice_path, e, out, err);
    if (*thm) return cmd_theorem(which, sf, out, err);
    if (*fuzz) return cmd_fuzz(which, seeds, size, seed, drop, dump_dir, out, err);
    if (*corp) return cmd_corpus(replay, export_dir, out, err);
  } catch (const Error& ex) {
    return report_error(ex, err);
  } catch (const fs::filesystem_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kMalformed;
  }
  return kMalformed;
}

}  // namespace uninorm
