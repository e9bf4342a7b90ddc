#include "uninorm/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace uninorm {

namespace {

struct RawErratum {
  const char* row;
  const char* col;
  const char* printed;
  const char* formula;
  const char* justification;
};

struct RawEntry {
  const char* id;
  const char* elements;
  const char* covers;  // "a<b" tokens
  const char* threshold;
  const char* neutral;
  const char* anchor;
  Theorem theorem;
  const char* constructed;
  const char* inner_rows;  // rows separated by '/', over [0, threshold] in id order
  const char* table_rows;  // rows separated by '/', over the whole lattice
  Verdict verdict;
  std::vector<RawErratum> errata;
  const char* verdict_note;  // nonempty: the stated verdict is contradicted by verification
  std::vector<const char*> notes;
};

const std::vector<RawEntry>& raw_entries() {
  static const std::vector<RawEntry> entries = {
      {"L11", "0 q e k c rho m t s d 1",
       "0<q q<e e<c c<rho rho<d d<1 q<t t<1 e<s s<d q<m m<1 q<k k<c", "rho", "e", "q", Theorem::th31, "U1",
       "0 0 0 k c rho/0 q q k c rho/0 q e k c rho/k k k k c rho/c c c c c rho/rho rho rho rho rho rho",
       "0 0 0 k c rho m t s d 1/0 q q k c rho m t s d 1/0 q e k c rho m t s d 1/"
       "k k k k c rho 1 1 1 1 1/c c c c c rho 1 1 1 1 1/rho rho rho rho rho rho 1 1 1 1 1/"
       "m m m 1 1 1 m 1 1 1 1/t t t 1 1 1 1 t 1 1 1/s s s 1 1 1 1 1 1 1 1/d d d 1 1 1 1 1 1 1 1/"
       "1 1 1 1 1 1 1 1 1 1 1",
       Verdict::uninorm,
       {},
       "",
       {"k's lower cover is ambiguous between 0 and q; q < k < c is used (both readings reproduce the tables)."}},
      {"L12", "0 f e c q rho s t m d 1",
       "0<f f<e e<c c<q q<rho rho<d d<1 0<t t<1 e<s s<d f<m m<1", "rho", "e", "q", Theorem::th31, "U1",
       "0 0 0 c q rho/0 f f c q rho/0 f e c q rho/c c c c q rho/q q q q q rho/rho rho rho rho rho rho",
       "0 0 0 c q rho s t m d 1/0 f f c q rho s t m d 1/0 q e c q rho s t m d 1/"
       "c c c c q rho 1 1 1 1 1/q q q q q rho 1 1 1 1 1/rho rho rho rho rho rho 1 1 1 1 1/"
       "s s s 1 1 1 1 1 1 1 1/t t t 1 1 1 1 1 1 1 1/m m m 1 1 1 1 1 1 1 1/d d d 1 1 1 1 1 1 1 1/"
       "1 1 1 1 1 1 1 1 1 1 1",
       Verdict::uninorm,
       {{"e", "f", "q", "f",
         "e is neutral, so U(e,f) = f; the inner table prints U*(e,f) = f and the symmetric cell (f,e) prints f."}},
       "",
       {"The drawing places q beside e, but the inner table is monotone only if c < q, so c < q < rho is used; "
        "the anchor then lies in (e, rho].",
        "The drawing labels one element k; the tables call it s."}},
      {"L13", "0 q e rho s t m d 1", "0<q q<e e<rho rho<d d<1 0<t t<d 0<m m<d rho<s s<1", "rho", "e", "q",
       Theorem::th31, "U1", "0 0 0 rho/0 q q rho/0 q e rho/rho rho rho rho",
       "0 0 0 rho s t m d 1/0 q q rho s t m 1 1/0 q e rho s t m d 1/rho rho rho rho 1 1 1 1 1/"
       "s s s 1 1 1 1 1 1/t t t 1 1 d d 1 1/m m m 1 1 d d 1 1/d d d 1 1 1 1 1 1/1 1 1 1 1 1 1 1 1",
       Verdict::not_uninorm,
       {{"q", "d", "1", "d",
         "q lies in [0,e] and d lies outside [0,rho], so the formula gives d; the symmetric cell (d,q) prints d "
         "and row 0 prints U(0,d) = d."}},
       "The constructed table (with the (q,d) correction) passes every axiom. The cited failure needs "
       "U(t,m) = d below U(s,m) = 1 with s <= t, but U(t,m) = d puts t and m in I_{e,rho}, while U(s,s) = 1 "
       "and s outside [0,rho] force s to be comparable with e or rho; either case contradicts t in I_{e,rho}. "
       "Every cover relation consistent with the printed tables yields a uninorm.",
       {"s is placed above rho (rho < s < 1); the tables force s outside [0, rho] with U(s,s) = 1."}},
      {"L21", "0 f e c rho q t m d 1", "0<f f<e e<c c<rho rho<d d<1 0<t t<1 f<m m<1 e<q q<d", "rho", "e", "q",
       Theorem::th33, "U2", "0 0 0 c rho/0 f f c rho/0 f e c rho/c c c c rho/rho rho rho rho rho",
       "0 0 0 c rho q t m d 1/0 f f c rho q t m d 1/0 q e c rho q t m d 1/c c c c rho 1 1 1 1 1/"
       "rho rho rho rho rho 1 1 1 1 1/q q q 1 1 1 1 1 1 1/t t t 1 1 1 1 1 1 1/m m m 1 1 1 1 1 1 1/"
       "d d d 1 1 1 1 1 1 1/1 1 1 1 1 1 1 1 1 1",
       Verdict::uninorm,
       {{"e", "f", "q", "f",
         "e is neutral, so U(e,f) = f; the inner table prints U*(e,f) = f and the symmetric cell (f,e) prints f."}},
       "",
       {"The drawing joins m to both f and rho, but the inner table excludes m from [0, rho]; f < m < 1 is used."}},
      {"L22", "0 e rho s t m q d 1", "0<e e<rho rho<d d<1 0<t t<d 0<m m<d e<q q<d rho<s s<1", "rho", "e", "q",
       Theorem::th33, "U2", "0 0 rho/0 e rho/rho rho rho",
       "0 0 rho s t m q d 1/0 e rho s t m q d 1/rho rho rho 1 1 1 1 1 1/s s 1 1 1 1 1 1 1/"
       "t t 1 1 d d 1 1 1/m m 1 1 d d 1 1 1/q q 1 1 1 1 1 1 1/d d 1 1 1 1 1 1 1/1 1 1 1 1 1 1 1 1",
       Verdict::not_uninorm,
       {},
       "The constructed table passes every axiom. The cited failure needs U(t,m) = d below U(t,s) = 1 with "
       "s <= m, but s lies outside [0,rho] with U(s,s) = 1, so s is comparable with e or rho, and either case "
       "contradicts m in I_{e,rho}. Every cover relation consistent with the printed tables yields a uninorm.",
       {"s is placed above rho (rho < s < 1); the tables force s outside [0, rho] with U(s,s) = 1."}},
  };
  return entries;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

OpTable parse_rows(const LatticePtr& l, ElementSet carrier, const std::string& rows) {
  std::vector<ElementId> values;
  std::string row;
  std::istringstream is(rows);
  std::size_t count = 0;
  while (std::getline(is, row, '/')) {
    auto w = words(row);
    if (w.size() != carrier.size()) throw InvalidLattice("corpus row has the wrong width");
    for (const auto& name : w) values.push_back(l->id(name));
    ++count;
  }
  if (count != carrier.size()) throw InvalidLattice("corpus table has the wrong height");
  return OpTable(l, carrier, values);
}

CorpusEntry build_entry(const RawEntry& raw) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& tok : words(raw.covers)) {
    auto pos = tok.find('<');
    covers.emplace_back(tok.substr(0, pos), tok.substr(pos + 1));
  }
  auto l = std::make_shared<const BoundedLattice>(BoundedLattice::build(words(raw.elements), covers));
  const ElementId rho = l->id(raw.threshold);
  const ElementSet inner_set = l->down_set(rho);
  OpTable inner = parse_rows(l, inner_set, raw.inner_rows);
  OpTable table = parse_rows(l, l->all(), raw.table_rows);

  CorpusEntry e{raw.id,
                l,
                {},
                raw.constructed,
                ConstructionSpec{l, Equation::eq1, rho, l->id(raw.neutral), l->id(raw.anchor), inner},
                raw.theorem,
                raw.verdict,
                {},
                std::nullopt,
                {}};
  e.tables.emplace("Ustar", inner);
  e.tables.emplace(raw.constructed, table);
  for (const auto& r : raw.errata) {
    e.errata.push_back(CellErratum{raw.constructed, l->id(r.row), l->id(r.col), l->id(r.printed), l->id(r.formula),
                                   r.justification});
  }
  if (std::string(raw.verdict_note).size() > 0) {
    e.verdict_erratum = VerdictErratum{raw.verdict,
                                       raw.verdict == Verdict::uninorm ? Verdict::not_uninorm : Verdict::uninorm,
                                       raw.verdict_note};
  }
  for (const char* n : raw.notes) e.notes.emplace_back(n);

  validate(e.spec);
  return e;
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::uninorm ? "uninorm" : "not-uninorm"; }

OpTable CorpusEntry::corrected(const std::string& name) const {
  auto it = tables.find(name);
  if (it == tables.end()) throw UnknownId("corpus entry " + id + " has no table '" + name + "'");
  std::vector<ElementId> values = it->second.values();
  const auto& el = it->second.carrier_elements();
  for (const auto& err : errata) {
    if (err.table != name) continue;
    auto i = *it->second.position(err.row);
    auto j = *it->second.position(err.col);
    values[i * el.size() + j] = err.formula;
  }
  return OpTable(lattice, it->second.carrier(), values);
}

const std::vector<std::string>& corpus_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& r : raw_entries()) out.emplace_back(r.id);
    return out;
  }();
  return ids;
}

CorpusEntry load_corpus(const std::string& id) {
  for (const auto& r : raw_entries()) {
    if (id == r.id) return build_entry(r);
  }
  throw UnknownId("unknown corpus id '" + id + "'");
}

std::vector<ReplayResult> replay_all() {
  std::vector<ReplayResult> out;
  for (const auto& id : corpus_ids()) {
    ReplayResult res;
    res.id = id;
    std::ostringstream msg;
    try {
      CorpusEntry e = load_corpus(id);
      const BoundedLattice& l = *e.lattice;
      OpTable built = construct(e.spec);
      const OpTable& printed = e.tables.at(e.constructed);
      res.diff = built.diff(printed);
      std::set<std::array<ElementId, 2>> expected;
      bool errata_consistent = true;
      for (const auto& err : e.errata) {
        expected.insert({err.row, err.col});
        if (printed.at(err.row, err.col) != err.printed || built.at(err.row, err.col) != err.formula) {
          errata_consistent = false;
        }
      }
      std::set<std::array<ElementId, 2>> got(res.diff.begin(), res.diff.end());
      res.cells_ok = errata_consistent && got == expected;
      res.observed = is_uninorm(built, e.spec.neutral).passed() ? Verdict::uninorm : Verdict::not_uninorm;
      res.verdict_ok = res.observed == e.replay_verdict();

      msg << id << ": " << res.diff.size() << " cell(s) differ from the printed table";
      for (const auto& d : res.diff) msg << " (" << l.name(d[0]) << "," << l.name(d[1]) << ")";
      msg << (res.cells_ok ? ", all recorded as errata" : ", NOT matching the errata ledger");
      msg << "; verdict " << to_string(res.observed);
      if (e.verdict_erratum) {
        msg << " (stated " << to_string(e.expected_verdict) << ", recorded as verdict erratum)";
      }
      msg << (res.verdict_ok ? "" : " MISMATCH");
    } catch (const Error& err) {
      msg << id << ": " << err.what();
    }
    res.message = msg.str();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace uninorm
