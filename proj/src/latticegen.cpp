#include "uninorm/latticegen.hpp"

#include <algorithm>
#include <map>

namespace uninorm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Order-reversible view of the lattice so t-conorm generation reuses the t-norm code.
struct View {
  const BoundedLattice& l;
  bool flip;
  bool leq(ElementId a, ElementId b) const { return flip ? l.leq(b, a) : l.leq(a, b); }
  ElementId meet(ElementId a, ElementId b) const { return flip ? l.join(a, b) : l.meet(a, b); }
  ElementSet up(ElementId a) const { return flip ? l.down_set(a) : l.up_set(a); }
  ElementSet down(ElementId a) const { return flip ? l.up_set(a) : l.down_set(a); }
};

using Grid = std::vector<ElementId>;  // kMaxElements x kMaxElements

ElementId& cell(Grid& g, ElementId a, ElementId b) { return g[a.index() * kMaxElements + b.index()]; }

// Random t-norm on [lo, hi] (t-conorm when the view is flipped): meet, the drastic product, or
// the threshold construction T = V on [r, hi]^2, meet when hi is an argument, lo otherwise.
void random_tnorm(const View& v, ElementId lo, ElementId hi, Rng& rng, Grid& g, int depth) {
  const ElementSet span = v.up(lo) & v.down(hi);
  const std::size_t choice = depth > 3 ? rng.below(2) : rng.below(3);
  if (choice == 0) {
    for (ElementId a : span) {
      for (ElementId b : span) cell(g, a, b) = v.meet(a, b);
    }
    return;
  }
  ElementId r = hi;
  if (choice == 2) r = rng.pick(span);
  if (r != hi) random_tnorm(v, r, hi, rng, g, depth + 1);
  const ElementSet upper = v.up(r) & span;
  for (ElementId a : span) {
    for (ElementId b : span) {
      if (upper.contains(a) && upper.contains(b) && r != hi) continue;
      if (a == hi || b == hi) {
        cell(g, a, b) = v.meet(a, b);
      } else {
        cell(g, a, b) = lo;
      }
    }
  }
}

// U = T_e on [lo,e]^2, the other argument when one lies in [lo,e], hi otherwise (and dually).
// Always a uninorm; the unflipped form lies in U_b and U_max, the flipped one in U_t and U_min.
Grid dominated_uninorm(const View& v, ElementSet carrier, ElementId lo, ElementId hi, ElementId e, Rng& rng) {
  Grid g(kMaxElements * kMaxElements);
  random_tnorm(v, lo, e, rng, g, 0);
  const ElementSet low = v.down(e) & carrier;
  for (ElementId a : carrier) {
    for (ElementId b : carrier) {
      const bool la = low.contains(a);
      const bool lb = low.contains(b);
      if (la && lb) continue;
      if (la) {
        cell(g, a, b) = b;
      } else if (lb) {
        cell(g, a, b) = a;
      } else {
        cell(g, a, b) = hi;
      }
    }
  }
  return g;
}

OpTable to_table(const LatticePtr& l, ElementSet carrier, const Grid& g) {
  return OpTable::from_function(l, carrier, [&](ElementId a, ElementId b) { return g[a.index() * kMaxElements + b.index()]; });
}

ElementId least_of(const BoundedLattice& l, ElementSet s, bool greatest) {
  for (ElementId x : s) {
    if (s.subset_of(greatest ? l.down_set(x) : l.up_set(x))) return x;
  }
  throw NotAnInterval("carrier " + describe(l, s) + " is not an interval");
}

struct Tally {
  std::map<std::string, std::size_t> counts;
  void add(const std::string& why) { ++counts[why]; }
  std::string binding() const {
    std::string best = "no attempts";
    std::size_t most = 0;
    for (const auto& [why, n] : counts) {
      if (n > most) {
        most = n;
        best = why + " (" + std::to_string(n) + " rejections)";
      }
    }
    return best;
  }
};

std::optional<ConstructionSpec> try_spec_on(const LatticePtr& lp, const GenConfig& cfg, AnchorClass anchor_class,
                                            bool want_hypotheses, Equation eq, Rng& rng, Tally& tally) {
  const BoundedLattice& l = *lp;
  const View v{l, eq == Equation::eq2};
  ElementSet thresholds = l.all();
  thresholds.erase(l.bottom());
  thresholds.erase(l.top());
  if (thresholds.empty()) {
    tally.add("lattice has no threshold candidate");
    return std::nullopt;
  }
  const ElementId rho = rng.pick(thresholds);
  const ElementSet inner = v.down(rho);
  const ElementId e = rng.pick(inner);
  ElementSet anchors;
  for (ElementId x : l.all()) {
    if (classify_anchor(l, eq, e, rho, x) == anchor_class) anchors.insert(x);
  }
  if (anchors.empty()) {
    tally.add("anchor class " + std::string(to_string(anchor_class, eq)) + " empty");
    return std::nullopt;
  }
  const ElementId q = rng.pick(anchors);
  if (want_hypotheses) {
    if (auto th = theorem_for(eq, anchor_class)) {
      // Clause checks do not depend on the inner operation, so test them before generating it.
      OpTable placeholder = OpTable::from_function(lp, inner, [](ElementId a, ElementId) { return a; });
      HypothesisReport rep = check_hypotheses(ConstructionSpec{lp, eq, rho, e, q, placeholder}, *th);
      if (!rep.pairs.holds()) {
        tally.add(rep.pairs.name);
        return std::nullopt;
      }
      if (!rep.anchor.holds()) {
        tally.add(rep.anchor.name);
        return std::nullopt;
      }
    }
  }
  GenConfig sub = derive(cfg, rng.next());
  if (want_hypotheses && sub.class_filter == ClassFilter::none) {
    sub.class_filter = eq == Equation::eq1 ? ClassFilter::ub : ClassFilter::ut;
  }
  OpTable u = gen_uninorm(lp, inner, e, sub);
  return ConstructionSpec{lp, eq, rho, e, q, std::move(u)};
}

}  // namespace

std::string_view to_string(ClassFilter f) {
  switch (f) {
    case ClassFilter::none: return "none";
    case ClassFilter::ub: return "U_b";
    case ClassFilter::ut: return "U_t";
    case ClassFilter::umin: return "U_min";
    case ClassFilter::umax: return "U_max";
  }
  return "?";
}

void validate(const GenConfig& cfg) {
  if (cfg.min_size < 2 || cfg.min_size > cfg.max_size || cfg.max_size > kGenMaxSize) {
    throw InvalidConfig("size range must satisfy 2 <= min <= max <= " + std::to_string(kGenMaxSize) + ", got (" +
                        std::to_string(cfg.min_size) + ", " + std::to_string(cfg.max_size) + ")");
  }
  if (!(cfg.density >= 0.0 && cfg.density <= 1.0)) throw InvalidConfig("density must lie in [0, 1]");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

GenConfig derive(const GenConfig& cfg, std::uint64_t index) {
  GenConfig out = cfg;
  out.seed = mix_seed(cfg.seed, index);
  return out;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(mix_seed(seed, stream)) {}

std::uint64_t Rng::next() { return engine_(); }

std::size_t Rng::below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

ElementId Rng::pick(ElementSet s) {
  std::size_t k = below(s.size());
  for (ElementId x : s) {
    if (k-- == 0) return x;
  }
  throw InvalidConfig("pick from an empty set");
}

BoundedLattice gen_lattice(const GenConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed, 1);
  std::string last;
  for (std::size_t attempt = 0; attempt < kAttemptCap; ++attempt) {
    const std::size_t n = cfg.min_size + rng.below(cfg.max_size - cfg.min_size + 1);
    std::vector<std::string> names{"0"};
    for (std::size_t i = 1; i + 1 < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    names.push_back("1");
    // Interior elements are dealt into consecutive nonempty layers; each element covers some
    // elements of the previous layer (at least one) and occasionally elements further down.
    const std::size_t interior = n - 2;
    std::vector<std::size_t> layer(n, 0);
    if (interior > 0) {
      const std::size_t layers = 1 + rng.below(interior);
      std::vector<std::size_t> sizes(layers, 1);
      for (std::size_t k = layers; k < interior; ++k) ++sizes[rng.below(layers)];
      std::size_t id = 1;
      for (std::size_t k = 0; k < layers; ++k) {
        for (std::size_t m = 0; m < sizes[k]; ++m) layer[id++] = k + 1;
      }
    }
    std::vector<std::pair<std::string, std::string>> covers;
    std::vector<bool> has_upper(n, false);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      std::vector<std::size_t> previous;
      std::vector<std::size_t> lower;
      for (std::size_t j = 0; j < i; ++j) {
        if (layer[j] + 1 == layer[i]) {
          previous.push_back(j);
          if (rng.chance(cfg.density)) lower.push_back(j);
        } else if (layer[j] + 1 < layer[i] && j != 0 && rng.chance(cfg.density / 4)) {
          lower.push_back(j);
        }
      }
      if (std::none_of(lower.begin(), lower.end(), [&](std::size_t j) { return layer[j] + 1 == layer[i]; })) {
        lower.push_back(previous[rng.below(previous.size())]);
      }
      for (std::size_t j : lower) {
        covers.emplace_back(names[j], names[i]);
        has_upper[j] = true;
      }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!has_upper[i]) covers.emplace_back(names[i], names[n - 1]);
    }
    try {
      return BoundedLattice::build(names, covers);
    } catch (const NotALattice& err) {
      last = err.what();
    }
  }
  throw ExhaustedRejection("no lattice after " + std::to_string(kAttemptCap) +
                           " attempts; binding constraint: unique joins/meets (last: " + last + ")");
}

bool passes_filter(const OpTable& t, ElementId e, ClassFilter f) {
  switch (f) {
    case ClassFilter::none: return true;
    case ClassFilter::ub: return in_class_ub(t, e);
    case ClassFilter::ut: return in_class_ut(t, e);
    case ClassFilter::umin: return in_class_umin(t, e);
    case ClassFilter::umax: return in_class_umax(t, e);
  }
  return false;
}

OpTable gen_uninorm(const LatticePtr& l, ElementSet carrier, ElementId e, const GenConfig& cfg) {
  if (!carrier.contains(e)) throw NeutralOutsideCarrier("neutral element " + l->name(e) + " is not in the carrier");
  const ElementId lo = least_of(*l, carrier, false);
  const ElementId hi = least_of(*l, carrier, true);
  if (carrier != l->interval(lo, hi)) throw NotAnInterval("carrier " + describe(*l, carrier) + " is not an interval");
  Rng rng(cfg.seed, 2);
  for (std::size_t attempt = 0; attempt < kAttemptCap; ++attempt) {
    bool upper_base = false;
    switch (cfg.class_filter) {
      case ClassFilter::ub:
      case ClassFilter::umax: upper_base = false; break;
      case ClassFilter::ut:
      case ClassFilter::umin: upper_base = true; break;
      case ClassFilter::none: upper_base = rng.chance(0.5); break;
    }
    const View v{*l, upper_base};
    Grid g = dominated_uninorm(v, carrier, upper_base ? hi : lo, upper_base ? lo : hi, e, rng);
    OpTable t = to_table(l, carrier, g);
    if (!is_uninorm(t, e).passed() || !passes_filter(t, e, cfg.class_filter)) continue;

    // Random walk over symmetric cell pairs, keeping only moves that stay inside the target set.
    std::vector<ElementId> free;
    for (ElementId x : carrier) {
      if (x != e) free.push_back(x);
    }
    const std::size_t steps = free.empty() ? 0 : 3 * carrier.size();
    for (std::size_t s = 0; s < steps; ++s) {
      ElementId a = free[rng.below(free.size())];
      ElementId b = free[rng.below(free.size())];
      ElementId value = rng.pick(carrier);
      ElementId old = cell(g, a, b);
      if (old == value) continue;
      cell(g, a, b) = value;
      cell(g, b, a) = value;
      OpTable candidate = to_table(l, carrier, g);
      if (is_uninorm(candidate, e).passed() && passes_filter(candidate, e, cfg.class_filter)) {
        t = std::move(candidate);
      } else {
        cell(g, a, b) = old;
        cell(g, b, a) = old;
      }
    }
    return t;
  }
  throw ExhaustedRejection("no uninorm in class " + std::string(to_string(cfg.class_filter)) + " after " +
                           std::to_string(kAttemptCap) + " attempts");
}

std::optional<Theorem> theorem_for(Equation eq, AnchorClass c) {
  const bool one = eq == Equation::eq1;
  switch (c) {
    case AnchorClass::between:
    case AnchorClass::neutral_incomparable: return one ? Theorem::th31 : Theorem::th34;
    case AnchorClass::threshold_incomparable: return one ? Theorem::th33 : Theorem::th36;
    case AnchorClass::other: return std::nullopt;
  }
  return std::nullopt;
}

ConstructionSpec gen_spec_on(const LatticePtr& l, const GenConfig& cfg, AnchorClass anchor_class,
                             bool want_hypotheses, Equation eq) {
  validate(cfg);
  Rng rng(cfg.seed, 3);
  Tally tally;
  for (std::size_t attempt = 0; attempt < kAttemptCap; ++attempt) {
    if (auto s = try_spec_on(l, cfg, anchor_class, want_hypotheses, eq, rng, tally)) return std::move(*s);
  }
  throw ExhaustedRejection("no spec after " + std::to_string(kAttemptCap) + " attempts; binding constraint: " +
                           tally.binding());
}

ConstructionSpec gen_spec(const GenConfig& cfg, AnchorClass anchor_class, bool want_hypotheses, Equation eq) {
  validate(cfg);
  Rng rng(cfg.seed, 4);
  Tally tally;
  constexpr std::size_t kTriesPerLattice = 8;
  for (std::size_t attempt = 0; attempt < kAttemptCap;) {
    auto lp = std::make_shared<const BoundedLattice>(gen_lattice(derive(cfg, rng.next())));
    for (std::size_t k = 0; k < kTriesPerLattice && attempt < kAttemptCap; ++k, ++attempt) {
      if (auto s = try_spec_on(lp, cfg, anchor_class, want_hypotheses, eq, rng, tally)) return std::move(*s);
    }
  }
  throw ExhaustedRejection("no spec after " + std::to_string(kAttemptCap) + " attempts; binding constraint: " +
                           tally.binding());
}

ConstructionSpec gen_spec_targeted(const GenConfig& cfg, Theorem th, bool parallel_holds) {
  validate(cfg);
  const Equation eq = equation_of(th);
  Rng rng(cfg.seed, 5);
  GenConfig shape = cfg;
  shape.min_size = std::max(cfg.min_size, cfg.max_size - std::min<std::size_t>(cfg.max_size, 1));
  for (std::size_t attempt = 0; attempt < kAttemptCap; ++attempt) {
    GenConfig lc = derive(shape, rng.next());
    lc.density = 0.2 + 0.45 * rng.uniform();
    auto lp = std::make_shared<const BoundedLattice>(gen_lattice(lc));
    const BoundedLattice& l = *lp;
    struct Placement {
      ElementId threshold, neutral, anchor;
    };
    std::vector<Placement> found;
    for (ElementId t : l.all()) {
      if (t == l.bottom() || t == l.top()) continue;
      const ElementSet inner = inner_carrier(l, eq, t);
      OpTable placeholder = OpTable::from_function(lp, inner, [](ElementId a, ElementId) { return a; });
      for (ElementId e : inner) {
        for (ElementId q : l.all()) {
          HypothesisReport h = check_hypotheses(ConstructionSpec{lp, eq, t, e, q, placeholder}, th);
          if (h.anchor_ok && h.pairs.holds() && h.anchor.holds() && h.parallel.holds() == parallel_holds) {
            found.push_back({t, e, q});
          }
        }
      }
    }
    if (found.empty()) continue;
    const Placement p = found[rng.below(found.size())];
    GenConfig ic = derive(cfg, rng.next());
    ic.class_filter = eq == Equation::eq1 ? ClassFilter::ub : ClassFilter::ut;
    OpTable u = gen_uninorm(lp, inner_carrier(l, eq, p.threshold), p.neutral, ic);
    return ConstructionSpec{lp, eq, p.threshold, p.neutral, p.anchor, std::move(u)};
  }
  throw ExhaustedRejection("no lattice with a placement where the " + std::string(to_string(th)) +
                           " iff-condition is " + (parallel_holds ? "true" : "false") + " after " +
                           std::to_string(kAttemptCap) + " lattices");
}

FuzzInstance gen_fuzz_instance(const GenConfig& base, Theorem th, std::uint64_t index) {
  const Equation eq = equation_of(th);
  GenConfig c = derive(base, index);
  c.class_filter = eq == Equation::eq1 ? ClassFilter::ub : ClassFilter::ut;
  c.density = 0.15 + 0.5 * static_cast<double>(index % 7) / 6.0;
  const bool pairwise = th == Theorem::th31 || th == Theorem::th34;
  const AnchorClass ac = !pairwise          ? AnchorClass::threshold_incomparable
                         : (index % 2 == 0) ? AnchorClass::between
                                            : AnchorClass::neutral_incomparable;
  bool fell_back = false;
  if (index % 4 == 3) {
    try {
      return {gen_spec_targeted(c, th, false), false};
    } catch (const ExhaustedRejection&) {
      fell_back = true;
    }
  }
  return {gen_spec(c, ac, true, eq), fell_back};
}

std::vector<OpTable> enumerate_uninorms(const LatticePtr& l, ElementSet carrier, ElementId e) {
  if (carrier.size() > 4) throw InvalidConfig("exhaustive enumeration is limited to carriers of at most 4 elements");
  if (!carrier.contains(e)) throw NeutralOutsideCarrier("neutral element " + l->name(e) + " is not in the carrier");
  const std::vector<ElementId> el = carrier.elements();
  std::vector<std::pair<ElementId, ElementId>> free;
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i; j < el.size(); ++j) {
      if (el[i] != e && el[j] != e) free.emplace_back(el[i], el[j]);
    }
  }
  Grid g(kMaxElements * kMaxElements);
  for (ElementId x : el) {
    cell(g, e, x) = x;
    cell(g, x, e) = x;
  }
  std::vector<OpTable> out;
  std::vector<std::size_t> digit(free.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < free.size(); ++k) {
      cell(g, free[k].first, free[k].second) = el[digit[k]];
      cell(g, free[k].second, free[k].first) = el[digit[k]];
    }
    OpTable t = to_table(l, carrier, g);
    if (is_uninorm(t, e).passed()) out.push_back(std::move(t));
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == el.size()) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  return out;
}

}  // namespace uninorm
