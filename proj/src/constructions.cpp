#include "uninorm/constructions.hpp"

#include <sstream>

namespace uninorm {

namespace {

// The lattice seen in the orientation of Eq. 1; for Eq. 2 the order is reversed so that both
// equations share one implementation.
struct View {
  const BoundedLattice& l;
  bool flip;

  View(const BoundedLattice& lattice, Equation eq) : l(lattice), flip(eq == Equation::eq2) {}

  bool leq(ElementId a, ElementId b) const { return flip ? l.leq(b, a) : l.leq(a, b); }
  bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  ElementId join(ElementId a, ElementId b) const { return flip ? l.meet(a, b) : l.join(a, b); }
  ElementId top() const { return flip ? l.bottom() : l.top(); }
  ElementId bottom() const { return flip ? l.top() : l.bottom(); }
  ElementSet down(ElementId a) const { return flip ? l.up_set(a) : l.down_set(a); }
  ElementSet up(ElementId a) const { return flip ? l.down_set(a) : l.up_set(a); }
  ElementSet incomparable(ElementId a) const { return l.incomparable(a); }
  ElementSet comparable(ElementId a) const { return l.comparable_set(a); }
};

struct Regions {
  ElementSet below_e;            // [0, e]
  ElementSet inner;              // [0, rho]
  ElementSet incomparable_both;  // I_{e,rho}
  ElementSet e_only;             // I_e^rho
  ElementSet rho_only;           // I_rho^e
};

Regions regions(const View& v, ElementId e, ElementId rho) {
  Regions r;
  r.below_e = v.down(e);
  r.inner = v.down(rho);
  r.incomparable_both = v.incomparable(e) & v.incomparable(rho);
  r.e_only = v.incomparable(e) & v.comparable(rho);
  r.rho_only = v.incomparable(rho) & v.comparable(e);
  return r;
}

std::string nm(const BoundedLattice& l, ElementId x) { return l.name(x); }

OpTable build(const ConstructionSpec& spec, InnerCheck check, Equation eq) {
  if (spec.equation != eq) {
    throw SpecInvalid(std::string("spec is for Eq. ") + (spec.equation == Equation::eq1 ? "1" : "2"));
  }
  validate(spec, check);
  const BoundedLattice& l = *spec.lattice;
  const View v(l, eq);
  const Regions r = regions(v, spec.neutral, spec.threshold);
  const ElementId q = spec.anchor;
  return OpTable::from_function(spec.lattice, l.all(), [&](ElementId x, ElementId y) {
    const bool xi = r.inner.contains(x);
    const bool yi = r.inner.contains(y);
    if (xi && yi) return spec.inner.at(x, y);
    if (!xi && r.below_e.contains(y)) return x;
    if (r.below_e.contains(x) && !yi) return y;
    if (r.incomparable_both.contains(x) && r.incomparable_both.contains(y)) return v.join(v.join(x, y), q);
    return v.top();
  });
}

}  // namespace

Equation equation_of(Theorem th) {
  return th == Theorem::th31 || th == Theorem::th33 ? Equation::eq1 : Equation::eq2;
}

std::string_view to_string(Theorem th) {
  switch (th) {
    case Theorem::th31: return "th31";
    case Theorem::th33: return "th33";
    case Theorem::th34: return "th34";
    case Theorem::th36: return "th36";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view s) {
  for (Theorem th : {Theorem::th31, Theorem::th33, Theorem::th34, Theorem::th36}) {
    if (to_string(th) == s) return th;
  }
  return std::nullopt;
}

ElementSet inner_carrier(const BoundedLattice& l, Equation eq, ElementId threshold) {
  return eq == Equation::eq1 ? l.down_set(threshold) : l.up_set(threshold);
}

void validate(const ConstructionSpec& spec, InnerCheck check) {
  if (!spec.lattice) throw SpecInvalid("spec has no lattice");
  const BoundedLattice& l = *spec.lattice;
  if (spec.inner.lattice_ptr() != spec.lattice && !(spec.inner.lattice() == l)) {
    throw SpecInvalid("inner table belongs to a different lattice");
  }
  for (ElementId x : {spec.threshold, spec.neutral, spec.anchor}) {
    if (x.index() >= l.size()) throw SpecInvalid("spec element id out of range");
  }
  const View v(l, spec.equation);
  const char* tname = spec.equation == Equation::eq1 ? "rho" : "sigma";
  if (spec.threshold == v.bottom()) {
    throw SpecInvalid(std::string(tname) + " must not be " + (spec.equation == Equation::eq1 ? "bottom" : "top"));
  }
  if (!v.leq(spec.neutral, spec.threshold)) {
    throw SpecInvalid(spec.equation == Equation::eq1 ? "neutral element must lie below rho"
                                                     : "neutral element must lie above sigma");
  }
  const ElementSet want = inner_carrier(l, spec.equation, spec.threshold);
  if (spec.inner.carrier() != want) {
    throw SpecInvalid("inner carrier " + describe(l, spec.inner.carrier()) + " differs from required interval " +
                      describe(l, want));
  }
  if (check == InnerCheck::verify) {
    AxiomReport rep = is_uninorm(spec.inner, spec.neutral);
    if (!rep.passed()) {
      throw SpecInvalid("inner operation is not a uninorm with neutral " + nm(l, spec.neutral) + ":\n" +
                        format_report(spec.inner, rep));
    }
  }
}

OpTable construct_eq1(const ConstructionSpec& spec, InnerCheck check) { return build(spec, check, Equation::eq1); }

OpTable construct_eq2(const ConstructionSpec& spec, InnerCheck check) { return build(spec, check, Equation::eq2); }

OpTable construct(const ConstructionSpec& spec, InnerCheck check) { return build(spec, check, spec.equation); }

OpTable construct_th021_tnorm(const LatticePtr& l, ElementId threshold, const OpTable& v) {
  const ElementSet upper = l->up_set(threshold);
  if (v.carrier() != upper) throw SpecInvalid("V must be defined on " + describe(*l, upper));
  if (!is_t_norm(v).passed()) throw SpecInvalid("V is not a t-norm on " + describe(*l, upper));
  return OpTable::from_function(l, l->all(), [&](ElementId x, ElementId y) {
    if (upper.contains(x) && upper.contains(y)) return v.at(x, y);
    if (x == l->top() || y == l->top()) return l->meet(x, y);
    return l->bottom();
  });
}

OpTable construct_th021_tconorm(const LatticePtr& l, ElementId threshold, const OpTable& w) {
  const ElementSet lower = l->down_set(threshold);
  if (w.carrier() != lower) throw SpecInvalid("W must be defined on " + describe(*l, lower));
  if (!is_t_conorm(w).passed()) throw SpecInvalid("W is not a t-conorm on " + describe(*l, lower));
  return OpTable::from_function(l, l->all(), [&](ElementId x, ElementId y) {
    if (lower.contains(x) && lower.contains(y)) return w.at(x, y);
    if (x == l->bottom() || y == l->bottom()) return l->join(x, y);
    return l->top();
  });
}

std::string_view to_string(AnchorClass c, Equation eq) {
  const bool one = eq == Equation::eq1;
  switch (c) {
    case AnchorClass::between: return one ? "(0,e)" : "(e,1)";
    case AnchorClass::neutral_incomparable: return one ? "I_e^rho" : "I_e^sigma";
    case AnchorClass::threshold_incomparable: return one ? "I_rho^e" : "I_sigma^e";
    case AnchorClass::other: return "other";
  }
  return "?";
}

AnchorClass classify_anchor(const BoundedLattice& l, Equation eq, ElementId neutral, ElementId threshold,
                            ElementId anchor) {
  const View v(l, eq);
  if (anchor != v.bottom() && v.lt(anchor, neutral)) return AnchorClass::between;
  const bool par_e = l.parallel(anchor, neutral);
  const bool par_t = l.parallel(anchor, threshold);
  if (par_e && !par_t) return AnchorClass::neutral_incomparable;
  if (!par_e && par_t) return AnchorClass::threshold_incomparable;
  return AnchorClass::other;
}

std::optional<std::string> HypothesisReport::failed_clause() const {
  const Equation eq = equation_of(theorem);
  if (!anchor_ok) return std::string("anchor-class");
  if (!pairs.holds()) return pairs.name;
  if (!anchor.holds()) return anchor.name;
  if (!inner_class.holds) return std::string(eq == Equation::eq1 ? "inner-ub" : "inner-ut");
  return std::nullopt;
}

std::vector<std::string> clause_names(Theorem th) {
  const bool one = equation_of(th) == Equation::eq1;
  const std::string op = one ? "join" : "meet";
  std::vector<std::string> out;
  if (th == Theorem::th31 || th == Theorem::th34) out.push_back(op + "-pairs");
  out.push_back(op + "-anchor");
  return out;
}

HypothesisReport check_hypotheses(const ConstructionSpec& spec, Theorem th) {
  const Equation eq = equation_of(th);
  if (spec.equation != eq) {
    throw SpecInvalid(std::string(to_string(th)) + " concerns Eq. " + (eq == Equation::eq1 ? "1" : "2"));
  }
  validate(spec, InnerCheck::skip);
  const BoundedLattice& l = *spec.lattice;
  const View v(l, eq);
  if (spec.threshold == v.top()) {
    throw SpecInvalid("theorem checkers require the threshold to differ from bottom and top");
  }
  const ElementId e = spec.neutral;
  const ElementId q = spec.anchor;
  const Regions r = regions(v, e, spec.threshold);
  const std::string op = eq == Equation::eq1 ? "join" : "meet";

  HypothesisReport rep;
  rep.theorem = th;
  rep.anchor_class = classify_anchor(l, eq, e, spec.threshold, q);
  const bool pairwise_theorem = th == Theorem::th31 || th == Theorem::th34;
  rep.anchor_ok = pairwise_theorem ? (rep.anchor_class == AnchorClass::between ||
                                      rep.anchor_class == AnchorClass::neutral_incomparable)
                                   : rep.anchor_class == AnchorClass::threshold_incomparable;

  rep.pairs.name = op + "-pairs";
  rep.pairs.applicable = pairwise_theorem;
  if (pairwise_theorem) {
    for (ElementId a : r.incomparable_both) {
      for (ElementId b : r.incomparable_both) {
        if (a < b && v.join(a, b) != v.top()) rep.pairs.witnesses.push_back({a, b});
      }
    }
  }

  rep.anchor.name = op + "-anchor";
  for (ElementId a : r.incomparable_both & l.incomparable(q)) {
    if (v.join(a, q) != v.top()) rep.anchor.witnesses.push_back({a});
  }

  rep.parallel.name = "parallel";
  for (ElementId a : r.incomparable_both & l.comparable_set(q)) {
    for (ElementId b : r.e_only) {
      if (l.comparable(a, b)) rep.parallel.witnesses.push_back({a, b});
    }
  }

  rep.inner_class = eq == Equation::eq1 ? check_ub(spec.inner, e) : check_ut(spec.inner, e);

  ElementSet beyond = v.up(spec.threshold);
  beyond.erase(spec.threshold);
  beyond.erase(v.top());
  rep.guard = r.rho_only | r.incomparable_both | beyond;
  return rep;
}

std::string format_report(const BoundedLattice& l, const HypothesisReport& r) {
  const Equation eq = equation_of(r.theorem);
  std::ostringstream os;
  auto clause = [&](const ClauseResult& c) {
    os << c.name << ": ";
    if (!c.applicable) {
      os << "n/a\n";
      return;
    }
    if (c.holds()) {
      os << "pass\n";
      return;
    }
    os << "FAIL";
    for (const auto& w : c.witnesses) {
      os << " (";
      for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << l.name(w[i]);
      os << ')';
    }
    os << '\n';
  };
  os << "theorem: " << to_string(r.theorem) << '\n';
  os << "anchor-class: " << to_string(r.anchor_class, eq) << (r.anchor_ok ? " (ok)" : " (not covered)") << '\n';
  clause(r.pairs);
  clause(r.anchor);
  os << (eq == Equation::eq1 ? "inner-ub: " : "inner-ut: ");
  if (r.inner_class.holds) {
    os << "pass\n";
  } else {
    os << "FAIL at (" << l.name(r.inner_class.witness->a) << "," << l.name(r.inner_class.witness->b) << ")\n";
  }
  os << "guard: " << (r.nonempty_guard() ? "nonempty " : "empty ") << describe(l, r.guard) << '\n';
  clause(r.parallel);
  return os.str();
}

bool predict_uninorm(const ConstructionSpec& spec, Theorem th) {
  HypothesisReport r = check_hypotheses(spec, th);
  if (auto failed = r.failed_clause()) {
    throw HypothesesNotMet("standing hypothesis '" + *failed + "' of " + std::string(to_string(th)) + " fails");
  }
  return r.parallel.holds();
}

ConstructionSpec dual_spec(const ConstructionSpec& spec, const LatticePtr& dual_lattice) {
  std::vector<ElementId> values = spec.inner.values();
  OpTable inner(dual_lattice, spec.inner.carrier(), values);
  return ConstructionSpec{dual_lattice, spec.equation == Equation::eq1 ? Equation::eq2 : Equation::eq1,
                          spec.threshold, spec.neutral, spec.anchor, std::move(inner)};
}

std::vector<ElementSet> threshold_regions(const BoundedLattice& l, Equation eq, ElementId neutral,
                                          ElementId threshold) {
  const View v(l, eq);
  const Regions r = regions(v, neutral, threshold);
  ElementSet above_e = r.inner - r.below_e - r.e_only;
  ElementSet beyond = v.up(threshold);
  beyond.erase(threshold);
  return {r.below_e, above_e, r.e_only, r.rho_only, r.incomparable_both, beyond};
}

}  // namespace uninorm
