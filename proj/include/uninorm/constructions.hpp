#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uninorm/optable.hpp"

namespace uninorm {

// Eq. 1 extends an inner uninorm on [0, threshold] using joins with the anchor; Eq. 2 is the
// order dual, extending an inner uninorm on [threshold, 1] using meets.
enum class Equation { eq1, eq2 };

enum class Theorem { th31, th33, th34, th36 };

Equation equation_of(Theorem th);
std::string_view to_string(Theorem th);
std::optional<Theorem> parse_theorem(std::string_view s);

struct ConstructionSpec {
  LatticePtr lattice;
  Equation equation = Equation::eq1;
  ElementId threshold;
  ElementId neutral;
  ElementId anchor;
  OpTable inner;
};

enum class InnerCheck { verify, skip };

// Throws SpecInvalid naming the first violated invariant.
void validate(const ConstructionSpec& spec, InnerCheck check = InnerCheck::verify);

// Carrier the inner operation must live on: [bottom, threshold] or [threshold, top].
ElementSet inner_carrier(const BoundedLattice& l, Equation eq, ElementId threshold);

// Total constructions: every cell is defined whether or not any theorem hypothesis holds.
OpTable construct_eq1(const ConstructionSpec& spec, InnerCheck check = InnerCheck::verify);
OpTable construct_eq2(const ConstructionSpec& spec, InnerCheck check = InnerCheck::verify);
OpTable construct(const ConstructionSpec& spec, InnerCheck check = InnerCheck::verify);

// T(x, y) = V(x, y) on [threshold, 1]^2, x ^ y when 1 is an argument, 0 otherwise.
OpTable construct_th021_tnorm(const LatticePtr& l, ElementId threshold, const OpTable& v);
// S(x, y) = W(x, y) on [0, threshold]^2, x v y when 0 is an argument, 1 otherwise.
OpTable construct_th021_tconorm(const LatticePtr& l, ElementId threshold, const OpTable& w);

// Position of the anchor relative to neutral and threshold. For Eq. 1: (0, e), I_e^rho, I_rho^e;
// for Eq. 2 the duals (e, 1), I_e^sigma, I_sigma^e.
enum class AnchorClass { between, neutral_incomparable, threshold_incomparable, other };

std::string_view to_string(AnchorClass c, Equation eq);

AnchorClass classify_anchor(const BoundedLattice& l, Equation eq, ElementId neutral, ElementId threshold,
                            ElementId anchor);

struct ClauseResult {
  std::string name;
  bool applicable = true;
  // Each witness lists the elements that violate the clause.
  std::vector<std::vector<ElementId>> witnesses;

  bool holds() const { return !applicable || witnesses.empty(); }
};

struct HypothesisReport {
  Theorem theorem = Theorem::th31;
  AnchorClass anchor_class = AnchorClass::other;
  bool anchor_ok = false;
  // "x v y = 1 for distinct x, y in I_{e,rho}" (meet/0 dually); not applicable to th33/th36.
  ClauseResult pairs;
  // "x v q = 1 for x in I_{e,rho} that are incomparable with q".
  ClauseResult anchor;
  // The iff-condition: x parallel y for x in I_{e,rho} comparable with q and y in I_e^rho.
  ClauseResult parallel;
  // Inner in U_b for th31/th33, in U_t for th34/th36.
  ClassCheck inner_class;
  // I_rho^e u I_{e,rho} u (rho, 1), or its dual.
  ElementSet guard;

  bool nonempty_guard() const { return !guard.empty(); }
  bool standing_ok() const { return anchor_ok && pairs.holds() && anchor.holds() && inner_class.holds; }
  // Name of the first failing standing clause, if any.
  std::optional<std::string> failed_clause() const;
};

HypothesisReport check_hypotheses(const ConstructionSpec& spec, Theorem th);
inline HypothesisReport check_th31(const ConstructionSpec& s) { return check_hypotheses(s, Theorem::th31); }
inline HypothesisReport check_th33(const ConstructionSpec& s) { return check_hypotheses(s, Theorem::th33); }
inline HypothesisReport check_th34(const ConstructionSpec& s) { return check_hypotheses(s, Theorem::th34); }
inline HypothesisReport check_th36(const ConstructionSpec& s) { return check_hypotheses(s, Theorem::th36); }

std::string format_report(const BoundedLattice& l, const HypothesisReport& r);

// Truth value of the theorem's iff-condition. Throws HypothesesNotMet naming the failed clause.
bool predict_uninorm(const ConstructionSpec& spec, Theorem th);

// Clause names accepted by check/drop descriptors for a theorem.
std::vector<std::string> clause_names(Theorem th);

// Spec with the same element ids on the dual lattice, inner table transported unchanged.
ConstructionSpec dual_spec(const ConstructionSpec& spec, const LatticePtr& dual_lattice);

// The partition of the lattice used by Eq. 1 (Eq. 2 dually): [0,e], (e,rho], I_e^rho,
// I_rho^e, I_{e,rho}, (rho,1]. Empty classes are kept so indices stay fixed.
std::vector<ElementSet> threshold_regions(const BoundedLattice& l, Equation eq, ElementId neutral,
                                          ElementId threshold);

}  // namespace uninorm
