#include "uninorm/verification.hpp"

#include "uninorm/corpus.hpp"
#include "uninorm/kernels.hpp"

namespace uninorm {

Partition::Partition(std::vector<ElementSet> classes, ElementSet carrier) : classes_(std::move(classes)) {
  ElementSet seen;
  for (ElementSet c : classes_) {
    if (c.empty()) throw SpecInvalid("partition has an empty class");
    if (!(c & seen).empty()) throw SpecInvalid("partition classes overlap");
    seen = seen | c;
  }
  if (seen != carrier) throw SpecInvalid("partition does not cover the carrier exactly");
}

Partition Partition::from_regions(const std::vector<ElementSet>& regions, ElementSet carrier) {
  std::vector<ElementSet> kept;
  for (ElementSet r : regions) {
    if (!r.empty()) kept.push_back(r);
  }
  return Partition(std::move(kept), carrier);
}

std::optional<TripleWitness> naive_associativity(const OpTable& t) {
  for (ElementId a : t.carrier()) {
    for (ElementId b : t.carrier()) {
      for (ElementId c : t.carrier()) {
        ElementId ab = t.at(a, b);
        ElementId bc = t.at(b, c);
        if (!t.carrier().contains(ab) || !t.carrier().contains(bc)) return TripleWitness{a, b, c};
        if (t.at(ab, c) != t.at(a, bc)) return TripleWitness{a, b, c};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Evaluator {
  const OpTable& t;
  // Value of U(x, U(y, z)); nullopt when the inner value leaves the carrier.
  std::optional<ElementId> right(ElementId x, ElementId y, ElementId z) const {
    ElementId yz = t.at(y, z);
    if (!t.carrier().contains(yz)) return std::nullopt;
    return t.at(x, yz);
  }
  std::optional<ElementId> left(ElementId x, ElementId y, ElementId z) const {
    ElementId xy = t.at(x, y);
    if (!t.carrier().contains(xy)) return std::nullopt;
    return t.at(xy, z);
  }
};

}  // namespace

std::optional<PartitionedWitness> assoc_partitioned(const OpTable& t, const Partition& p) {
  if (!t.closed()) throw SpecInvalid("partitioned associativity needs a closed table");
  const kernels::KernelSet& k = kernels::active();
  if (auto w = k.first_noncommutative(t.ids_bytes(), t.ids_transposed_bytes(), t.order())) {
    const auto& el = t.carrier_elements();
    throw NotCommutative("table is not commutative at (" + t.lattice().name(el[w->a]) + ", " +
                         t.lattice().name(el[w->b]) + ")");
  }
  const Evaluator ev{t};
  const auto& cls = p.classes();
  const std::size_t m = cls.size();

  // (i) three distinct classes: U(x,U(y,z)) = U(U(x,y),z) = U(y,U(x,z)).
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t l = j + 1; l < m; ++l) {
        for (ElementId x : cls[i]) {
          for (ElementId y : cls[j]) {
            for (ElementId z : cls[l]) {
              auto a = ev.right(x, y, z);
              auto b = ev.left(x, y, z);
              auto c = ev.right(y, x, z);
              if (a != b) return PartitionedWitness{AssocClause::three_classes, {x, y, z}};
              // U(U(x,y),z) = U(U(y,x),z), so this bracketing fails at (y, x, z).
              if (b != c) return PartitionedWitness{AssocClause::three_classes, {y, x, z}};
            }
          }
        }
      }
    }
  }
  // (ii) x, y from one class and z from another; (iii) x from one class and y, z from another.
  // Both run over ordered pairs of classes, so either class may play either role.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (ElementId x : cls[i]) {
        for (ElementId y : cls[i]) {
          for (ElementId z : cls[j]) {
            if (ev.right(x, y, z) != ev.left(x, y, z)) return PartitionedWitness{AssocClause::pair_first, {x, y, z}};
          }
        }
      }
      for (ElementId x : cls[i]) {
        for (ElementId y : cls[j]) {
          for (ElementId z : cls[j]) {
            if (ev.right(x, y, z) != ev.left(x, y, z)) return PartitionedWitness{AssocClause::pair_last, {x, y, z}};
          }
        }
      }
    }
  }
  // (iv) within a class.
  for (std::size_t i = 0; i < m; ++i) {
    for (ElementId x : cls[i]) {
      for (ElementId y : cls[i]) {
        for (ElementId z : cls[i]) {
          if (ev.right(x, y, z) != ev.left(x, y, z)) return PartitionedWitness{AssocClause::within_class, {x, y, z}};
        }
      }
    }
  }
  return std::nullopt;
}

EquivalenceVerdict verify_equivalence(const ConstructionSpec& spec, Theorem th) {
  EquivalenceVerdict v;
  v.predicted = predict_uninorm(spec, th);
  OpTable table = construct(spec, InnerCheck::skip);
  AxiomReport rep = is_uninorm(table, spec.neutral);
  v.observed = rep.passed();
  v.agree = v.predicted == v.observed;
  if (!v.observed) v.counterwitness = rep;
  return v;
}

ClauseDrop make_clause_drop(Theorem th, const std::string& clause) {
  if (clause == "none" || clause.empty()) return ClauseDrop{th, std::nullopt};
  for (const auto& name : clause_names(th)) {
    if (name == clause) return ClauseDrop{th, clause};
  }
  std::string known;
  for (const auto& name : clause_names(th)) known += (known.empty() ? "" : ", ") + name;
  throw UnknownClause("unknown clause '" + clause + "' for " + std::string(to_string(th)) + " (known: " + known +
                      ", none)");
}

std::optional<Counterexample> qualify(const ConstructionSpec& spec, const ClauseDrop& drop, std::string source) {
  if (spec.equation != equation_of(drop.theorem)) return std::nullopt;
  HypothesisReport h = check_hypotheses(spec, drop.theorem);
  if (!h.anchor_ok || !h.inner_class.holds || !h.parallel.holds()) return std::nullopt;
  for (const ClauseResult* c : {&h.pairs, &h.anchor}) {
    const bool dropped = drop.clause && *drop.clause == c->name;
    if (dropped ? c->holds() : !c->holds()) return std::nullopt;
  }
  if (!is_uninorm(spec.inner, spec.neutral).passed()) return std::nullopt;
  OpTable table = construct(spec, InnerCheck::skip);
  AxiomReport rep = is_uninorm(table, spec.neutral);
  if (rep.passed()) return std::nullopt;
  return Counterexample{spec, std::move(h), std::move(table), rep, std::move(source)};
}

namespace {

// Every (threshold, neutral, anchor) placement on one lattice; the inner operation is generated
// only for placements whose clauses qualify.
std::optional<Counterexample> search_lattice(const LatticePtr& lp, const ClauseDrop& drop, const GenConfig& c,
                                             const std::string& source) {
  const Equation eq = equation_of(drop.theorem);
  const BoundedLattice& l = *lp;
  for (ElementId th : l.all()) {
    if (th == l.bottom() || th == l.top()) continue;
    const ElementSet inner = inner_carrier(l, eq, th);
    OpTable placeholder = OpTable::from_function(lp, inner, [](ElementId a, ElementId) { return a; });
    for (ElementId e : inner) {
      for (ElementId q : l.all()) {
        HypothesisReport h = check_hypotheses(ConstructionSpec{lp, eq, th, e, q, placeholder}, drop.theorem);
        if (!h.anchor_ok || !h.parallel.holds()) continue;
        bool structural = true;
        for (const ClauseResult* cl : {&h.pairs, &h.anchor}) {
          const bool dropped = drop.clause && *drop.clause == cl->name;
          if (dropped ? cl->holds() : !cl->holds()) structural = false;
        }
        if (!structural) continue;
        GenConfig uc = derive(c, (th.index() * kMaxElements + e.index()) * kMaxElements + q.index());
        ConstructionSpec spec{lp, eq, th, e, q, gen_uninorm(lp, inner, e, uc)};
        if (auto hit = qualify(spec, drop, source)) return hit;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Counterexample> find_counterexample(const ClauseDrop& drop, std::size_t budget, std::uint64_t seed,
                                                  std::size_t max_size) {
  const Equation eq = equation_of(drop.theorem);
  for (const std::string& id : corpus_ids()) {
    CorpusEntry entry = load_corpus(id);
    ConstructionSpec spec = entry.spec;
    if (spec.equation != eq) {
      spec = dual_spec(spec, std::make_shared<const BoundedLattice>(spec.lattice->dual()));
    }
    if (auto hit = qualify(spec, drop, id)) return hit;
  }
  // Sizes come from the top two values of the range, where failing placements are most common.
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_size = std::max<std::size_t>(max_size, 4);
  cfg.min_size = cfg.max_size - 1;
  cfg.class_filter = eq == Equation::eq1 ? ClassFilter::ub : ClassFilter::ut;
  for (std::size_t i = 0; i < budget; ++i) {
    GenConfig c = derive(cfg, i);
    c.density = 0.2 + 0.45 * Rng(c.seed, 3).uniform();
    // The generator is not self-dual, so each lattice is searched together with its dual.
    auto base = std::make_shared<const BoundedLattice>(gen_lattice(c));
    for (const LatticePtr& lp : {base, LatticePtr(std::make_shared<const BoundedLattice>(base->dual()))}) {
      if (auto hit = search_lattice(lp, drop, c, "seed " + std::to_string(i))) return hit;
    }
  }
  return std::nullopt;
}

}  // namespace uninorm
