#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uninorm/constructions.hpp"
#include "uninorm/latticegen.hpp"

namespace uninorm {

// Disjoint nonempty classes covering a carrier.
class Partition {
 public:
  // Throws SpecInvalid when the classes are empty, overlap, or miss part of the carrier.
  Partition(std::vector<ElementSet> classes, ElementSet carrier);

  // Drops empty classes before validating.
  static Partition from_regions(const std::vector<ElementSet>& regions, ElementSet carrier);

  const std::vector<ElementSet>& classes() const { return classes_; }

 private:
  std::vector<ElementSet> classes_;
};

// Which clause of the partitioned associativity test found the violation.
enum class AssocClause { three_classes, pair_first, pair_last, within_class };

struct PartitionedWitness {
  AssocClause clause;
  TripleWitness triple;  // U(U(a,b),c) != U(a,U(b,c))
};

// Reference all-triples check: first (a, b, c) with U(U(a,b),c) != U(a,U(b,c)).
std::optional<TripleWitness> naive_associativity(const OpTable& t);

// Associativity of a commutative table checked class by class: triples over three distinct
// classes in all three bracketings, two elements from one class and one from another (both
// ways), and triples inside one class. Throws NotCommutative when the table is not commutative.
std::optional<PartitionedWitness> assoc_partitioned(const OpTable& t, const Partition& p);

struct EquivalenceVerdict {
  bool predicted = false;
  bool observed = false;
  bool agree = false;
  std::optional<AxiomReport> counterwitness;
};

// Throws HypothesesNotMet when the theorem's standing hypotheses fail.
EquivalenceVerdict verify_equivalence(const ConstructionSpec& spec, Theorem th);

struct ClauseDrop {
  Theorem theorem = Theorem::th31;
  std::optional<std::string> clause;  // nullopt: drop nothing
};

// Accepts the clause names of clause_names(th) or "none"; throws UnknownClause otherwise.
ClauseDrop make_clause_drop(Theorem th, const std::string& clause);

struct Counterexample {
  ConstructionSpec spec;
  HypothesisReport hypotheses;
  OpTable table;
  AxiomReport axioms;
  std::string source;  // corpus id or "seed <n>"
};

// Instance where every standing clause except the dropped one holds (the dropped one fails),
// the iff-condition holds, and the construction still fails an axiom. Corpus entries (and their
// duals for Eq. 2 theorems) are tried before `budget` generated instances.
std::optional<Counterexample> find_counterexample(const ClauseDrop& drop, std::size_t budget = 500,
                                                  std::uint64_t seed = 0, std::size_t max_size = 9);

// Whether an instance qualifies as a counterexample for the drop descriptor.
std::optional<Counterexample> qualify(const ConstructionSpec& spec, const ClauseDrop& drop, std::string source);

}  // namespace uninorm
