#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "uninorm/constructions.hpp"

namespace uninorm {

enum class ClassFilter { none, ub, ut, umin, umax };

std::string_view to_string(ClassFilter f);

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t min_size = 2;
  std::size_t max_size = 9;
  double density = 0.3;  // probability of each extra cover edge
  ClassFilter class_filter = ClassFilter::none;
};

// Throws InvalidConfig unless 2 <= min_size <= max_size <= 12 and density is in [0, 1].
void validate(const GenConfig& cfg);

inline constexpr std::size_t kGenMaxSize = 12;
inline constexpr std::size_t kAttemptCap = 10000;

// Same config with the seed replaced by an independent stream derived from (seed, index).
GenConfig derive(const GenConfig& cfg, std::uint64_t index);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Explicit generator state; copies continue identically.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);
  std::uint64_t next();
  std::size_t below(std::size_t n);
  double uniform();
  bool chance(double p) { return uniform() < p; }
  ElementId pick(ElementSet s);

 private:
  std::mt19937_64 engine_;
};

BoundedLattice gen_lattice(const GenConfig& cfg);

// Verified uninorm on `carrier` (an interval of l) with neutral e, honoring cfg.class_filter.
OpTable gen_uninorm(const LatticePtr& l, ElementSet carrier, ElementId e, const GenConfig& cfg);

// Spec whose anchor lies in the requested class for the given equation. With want_hypotheses
// the standing clauses of the matching theorem hold (th31/th33 for Eq. 1, th34/th36 for Eq. 2);
// the inner operation is then drawn from U_b (U_t for Eq. 2) unless cfg names another class.
ConstructionSpec gen_spec(const GenConfig& cfg, AnchorClass anchor_class, bool want_hypotheses,
                          Equation eq = Equation::eq1);
ConstructionSpec gen_spec_on(const LatticePtr& l, const GenConfig& cfg, AnchorClass anchor_class,
                             bool want_hypotheses, Equation eq = Equation::eq1);

// Spec for theorem `th` whose standing clauses hold and whose iff-condition has the requested
// truth value. Placements are enumerated exhaustively on each generated lattice, which reaches
// configurations that uniform placement rarely hits. Sizes are drawn from the top two values of
// the configured range and density is redrawn per lattice.
ConstructionSpec gen_spec_targeted(const GenConfig& cfg, Theorem th, bool parallel_holds);

struct FuzzInstance {
  ConstructionSpec spec;
  bool fell_back = false;  // targeted placement was exhausted, uniform placement used
};
// Instance `index` of the fuzz stream for `th` seeded by base.seed, sized by base's size range.
// Anchor classes alternate for th31/th34; every fourth instance targets a placement where the
// iff-condition fails.
FuzzInstance gen_fuzz_instance(const GenConfig& base, Theorem th, std::uint64_t index);
// Theorem whose anchor class is `c` for equation `eq`, if any.
std::optional<Theorem> theorem_for(Equation eq, AnchorClass c);

// Every uninorm on a carrier of at most four elements, by exhaustive enumeration.
std::vector<OpTable> enumerate_uninorms(const LatticePtr& l, ElementSet carrier, ElementId e);

bool passes_filter(const OpTable& t, ElementId e, ClassFilter f);

}  // namespace uninorm
