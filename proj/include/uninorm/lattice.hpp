#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uninorm/error.hpp"

namespace uninorm {

inline constexpr std::size_t kMaxElements = 64;

struct ElementId {
  std::uint8_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t v) : value(static_cast<std::uint8_t>(v)) {}
  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

// Subset of a lattice's elements, one bit per element id.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet first_n(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(ElementId x) const { return (bits_ >> x.value) & 1U; }
  constexpr void insert(ElementId x) { bits_ |= std::uint64_t{1} << x.value; }
  constexpr void erase(ElementId x) { bits_ &= ~(std::uint64_t{1} << x.value); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::optional<ElementId> first() const;
  std::vector<ElementId> elements() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

  class iterator {
   public:
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    ElementId operator*() const { return ElementId(static_cast<std::size_t>(std::countr_zero(rest_))); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

enum class Bound { closed, open };

enum class RelationMode { covers, full };

class BoundedLattice {
 public:
  // Builds the lattice from element names and a relation given either as cover pairs
  // (reflexive-transitive closure is taken) or as the complete order relation.
  static BoundedLattice build(std::vector<std::string> names,
                              const std::vector<std::pair<std::string, std::string>>& pairs,
                              RelationMode mode = RelationMode::covers);

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElementId x) const { return names_[x.index()]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  ElementId id(std::string_view name) const;  // throws UnknownElement
  std::vector<ElementId> ids() const;
  ElementSet all() const { return ElementSet::first_n(size()); }

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  bool leq(ElementId a, ElementId b) const { return up_[a.index()].contains(b); }
  bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }
  bool parallel(ElementId a, ElementId b) const { return !comparable(a, b); }

  ElementId join(ElementId a, ElementId b) const { return join_[a.index() * size() + b.index()]; }
  ElementId meet(ElementId a, ElementId b) const { return meet_[a.index() * size() + b.index()]; }

  ElementSet up_set(ElementId a) const { return up_[a.index()]; }
  ElementSet down_set(ElementId a) const { return down_[a.index()]; }

  // Interval between lo and hi; empty when lo is not below hi.
  ElementSet interval(ElementId lo, ElementId hi, Bound lower = Bound::closed,
                      Bound upper = Bound::closed) const;

  // Elements incomparable with a.
  ElementSet incomparable(ElementId a) const { return all() - up_[a.index()] - down_[a.index()]; }
  // Elements comparable with a (a included).
  ElementSet comparable_set(ElementId a) const { return up_[a.index()] | down_[a.index()]; }

  std::vector<std::pair<ElementId, ElementId>> covers() const;

  // Order relation as a 64x64 byte matrix: leq_bytes()[a * 64 + b] != 0 iff a <= b.
  const std::uint8_t* leq_bytes() const { return leq_bytes_.data(); }

  // Same element ids and names, reversed order.
  BoundedLattice dual() const;

  bool operator==(const BoundedLattice& o) const { return names_ == o.names_ && up_ == o.up_; }

 private:
  BoundedLattice(std::vector<std::string> names, std::vector<ElementSet> up);
  void finish();

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
  std::vector<std::uint8_t> leq_bytes_;
  ElementId bottom_;
  ElementId top_;
};

// Region sets relative to elements a and b: I_a (incomparable with a), I^a (comparable with a),
// I_a^b (incomparable with a, comparable with b) and I_{a,b} (incomparable with both).
struct RegionSets {
  ElementSet incomparable_a;
  ElementSet comparable_a;
  ElementSet incomparable_a_comparable_b;
  ElementSet incomparable_both;
};

RegionSets region_sets(const BoundedLattice& l, ElementId a, ElementId b);

std::string describe(const BoundedLattice& l, ElementSet s);

}  // namespace uninorm
