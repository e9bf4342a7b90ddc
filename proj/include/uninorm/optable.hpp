#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uninorm/lattice.hpp"

namespace uninorm {

using LatticePtr = std::shared_ptr<const BoundedLattice>;

// Binary operation on a carrier subset of a lattice, stored as a dense table whose values are
// lattice elements (not necessarily inside the carrier).
class OpTable {
 public:
  // `values` is row-major over the carrier elements in ascending id order.
  OpTable(LatticePtr lattice, ElementSet carrier, const std::vector<ElementId>& values);

  template <class F>
  static OpTable from_function(LatticePtr lattice, ElementSet carrier, F&& f) {
    std::vector<ElementId> values;
    values.reserve(carrier.size() * carrier.size());
    for (ElementId a : carrier) {
      for (ElementId b : carrier) values.push_back(f(a, b));
    }
    return OpTable(std::move(lattice), carrier, values);
  }

  const BoundedLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  ElementSet carrier() const { return carrier_; }
  const std::vector<ElementId>& carrier_elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::optional<std::size_t> position(ElementId x) const;

  // Throws SubNotContained when an argument lies outside the carrier.
  ElementId at(ElementId a, ElementId b) const;
  ElementId operator()(ElementId a, ElementId b) const { return at(a, b); }

  // First cell (row-major) whose value leaves the carrier.
  std::optional<std::array<ElementId, 2>> first_escape() const;
  bool closed() const { return !first_escape().has_value(); }

  std::vector<ElementId> values() const;
  // Cells where the tables differ; both tables must share the carrier.
  std::vector<std::array<ElementId, 2>> diff(const OpTable& other) const;
  bool operator==(const OpTable& other) const;

  // Stride-64 byte views used by the kernels: values as lattice ids, the transpose, values as
  // carrier positions (only meaningful when closed), and the carrier order by position.
  const std::uint8_t* ids_bytes() const { return ids_.data(); }
  const std::uint8_t* ids_transposed_bytes() const { return ids_t_.data(); }
  const std::uint8_t* positions_bytes() const { return positions_.data(); }
  const std::uint8_t* order_bytes() const { return order_.data(); }

 private:
  LatticePtr lattice_;
  ElementSet carrier_;
  std::vector<ElementId> elements_;
  std::array<std::uint8_t, kMaxElements> position_{};
  std::vector<std::uint8_t> ids_;
  std::vector<std::uint8_t> ids_t_;
  std::vector<std::uint8_t> positions_;
  std::vector<std::uint8_t> order_;
};

struct CellWitness {
  ElementId a;
  ElementId b;
};

struct TripleWitness {
  ElementId a;
  ElementId b;
  ElementId c;
};

// a <= b but U(a, c) is not below U(b, c) (or U(c, a) vs U(c, b) when second_argument).
struct MonotoneWitness {
  ElementId lo;
  ElementId hi;
  ElementId other;
  bool second_argument = false;
};

struct AxiomReport {
  std::optional<CellWitness> noncommutative;
  std::optional<TripleWitness> nonassociative;
  bool associativity_checked = false;
  std::optional<MonotoneWitness> nonmonotone;
  std::optional<ElementId> neutral_failure;  // x with U(e, x) != x or U(x, e) != x
  std::optional<CellWitness> escape;

  bool commutative() const { return !noncommutative; }
  bool associative() const { return associativity_checked && !nonassociative; }
  bool monotone() const { return !nonmonotone; }
  bool neutral() const { return !neutral_failure; }
  bool closed() const { return !escape; }
  bool passed() const { return commutative() && associative() && monotone() && neutral() && closed(); }
};

AxiomReport is_uninorm(const OpTable& t, ElementId e);
// Uninorm whose neutral element is the greatest (resp. least) element of the carrier.
AxiomReport is_t_norm(const OpTable& t);
AxiomReport is_t_conorm(const OpTable& t);

std::string format_report(const OpTable& t, const AxiomReport& r);

OpTable restrict(const OpTable& t, ElementSet sub);

struct ClassCheck {
  bool holds = true;
  std::optional<CellWitness> witness;
  explicit operator bool() const { return holds; }
};

// U(x, y) = y whenever x in (e, top] and y in carrier \ [e, top] (and symmetrically).
ClassCheck check_umin(const OpTable& t, ElementId e);
// U(x, y) = y whenever x in [bottom, e) and y in carrier \ [bottom, e] (and symmetrically).
ClassCheck check_umax(const OpTable& t, ElementId e);
// Values in [bottom, e] only arise from arguments both in [bottom, e].
ClassCheck check_ub(const OpTable& t, ElementId e);
// Values in [e, top] only arise from arguments both in [e, top].
ClassCheck check_ut(const OpTable& t, ElementId e);

inline bool in_class_umin(const OpTable& t, ElementId e) { return check_umin(t, e).holds; }
inline bool in_class_umax(const OpTable& t, ElementId e) { return check_umax(t, e).holds; }
inline bool in_class_ub(const OpTable& t, ElementId e) { return check_ub(t, e).holds; }
inline bool in_class_ut(const OpTable& t, ElementId e) { return check_ut(t, e).holds; }

// Least and greatest elements of the carrier; throws NotAnInterval when missing.
ElementId carrier_bottom(const OpTable& t);
ElementId carrier_top(const OpTable& t);

}  // namespace uninorm
