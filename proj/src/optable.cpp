#include "uninorm/optable.hpp"

#include <sstream>

#include "uninorm/kernels.hpp"

namespace uninorm {

using kernels::kStride;

OpTable::OpTable(LatticePtr lattice, ElementSet carrier, const std::vector<ElementId>& values)
    : lattice_(std::move(lattice)), carrier_(carrier), elements_(carrier.elements()) {
  if (!lattice_) throw SpecInvalid("operation table without a lattice");
  if (carrier.empty() || !carrier.subset_of(lattice_->all())) {
    throw SubNotContained("carrier " + std::string(carrier.empty() ? "is empty" : "leaves the lattice"));
  }
  const std::size_t n = elements_.size();
  if (values.size() != n * n) {
    throw SpecInvalid("table has " + std::to_string(values.size()) + " cells, expected " + std::to_string(n * n));
  }
  position_.fill(0xFF);
  for (std::size_t i = 0; i < n; ++i) position_[elements_[i].index()] = static_cast<std::uint8_t>(i);

  ids_.assign(kStride * kStride, 0);
  ids_t_.assign(kStride * kStride, 0);
  positions_.assign(kStride * kStride, 0);
  order_.assign(kStride * kStride, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ElementId v = values[i * n + j];
      if (v.index() >= lattice_->size()) throw UnknownElement("table value outside the lattice");
      ids_[i * kStride + j] = v.value;
      ids_t_[j * kStride + i] = v.value;
      std::uint8_t p = position_[v.index()];
      positions_[i * kStride + j] = p == 0xFF ? 0 : p;
      order_[i * kStride + j] = lattice_->leq(elements_[i], elements_[j]) ? 1 : 0;
    }
  }
}

std::optional<std::size_t> OpTable::position(ElementId x) const {
  if (x.index() >= kMaxElements || position_[x.index()] == 0xFF) return std::nullopt;
  return position_[x.index()];
}

ElementId OpTable::at(ElementId a, ElementId b) const {
  auto i = position(a);
  auto j = position(b);
  if (!i || !j) {
    throw SubNotContained("argument (" + lattice_->name(a) + ", " + lattice_->name(b) + ") outside the carrier");
  }
  return ElementId(ids_[*i * kStride + *j]);
}

std::optional<std::array<ElementId, 2>> OpTable::first_escape() const {
  const std::size_t n = order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!carrier_.contains(ElementId(ids_[i * kStride + j]))) return std::array{elements_[i], elements_[j]};
    }
  }
  return std::nullopt;
}

std::vector<ElementId> OpTable::values() const {
  const std::size_t n = order();
  std::vector<ElementId> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.emplace_back(ids_[i * kStride + j]);
  }
  return out;
}

std::vector<std::array<ElementId, 2>> OpTable::diff(const OpTable& other) const {
  if (carrier_ != other.carrier_) throw SpecInvalid("cannot diff tables on different carriers");
  std::vector<std::array<ElementId, 2>> out;
  const std::size_t n = order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ids_[i * kStride + j] != other.ids_[i * kStride + j]) out.push_back({elements_[i], elements_[j]});
    }
  }
  return out;
}

bool OpTable::operator==(const OpTable& other) const {
  return carrier_ == other.carrier_ && *lattice_ == *other.lattice_ && ids_ == other.ids_;
}

AxiomReport is_uninorm(const OpTable& t, ElementId e) {
  const auto& l = t.lattice();
  auto pe = t.position(e);
  if (!pe) throw NeutralOutsideCarrier("neutral element " + l.name(e) + " is not in the carrier");
  const auto& el = t.carrier_elements();
  const std::size_t n = t.order();
  const kernels::KernelSet& k = kernels::active();
  AxiomReport r;

  for (ElementId x : el) {
    if (t.at(e, x) != x || t.at(x, e) != x) {
      r.neutral_failure = x;
      break;
    }
  }
  if (auto esc = t.first_escape()) r.escape = CellWitness{(*esc)[0], (*esc)[1]};
  if (auto w = k.first_noncommutative(t.ids_bytes(), t.ids_transposed_bytes(), n)) {
    r.noncommutative = CellWitness{el[w->a], el[w->b]};
  }
  if (!r.escape) {
    r.associativity_checked = true;
    if (auto w = k.first_nonassociative(t.positions_bytes(), n)) {
      r.nonassociative = TripleWitness{el[w->a], el[w->b], el[w->c]};
    }
  }
  if (auto w = k.first_nonmonotone(t.ids_bytes(), n, t.order_bytes(), l.leq_bytes())) {
    r.nonmonotone = MonotoneWitness{el[w->a], el[w->b], el[w->c], false};
  } else if (r.noncommutative) {
    if (auto w2 = k.first_nonmonotone(t.ids_transposed_bytes(), n, t.order_bytes(), l.leq_bytes())) {
      r.nonmonotone = MonotoneWitness{el[w2->a], el[w2->b], el[w2->c], true};
    }
  }
  return r;
}

namespace {

std::optional<ElementId> carrier_extreme(const OpTable& t, bool want_top) {
  const auto& l = t.lattice();
  for (ElementId x : t.carrier()) {
    ElementSet related = want_top ? l.down_set(x) : l.up_set(x);
    if (t.carrier().subset_of(related)) return x;
  }
  return std::nullopt;
}

}  // namespace

ElementId carrier_bottom(const OpTable& t) {
  if (auto x = carrier_extreme(t, false)) return *x;
  throw NotAnInterval("carrier has no least element");
}

ElementId carrier_top(const OpTable& t) {
  if (auto x = carrier_extreme(t, true)) return *x;
  throw NotAnInterval("carrier has no greatest element");
}

AxiomReport is_t_norm(const OpTable& t) { return is_uninorm(t, carrier_top(t)); }

AxiomReport is_t_conorm(const OpTable& t) { return is_uninorm(t, carrier_bottom(t)); }

std::string format_report(const OpTable& t, const AxiomReport& r) {
  const auto& l = t.lattice();
  auto nm = [&](ElementId x) { return l.name(x); };
  auto cell = [&](ElementId a, ElementId b) { return "U(" + nm(a) + "," + nm(b) + ")=" + nm(t.at(a, b)); };
  std::ostringstream os;
  os << "neutral: ";
  if (r.neutral_failure) {
    os << "FAIL at " << nm(*r.neutral_failure) << '\n';
  } else {
    os << "pass\n";
  }
  os << "closed: ";
  if (r.escape) {
    os << "FAIL " << cell(r.escape->a, r.escape->b) << " leaves the carrier\n";
  } else {
    os << "pass\n";
  }
  os << "commutative: ";
  if (r.noncommutative) {
    os << "FAIL " << cell(r.noncommutative->a, r.noncommutative->b) << " but "
       << cell(r.noncommutative->b, r.noncommutative->a) << '\n';
  } else {
    os << "pass\n";
  }
  os << "associative: ";
  if (!r.associativity_checked) {
    os << "not evaluated (table not closed)\n";
  } else if (r.nonassociative) {
    const auto& w = *r.nonassociative;
    ElementId ab = t.at(w.a, w.b);
    ElementId bc = t.at(w.b, w.c);
    os << "FAIL (" << nm(w.a) << "," << nm(w.b) << "," << nm(w.c) << "): U(U(" << nm(w.a) << "," << nm(w.b)
       << ")," << nm(w.c) << ")=" << nm(t.at(ab, w.c)) << " but U(" << nm(w.a) << ",U(" << nm(w.b) << ","
       << nm(w.c) << "))=" << nm(t.at(w.a, bc)) << '\n';
  } else {
    os << "pass\n";
  }
  os << "monotone: ";
  if (r.nonmonotone) {
    const auto& w = *r.nonmonotone;
    ElementId x = w.second_argument ? w.other : w.lo;
    ElementId y = w.second_argument ? w.lo : w.other;
    ElementId x2 = w.second_argument ? w.other : w.hi;
    ElementId y2 = w.second_argument ? w.hi : w.other;
    os << "FAIL " << nm(w.lo) << " <= " << nm(w.hi) << " but " << cell(x, y) << " is not below " << cell(x2, y2)
       << '\n';
  } else {
    os << "pass\n";
  }
  os << "verdict: " << (r.passed() ? "uninorm" : "not a uninorm") << '\n';
  return os.str();
}

OpTable restrict(const OpTable& t, ElementSet sub) {
  if (sub.empty() || !sub.subset_of(t.carrier())) {
    throw SubNotContained("restriction set " + describe(t.lattice(), sub) + " is not a nonempty subset of the carrier");
  }
  return OpTable::from_function(t.lattice_ptr(), sub, [&](ElementId a, ElementId b) { return t.at(a, b); });
}

namespace {

ClassCheck projection_check(const OpTable& t, ElementSet rows, ElementSet cols) {
  for (ElementId x : t.carrier()) {
    for (ElementId y : t.carrier()) {
      bool in_rect = (rows.contains(x) && cols.contains(y)) || (rows.contains(y) && cols.contains(x));
      if (!in_rect) continue;
      ElementId want = rows.contains(x) && cols.contains(y) ? y : x;
      if (t.at(x, y) != want) return ClassCheck{false, CellWitness{x, y}};
    }
  }
  return {};
}

ClassCheck confinement_check(const OpTable& t, ElementSet region) {
  for (ElementId x : t.carrier()) {
    for (ElementId y : t.carrier()) {
      if (region.contains(t.at(x, y)) && !(region.contains(x) && region.contains(y))) {
        return ClassCheck{false, CellWitness{x, y}};
      }
    }
  }
  return {};
}

}  // namespace

ClassCheck check_umin(const OpTable& t, ElementId e) {
  const auto& l = t.lattice();
  ElementSet above = t.carrier() & l.up_set(e);
  ElementSet strictly_above = above;
  strictly_above.erase(e);
  return projection_check(t, strictly_above, t.carrier() - above);
}

ClassCheck check_umax(const OpTable& t, ElementId e) {
  const auto& l = t.lattice();
  ElementSet below = t.carrier() & l.down_set(e);
  ElementSet strictly_below = below;
  strictly_below.erase(e);
  return projection_check(t, strictly_below, t.carrier() - below);
}

ClassCheck check_ub(const OpTable& t, ElementId e) {
  return confinement_check(t, t.lattice().down_set(e));
}

ClassCheck check_ut(const OpTable& t, ElementId e) {
  return confinement_check(t, t.lattice().up_set(e));
}

}  // namespace uninorm
