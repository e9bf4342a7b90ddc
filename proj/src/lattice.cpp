#include "uninorm/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace uninorm {

std::optional<ElementId> ElementSet::first() const {
  if (bits_ == 0) return std::nullopt;
  return ElementId(static_cast<std::size_t>(std::countr_zero(bits_)));
}

std::vector<ElementId> ElementSet::elements() const { return {begin(), end()}; }

namespace {

std::string pair_text(const std::vector<std::string>& names, std::size_t a, std::size_t b) {
  return "(" + names[a] + ", " + names[b] + ")";
}

// Least element of `candidates` under `up`, if any.
std::optional<ElementId> least(const std::vector<ElementSet>& up, ElementSet candidates) {
  for (ElementId x : candidates) {
    if (candidates.subset_of(up[x.index()])) return x;
  }
  return std::nullopt;
}

}  // namespace

BoundedLattice BoundedLattice::build(std::vector<std::string> names,
                                     const std::vector<std::pair<std::string, std::string>>& pairs,
                                     RelationMode mode) {
  const std::size_t n = names.size();
  if (n == 0) throw InvalidLattice("lattice has no elements");
  if (n > kMaxElements) {
    throw InvalidLattice("lattice has " + std::to_string(n) + " elements; at most " +
                         std::to_string(kMaxElements) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& s : names) {
    if (s.empty()) throw InvalidLattice("empty element name");
    if (!seen.insert(s).second) throw InvalidLattice("duplicate element name '" + s + "'");
  }
  auto lookup = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw UnknownElement("relation mentions unknown element '" + s + "'");
    return static_cast<std::size_t>(it - names.begin());
  };

  std::vector<ElementSet> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i].insert(ElementId(i));
  for (const auto& [a, b] : pairs) up[lookup(a)].insert(ElementId(lookup(b)));

  if (mode == RelationMode::covers) {
    // Warshall closure on bit rows.
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (up[i].contains(ElementId(k))) up[i] = up[i] | up[k];
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (ElementId j : up[i]) {
        if (!up[j.index()].subset_of(up[i])) {
          ElementId k = *(up[j.index()] - up[i]).first();
          throw NotAPoset("relation is not transitive: " + pair_text(names, i, j.index()) + " and " +
                          pair_text(names, j.index(), k.index()) + " present but " +
                          pair_text(names, i, k.index()) + " missing");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (ElementId j : up[i]) {
      if (j.index() != i && up[j.index()].contains(ElementId(i))) {
        throw NotAPoset("relation is not antisymmetric: " + names[i] + " and " + names[j.index()] +
                        " lie below each other");
      }
    }
  }
  BoundedLattice l(std::move(names), std::move(up));
  l.finish();
  return l;
}

BoundedLattice::BoundedLattice(std::vector<std::string> names, std::vector<ElementSet> up)
    : names_(std::move(names)), up_(std::move(up)) {}

void BoundedLattice::finish() {
  const std::size_t n = names_.size();
  down_.assign(n, ElementSet{});
  for (std::size_t i = 0; i < n; ++i) {
    for (ElementId j : up_[i]) down_[j.index()].insert(ElementId(i));
  }
  const ElementSet everything = all();
  auto bot = least(up_, everything);
  auto top = least(down_, everything);
  if (!bot || !top) {
    std::string which = !bot ? "bottom" : "top";
    std::vector<std::string> extremal;
    for (std::size_t i = 0; i < n; ++i) {
      const ElementSet& side = !bot ? down_[i] : up_[i];
      if (side.size() == 1) extremal.push_back(names_[i]);
    }
    std::string list;
    for (const auto& s : extremal) list += (list.empty() ? "" : ", ") + s;
    throw NotBounded("no " + which + " element; " + (!bot ? "minimal" : "maximal") +
                     " elements are " + list);
  }
  bottom_ = *bot;
  top_ = *top;

  join_.assign(n * n, ElementId{});
  meet_.assign(n * n, ElementId{});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto j = least(up_, up_[a] & up_[b]);
      if (!j) {
        throw NotALattice("elements " + names_[a] + " and " + names_[b] +
                          " have no least upper bound; upper bounds are " + describe(*this, up_[a] & up_[b]));
      }
      auto m = least(down_, down_[a] & down_[b]);
      if (!m) {
        throw NotALattice("elements " + names_[a] + " and " + names_[b] +
                          " have no greatest lower bound; lower bounds are " +
                          describe(*this, down_[a] & down_[b]));
      }
      join_[a * n + b] = join_[b * n + a] = *j;
      meet_[a * n + b] = meet_[b * n + a] = *m;
    }
  }
  // Padded by a few bytes so 32-bit gathers at the last index stay in bounds.
  leq_bytes_.assign(kMaxElements * kMaxElements + 4, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (ElementId b : up_[a]) leq_bytes_[a * kMaxElements + b.index()] = 1;
  }
}

std::optional<ElementId> BoundedLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return ElementId(i);
  }
  return std::nullopt;
}

ElementId BoundedLattice::id(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw UnknownElement("unknown element '" + std::string(name) + "'");
}

std::vector<ElementId> BoundedLattice::ids() const { return all().elements(); }

ElementSet BoundedLattice::interval(ElementId lo, ElementId hi, Bound lower, Bound upper) const {
  ElementSet s = up_[lo.index()] & down_[hi.index()];
  if (lower == Bound::open) s.erase(lo);
  if (upper == Bound::open) s.erase(hi);
  return s;
}

std::vector<std::pair<ElementId, ElementId>> BoundedLattice::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    ElementSet above = up_[a];
    above.erase(ElementId(a));
    for (ElementId b : above) {
      ElementSet between = above & down_[b.index()];
      between.erase(b);
      if (between.empty()) out.emplace_back(ElementId(a), b);
    }
  }
  return out;
}

BoundedLattice BoundedLattice::dual() const {
  BoundedLattice d(names_, down_);
  d.finish();
  return d;
}

RegionSets region_sets(const BoundedLattice& l, ElementId a, ElementId b) {
  RegionSets r;
  r.incomparable_a = l.incomparable(a);
  r.comparable_a = l.comparable_set(a);
  r.incomparable_a_comparable_b = r.incomparable_a & l.comparable_set(b);
  r.incomparable_both = r.incomparable_a & l.incomparable(b);
  return r;
}

std::string describe(const BoundedLattice& l, ElementSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (ElementId x : s) {
    os << (first ? "" : ", ") << l.name(x);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace uninorm
