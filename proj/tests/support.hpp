#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "uninorm/lattice.hpp"
#include "uninorm/optable.hpp"

namespace uninorm::test {

inline LatticePtr make(std::vector<std::string> names,
                       const std::vector<std::pair<std::string, std::string>>& covers) {
  return std::make_shared<const BoundedLattice>(BoundedLattice::build(std::move(names), covers));
}

// 0 < 1 < ... < n-1, named by position.
inline LatticePtr chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i));
    if (i > 0) covers.emplace_back(names[i - 1], names[i]);
  }
  return make(names, covers);
}

inline LatticePtr diamond() {
  return make({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline OpTable join_table(const LatticePtr& l) {
  return OpTable::from_function(l, l->all(), [&](ElementId a, ElementId b) { return l->join(a, b); });
}

inline OpTable meet_table(const LatticePtr& l) {
  return OpTable::from_function(l, l->all(), [&](ElementId a, ElementId b) { return l->meet(a, b); });
}

inline ElementSet set_of(const BoundedLattice& l, const std::vector<std::string>& names) {
  ElementSet s;
  for (const auto& n : names) s.insert(l.id(n));
  return s;
}

}  // namespace uninorm::test
