#pragma once

#include <optional>
#include <vector>

#include "omlat/lattice.hpp"

namespace omlat {

// Backtracking search for an order isomorphism a -> b, pruned by per-element
// invariants (downset/upset sizes, cover degrees). Returns the element map if
// one exists. The ortho variant additionally requires the map to commute with
// the orthocomplementations.
std::optional<std::vector<ElemId>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);
std::optional<std::vector<ElemId>> find_isomorphism(const FiniteOrthoLattice& a,
                                                    const FiniteOrthoLattice& b);

inline bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return find_isomorphism(a, b).has_value();
}
inline bool isomorphic(const FiniteOrthoLattice& a, const FiniteOrthoLattice& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace omlat
