#pragma once

#include <string>
#include <vector>

#include "omlat/lattice.hpp"

namespace omlat {

// Hasse diagram as a DOT digraph: one node per element, one edge per cover
// pair (lower -> upper), drawn bottom-up. Optional labels default to ids.
std::string to_dot(const FiniteLattice& l, const std::vector<std::string>& labels = {});

}  // namespace omlat
