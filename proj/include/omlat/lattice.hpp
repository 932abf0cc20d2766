#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omlat/errors.hpp"

namespace omlat {

using ElemId = int;

// Default cap on carrier sizes; the CLI overrides it via OMLAT_MAX_ELEMENTS.
inline constexpr int kDefaultMaxElements = 4096;

// Outcome of an exhaustive law check. On failure, `witness` holds the first
// violation in lexicographic element order together with the name of the
// violated law.
struct Witness {
  std::string law;
  std::vector<ElemId> elems;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool pass = true;
  std::optional<Witness> witness;
  explicit operator bool() const { return pass; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Finite bounded lattice on element ids 0..n-1. The order relation and the
// meet/join tables are dense n x n arrays; every checker is an exhaustive
// scan. Values are immutable once constructed.
class FiniteLattice {
 public:
  // Fully validating path: poset axioms, bound extremality, and existence of
  // a unique glb/lub for every pair. Throws NotAPoset / BadBounds /
  // NotALattice.
  static FiniteLattice build(int n, const std::vector<uint8_t>& leq, ElemId bottom, ElemId top);

  // Path for tables that are correct by construction (powerset algebras,
  // horizontal sums). Always runs the O(n^2) consistency checks; re-runs the
  // full glb/lub optimality scan only when n <= full_check_limit.
  static FiniteLattice from_tables(int n, std::vector<uint8_t> leq, std::vector<ElemId> meet,
                                   std::vector<ElemId> join, ElemId bottom, ElemId top,
                                   int full_check_limit = 1024);

  int size() const { return n_; }
  ElemId bottom() const { return bottom_; }
  ElemId top() const { return top_; }
  bool leq(ElemId x, ElemId y) const { return leq_[idx(x, y)] != 0; }
  bool lt(ElemId x, ElemId y) const { return x != y && leq(x, y); }
  ElemId meet(ElemId x, ElemId y) const { return meet_[idx(x, y)]; }
  ElemId join(ElemId x, ElemId y) const { return join_[idx(x, y)]; }
  const std::vector<uint8_t>& leq_table() const { return leq_; }

  friend bool operator==(const FiniteLattice&, const FiniteLattice&) = default;

 private:
  FiniteLattice() = default;
  std::size_t idx(ElemId x, ElemId y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y);
  }

  int n_ = 0;
  ElemId bottom_ = 0;
  ElemId top_ = 0;
  std::vector<uint8_t> leq_;
  std::vector<ElemId> meet_;
  std::vector<ElemId> join_;
};

FiniteLattice build_lattice(int n, const std::vector<uint8_t>& leq, ElemId bottom, ElemId top);

// Lattice with a validated orthocomplementation (involutive, order-reversing,
// complement laws). Construction throws NotAnOrtholattice on violation.
class FiniteOrthoLattice {
 public:
  FiniteOrthoLattice(FiniteLattice lattice, std::vector<ElemId> ortho);

  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<ElemId>& ortho_map() const { return ortho_; }
  ElemId ortho(ElemId x) const { return ortho_[static_cast<std::size_t>(x)]; }

  int size() const { return lattice_.size(); }
  ElemId bottom() const { return lattice_.bottom(); }
  ElemId top() const { return lattice_.top(); }
  bool leq(ElemId x, ElemId y) const { return lattice_.leq(x, y); }
  ElemId meet(ElemId x, ElemId y) const { return lattice_.meet(x, y); }
  ElemId join(ElemId x, ElemId y) const { return lattice_.join(x, y); }

  friend bool operator==(const FiniteOrthoLattice&, const FiniteOrthoLattice&) = default;

 private:
  FiniteLattice lattice_;
  std::vector<ElemId> ortho_;
};

// Law checkers. Witnesses are the first violation in lexicographic order.
Verdict is_distributive(const FiniteLattice& l);
Verdict is_modular(const FiniteLattice& l);
Verdict is_ortholattice(const FiniteLattice& l, const std::vector<ElemId>& ortho);
Verdict is_orthomodular(const FiniteOrthoLattice& l);

// Cover pairs (x, y): x < y with nothing strictly between, sorted
// lexicographically. Their reflexive-transitive closure is the order.
std::vector<std::pair<ElemId, ElemId>> hasse_covers(const FiniteLattice& l);

}  // namespace omlat
