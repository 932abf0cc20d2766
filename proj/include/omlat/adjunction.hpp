#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "omlat/glue.hpp"

namespace omlat {

// Exhaustive, duplicate-free hom-set between context-labelled lattices:
// whole-carrier ortholattice homomorphisms mapping block j of the source
// into block j of the target.
struct HomSet {
  std::string source;
  std::string target;
  std::vector<LatticeHom> homs;
};

// Enumerates via block restrictions: a valid hom is determined by its
// restrictions to the blocks (they cover the glued source), so candidates
// are pairs of Boolean homs assembled blockwise and then verified on the
// whole carrier.
HomSet enumerate_ctx_homs(const GluedLattice& p, const BlockedLattice& l);

// Restriction of a block-containing hom to the two blocks, presented as
// Boolean homs between the abstract block algebras.
std::pair<LatticeHom, LatticeHom> restrict_to_blocks(const GluedLattice& p, const BlockedLattice& l,
                                                     const LatticeHom& h);

// Blockwise extension candidate for a pair of Boolean homs into the block
// algebras of l; verified exactly like mediate.
std::variant<LatticeHom, CounterReport> extend_from_blocks(const GluedLattice& p,
                                                           const BlockedLattice& l,
                                                           const LatticeHom& f1, const LatticeHom& f2);

struct AdjunctionCounterexample {
  std::vector<ElemId> f1;
  std::vector<ElemId> f2;
  CounterReport failure;
  friend bool operator==(const AdjunctionCounterexample&, const AdjunctionCounterexample&) = default;
};

struct AdjunctionCell {
  std::string source;
  std::string codomain;
  std::string hom_class;  // "bound-reflecting" | "all"
  int ctx_hom_count = 0;
  int pair_count = 0;
  bool bijection = false;
  // Checked for bound-reflecting cells whose bijection holds; absent
  // (reported as skipped) otherwise.
  std::optional<bool> naturality;
  std::vector<AdjunctionCounterexample> counterexamples;
  friend bool operator==(const AdjunctionCell&, const AdjunctionCell&) = default;
};

struct TriangleRecord {
  std::string object;
  bool checked = false;
  bool holds = false;
  friend bool operator==(const TriangleRecord&, const TriangleRecord&) = default;
};

struct AdjunctionReport {
  int bound = 0;
  std::vector<AdjunctionCell> cells;
  std::vector<TriangleRecord> unit_triangles;
  std::vector<TriangleRecord> counit_triangles;
  friend bool operator==(const AdjunctionReport&, const AdjunctionReport&) = default;
};

// Audits the restriction map between hom-sets over every source pair with
// atoms <= bound and every glued codomain at the same bound: bijectivity per
// morphism class, naturality squares on both sides, and the unit/counit
// triangle identities where the bijection holds. Deterministic: identical
// inputs produce identical reports.
AdjunctionReport adjunction_audit(int bound, int max_elements = kDefaultMaxElements);

}  // namespace omlat
