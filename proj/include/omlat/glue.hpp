#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "omlat/boolean.hpp"

namespace omlat {

// A designated Boolean block of a carrier: the abstract powerset it is
// isomorphic to, the embedding realizing the isomorphism, and the inverse
// lookup (carrier element -> subset mask, -1 outside the block).
struct BlockView {
  BooleanAlgebra algebra;
  LatticeHom embedding;
  std::vector<ElemId> carrier_to_mask;
};

// Extracts a block as a standalone powerset algebra. The block must contain
// the carrier bounds, be closed under meet/join/ortho, and be isomorphic to
// the powerset over its atoms; otherwise NotABooleanBlock.
BlockView extract_block(const FiniteOrthoLattice& carrier, const std::vector<ElemId>& block);

// Ortholattice with designated Boolean subalgebras sharing its bounds. The
// blocks need not cover the carrier.
class BlockedLattice {
 public:
  BlockedLattice(FiniteOrthoLattice carrier, std::vector<std::vector<ElemId>> blocks);

  const FiniteOrthoLattice& carrier() const { return carrier_; }
  const std::vector<std::vector<ElemId>>& blocks() const { return blocks_; }
  const BlockView& view(int block) const { return views_[static_cast<std::size_t>(block)]; }

  friend bool operator==(const BlockedLattice& a, const BlockedLattice& b) {
    return a.carrier_ == b.carrier_ && a.blocks_ == b.blocks_;
  }

 private:
  FiniteOrthoLattice carrier_;
  std::vector<std::vector<ElemId>> blocks_;
  std::vector<BlockView> views_;
};

// Horizontal sum of powerset algebras: blocks share only bottom and top,
// cross-block proper elements are incomparable with meet = bottom and
// join = top, and the orthocomplement acts blockwise. Canonical element
// order: bottom = 0, then each input's proper elements in mask order, top
// last.
class GluedLattice {
 public:
  const FiniteOrthoLattice& carrier() const { return carrier_; }
  const std::vector<std::vector<ElemId>>& blocks() const { return blocks_; }
  const std::vector<LatticeHom>& injections() const { return injections_; }
  const std::vector<BooleanAlgebra>& inputs() const { return inputs_; }

  // Carrier element of input `block`'s subset mask.
  ElemId inject(int block, ElemId mask) const;
  // Decodes a proper carrier element to (block, mask); bottom/top have
  // block = -1.
  struct Address {
    int block = -1;
    ElemId mask = 0;
  };
  Address address(ElemId carrier_elem) const { return address_[static_cast<std::size_t>(carrier_elem)]; }

  BlockedLattice as_blocked() const { return {carrier_, blocks_}; }

  friend bool operator==(const GluedLattice& a, const GluedLattice& b) {
    return a.carrier_ == b.carrier_ && a.blocks_ == b.blocks_ && a.inputs_ == b.inputs_;
  }

  friend GluedLattice glue_n(const std::vector<BooleanAlgebra>& inputs, int max_elements);

 private:
  GluedLattice() = default;

  FiniteOrthoLattice carrier_{FiniteLattice::build(2, {1, 1, 0, 1}, 0, 1), {1, 0}};
  std::vector<std::vector<ElemId>> blocks_;
  std::vector<LatticeHom> injections_;
  std::vector<BooleanAlgebra> inputs_;
  std::vector<Address> address_;
  std::vector<int> offsets_;
};

GluedLattice glue_n(const std::vector<BooleanAlgebra>& inputs, int max_elements = kDefaultMaxElements);
GluedLattice glue(const BooleanAlgebra& b1, const BooleanAlgebra& b2,
                  int max_elements = kDefaultMaxElements);

// Blockwise extension of a pair of Boolean homs to a map between glued
// carriers. The extension is always constructed; whether it is actually a
// lattice (and ortho) homomorphism is verified and recorded in its flags —
// it can fail when f1 or f2 collapses a proper element to a bound.
LatticeHom glue_hom(const GluedLattice& source, const GluedLattice& target, const LatticeHom& f1,
                    const LatticeHom& f2);

// The two blocks of a 2-blocked lattice as standalone powerset algebras plus
// their embeddings. Throws BlockCount unless there are exactly 2 blocks.
struct Forgotten {
  std::array<BooleanAlgebra, 2> algebras;
  std::array<LatticeHom, 2> embeddings;
};

Forgotten forget(const BlockedLattice& l);

// Universal-property checker: builds the blockwise candidate u with
// u(inject(j, m)) = h_j(m), verifies it is an ortholattice homomorphism, and
// on success certifies uniqueness (u is forced pointwise because the blocks
// cover the carrier). On failure returns the first violation.
struct MediateSuccess {
  LatticeHom hom;
  bool unique = false;
  friend bool operator==(const MediateSuccess&, const MediateSuccess&) = default;
};

using MediateResult = std::variant<MediateSuccess, CounterReport>;

MediateResult mediate(const GluedLattice& p, const LatticeHom& h1, const LatticeHom& h2,
                      const FiniteOrthoLattice& x);

// One cocone line of a universal-property audit. f1/f2 are mask-level maps
// into the codomain's block algebras.
struct CoconeRecord {
  int codomain = 0;
  std::vector<ElemId> f1;
  std::vector<ElemId> f2;
  bool bound_reflecting = false;
  bool mediates = false;
  bool unique = false;
  std::optional<CounterReport> failure;
  friend bool operator==(const CoconeRecord&, const CoconeRecord&) = default;
};

struct ClassSummary {
  std::string cocone_class;
  int total = 0;
  int mediated = 0;
  int failed = 0;
  bool confirmed = false;  // every cocone of the class mediated uniquely
  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

struct UniversalReport {
  std::string source;
  std::vector<std::string> codomains;
  std::vector<CoconeRecord> rows;
  std::vector<ClassSummary> summary;
  friend bool operator==(const UniversalReport&, const UniversalReport&) = default;
};

// Runs mediate for every Boolean cocone from (b1, b2) into every corpus
// member and tabulates existence/uniqueness per morphism class.
UniversalReport universal_audit(const BooleanAlgebra& b1, const BooleanAlgebra& b2,
                                const std::vector<BlockedLattice>& corpus,
                                int max_elements = kDefaultMaxElements);

// First non-distributive triple of the shape (a proper in block 0; b proper
// in block 1; c = b'): a /\ (b \/ c) = a but (a /\ b) \/ (a /\ c) = bottom.
// Exists exactly when at least two blocks have 4 or more elements.
std::optional<std::array<ElemId, 3>> blockwise_distributivity_witness(const GluedLattice& p);

// Display labels for a glued carrier: "0"/"1" for the bounds, block index
// plus atom bitstring for proper elements.
std::vector<std::string> glued_labels(const GluedLattice& p);

}  // namespace omlat
