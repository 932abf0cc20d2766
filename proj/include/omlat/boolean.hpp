#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omlat/lattice.hpp"

namespace omlat {

// Cap on hom-set enumeration (|X|^|Y| functions).
inline constexpr long long kMaxHomEnumeration = 1 << 20;

// Powerset algebra P(X) over a finite ground set. Element ids are the subset
// bitmasks themselves (bit i = atom i), so the order is inclusion, meet/join
// are bitwise and/or, and the orthocomplement is the set complement. Every
// finite Boolean algebra is isomorphic to one of these.
class BooleanAlgebra {
 public:
  static BooleanAlgebra powerset(int atoms, int max_elements = kDefaultMaxElements);
  static BooleanAlgebra two_element();

  int atoms() const { return atoms_; }
  int size() const { return 1 << atoms_; }
  ElemId bottom() const { return 0; }
  ElemId top() const { return size() - 1; }
  const FiniteOrthoLattice& view() const { return view_; }

  friend bool operator==(const BooleanAlgebra& a, const BooleanAlgebra& b) { return a.atoms_ == b.atoms_; }

 private:
  explicit BooleanAlgebra(int atoms);

  int atoms_;
  FiniteOrthoLattice view_;
};

inline BooleanAlgebra two() { return BooleanAlgebra::two_element(); }
inline BooleanAlgebra powerset(int atoms, int max_elements = kDefaultMaxElements) {
  return BooleanAlgebra::powerset(atoms, max_elements);
}

// Which structure a total element map preserves; computed once at
// construction by exhaustive scan and cached. bound_reflecting means the
// preimage of {bottom, top} is exactly {bottom, top}.
struct HomFlags {
  bool preserves_meet = false;
  bool preserves_join = false;
  bool preserves_bounds = false;
  bool preserves_ortho = false;
  bool bound_reflecting = false;

  bool lattice_hom() const { return preserves_meet && preserves_join && preserves_bounds; }
  bool ortho_hom() const { return lattice_hom() && preserves_ortho; }
  friend bool operator==(const HomFlags&, const HomFlags&) = default;
};

HomFlags compute_hom_flags(const FiniteOrthoLattice& source, const FiniteOrthoLattice& target,
                           const std::vector<ElemId>& map);

// First place a map fails to be an ortholattice homomorphism, in a fixed
// scan order: bounds, then for each source pair (lexicographic) meet then
// join, then the ortho scan. `at` holds source elements; expected/actual are
// target elements.
struct CounterReport {
  std::string operation;
  std::vector<ElemId> at;
  ElemId expected = -1;
  ElemId actual = -1;
  friend bool operator==(const CounterReport&, const CounterReport&) = default;
};

std::optional<CounterReport> first_hom_violation(const FiniteOrthoLattice& source,
                                                 const FiniteOrthoLattice& target,
                                                 const std::vector<ElemId>& map);

// Total element map between ortholattices with cached property flags.
class LatticeHom {
 public:
  LatticeHom(FiniteOrthoLattice source, FiniteOrthoLattice target, std::vector<ElemId> map);

  static LatticeHom identity(const FiniteOrthoLattice& l);

  const FiniteOrthoLattice& source() const { return source_; }
  const FiniteOrthoLattice& target() const { return target_; }
  const std::vector<ElemId>& map() const { return map_; }
  ElemId operator()(ElemId x) const { return map_[static_cast<std::size_t>(x)]; }
  const HomFlags& flags() const { return flags_; }

  friend bool operator==(const LatticeHom& a, const LatticeHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
  }

 private:
  FiniteOrthoLattice source_;
  FiniteOrthoLattice target_;
  std::vector<ElemId> map_;
  HomFlags flags_;
};

// outer . inner; requires inner.target() == outer.source().
LatticeHom compose(const LatticeHom& outer, const LatticeHom& inner);

struct BooleanHomVerdict {
  bool pass = false;
  bool complements_preserved = false;
  std::optional<Witness> witness;
};

// Bounded-lattice homomorphism check (meet, join, bottom, top). Records, as
// a checked consequence rather than an assumption, whether complements are
// then preserved as well.
BooleanHomVerdict is_boolean_hom(const LatticeHom& h);

// All bounded-lattice homomorphisms P(X) -> P(Y), via the bijection with
// functions Y -> X (h = preimage map). Count is |X|^|Y|; enumeration order is
// lexicographic in the function's value vector. Every emitted hom passes
// is_boolean_hom.
std::vector<LatticeHom> enumerate_boolean_homs(const BooleanAlgebra& a, const BooleanAlgebra& b);

// Coproduct P(X) + P(Y) = P(X x Y) with injections S |-> S x Y, T |-> X x T.
struct Coproduct {
  BooleanAlgebra algebra;
  LatticeHom inj1;
  LatticeHom inj2;
};

Coproduct coproduct(const BooleanAlgebra& a, const BooleanAlgebra& b,
                    int max_elements = kDefaultMaxElements);

}  // namespace omlat
