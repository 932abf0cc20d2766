#include "omlat/iso.hpp"

#include <algorithm>
#include <array>

namespace omlat {

namespace {

struct Signature {
  int down = 0;
  int up = 0;
  int covers_out = 0;
  int covers_in = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<Signature> sig(static_cast<std::size_t>(n));
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (l.leq(x, y)) {
        ++sig[y].down;
        ++sig[x].up;
      }
  for (const auto& [lo, hi] : hasse_covers(l)) {
    ++sig[lo].covers_out;
    ++sig[hi].covers_in;
  }
  return sig;
}

struct IsoSearch {
  const FiniteLattice& a;
  const FiniteLattice& b;
  const std::vector<ElemId>* ortho_a = nullptr;
  const std::vector<ElemId>* ortho_b = nullptr;
  std::vector<Signature> sig_a, sig_b;
  std::vector<ElemId> map;      // a -> b, -1 unassigned
  std::vector<uint8_t> used;    // b side

  IsoSearch(const FiniteLattice& a_in, const FiniteLattice& b_in)
      : a(a_in), b(b_in), sig_a(signatures(a_in)), sig_b(signatures(b_in)),
        map(static_cast<std::size_t>(a_in.size()), -1),
        used(static_cast<std::size_t>(b_in.size()), 0) {}

  bool consistent(ElemId x, ElemId y) const {
    if (sig_a[x] != sig_b[y]) return false;
    for (ElemId z = 0; z < a.size(); ++z) {
      if (map[z] < 0) continue;
      if (a.leq(x, z) != b.leq(y, map[z])) return false;
      if (a.leq(z, x) != b.leq(map[z], y)) return false;
    }
    if (ortho_a != nullptr) {
      ElemId xo = (*ortho_a)[x];
      if (map[xo] >= 0 && map[xo] != (*ortho_b)[y]) return false;
    }
    return true;
  }

  bool extend(ElemId x) {
    if (x == a.size()) return true;
    if (map[x] >= 0) return extend(x + 1);
    for (ElemId y = 0; y < b.size(); ++y) {
      if (used[y] || !consistent(x, y)) continue;
      map[x] = y;
      used[y] = 1;
      if (extend(x + 1)) return true;
      map[x] = -1;
      used[y] = 0;
    }
    return false;
  }
};

std::optional<std::vector<ElemId>> run_search(const FiniteLattice& a, const FiniteLattice& b,
                                              const std::vector<ElemId>* oa,
                                              const std::vector<ElemId>* ob) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch search(a, b);
  search.ortho_a = oa;
  search.ortho_b = ob;

  // Bounds are forced.
  search.map[a.bottom()] = b.bottom();
  search.used[b.bottom()] = 1;
  if (a.top() != a.bottom()) {
    if (b.top() == b.bottom()) return std::nullopt;
    search.map[a.top()] = b.top();
    search.used[b.top()] = 1;
  }
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

}  // namespace

std::optional<std::vector<ElemId>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  return run_search(a, b, nullptr, nullptr);
}

std::optional<std::vector<ElemId>> find_isomorphism(const FiniteOrthoLattice& a,
                                                    const FiniteOrthoLattice& b) {
  return run_search(a.lattice(), b.lattice(), &a.ortho_map(), &b.ortho_map());
}

}  // namespace omlat
