#include "omlat/lattice.hpp"

#include <algorithm>
#include <bit>

namespace omlat {

namespace {

// Row-packed downsets: word w of row x has bit b set iff element 64*w+b <= x.
struct PackedDownsets {
  int n = 0;
  int words = 0;
  std::vector<uint64_t> rows;

  PackedDownsets(int n_in, const std::vector<uint8_t>& leq) : n(n_in), words((n_in + 63) / 64) {
    rows.assign(static_cast<std::size_t>(n) * words, 0);
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z)
        if (leq[static_cast<std::size_t>(z) * n + x]) rows[static_cast<std::size_t>(x) * words + z / 64] |= uint64_t{1} << (z % 64);
  }

  const uint64_t* row(int x) const { return rows.data() + static_cast<std::size_t>(x) * words; }
};

void check_poset(int n, const std::vector<uint8_t>& leq) {
  auto le = [&](int x, int y) { return leq[static_cast<std::size_t>(x) * n + y] != 0; };
  for (int x = 0; x < n; ++x)
    if (!le(x, x)) fail(ErrorCode::NotAPoset, "relation is not reflexive at element " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && le(x, y) && le(y, x))
        fail(ErrorCode::NotAPoset,
             "antisymmetry fails at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  // Transitivity via downset inclusion: y <= x implies downset(y) subset of downset(x).
  PackedDownsets down(n, leq);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (le(y, x)) {
        const uint64_t* dy = down.row(y);
        const uint64_t* dx = down.row(x);
        for (int w = 0; w < down.words; ++w)
          if ((dy[w] & ~dx[w]) != 0)
            fail(ErrorCode::NotAPoset,
                 "transitivity fails below (" + std::to_string(y) + ", " + std::to_string(x) + ")");
      }
}

void check_bounds(int n, const std::vector<uint8_t>& leq, ElemId bottom, ElemId top) {
  auto le = [&](int x, int y) { return leq[static_cast<std::size_t>(x) * n + y] != 0; };
  for (int x = 0; x < n; ++x) {
    if (!le(bottom, x)) fail(ErrorCode::BadBounds, "bottom is not below element " + std::to_string(x));
    if (!le(x, top)) fail(ErrorCode::BadBounds, "top is not above element " + std::to_string(x));
  }
}

void check_shape(int n, const std::vector<uint8_t>& leq, ElemId bottom, ElemId top) {
  if (n <= 0) fail(ErrorCode::BadInput, "element count must be positive");
  if (leq.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    fail(ErrorCode::BadInput, "order relation must be n x n");
  if (bottom < 0 || bottom >= n || top < 0 || top >= n)
    fail(ErrorCode::BadInput, "bottom/top out of range");
  if (bottom == top) fail(ErrorCode::BadBounds, "bottom and top must be distinct");
}

}  // namespace

FiniteLattice FiniteLattice::build(int n, const std::vector<uint8_t>& leq, ElemId bottom, ElemId top) {
  check_shape(n, leq, bottom, top);
  check_poset(n, leq);
  check_bounds(n, leq, bottom, top);

  PackedDownsets down(n, leq);
  const int words = down.words;
  std::vector<uint64_t> inter(words);

  // Upsets are downsets of the dual order; reuse the same machinery.
  std::vector<uint8_t> geq(leq.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) geq[static_cast<std::size_t>(x) * n + y] = leq[static_cast<std::size_t>(y) * n + x];
  PackedDownsets up(n, geq);

  FiniteLattice out;
  out.n_ = n;
  out.bottom_ = bottom;
  out.top_ = top;
  out.leq_ = leq;
  out.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  out.join_.assign(static_cast<std::size_t>(n) * n, -1);

  auto bounded_extremum = [&](const PackedDownsets& sets, int x, int y) -> ElemId {
    const uint64_t* a = sets.row(x);
    const uint64_t* b = sets.row(y);
    for (int w = 0; w < words; ++w) inter[w] = a[w] & b[w];
    // The glb (dually lub) is the member of the intersection whose downset
    // (dually upset) contains the whole intersection. Unique by antisymmetry.
    for (int w = 0; w < words; ++w) {
      uint64_t bits = inter[w];
      while (bits != 0) {
        int z = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const uint64_t* dz = sets.row(z);
        bool greatest = true;
        for (int v = 0; v < words; ++v)
          if ((inter[v] & ~dz[v]) != 0) {
            greatest = false;
            break;
          }
        if (greatest) return z;
      }
    }
    return -1;
  };

  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      ElemId m = bounded_extremum(down, x, y);
      if (m < 0)
        fail(ErrorCode::NotALattice,
             "pair (" + std::to_string(x) + ", " + std::to_string(y) + ") has no greatest lower bound");
      ElemId j = bounded_extremum(up, x, y);
      if (j < 0)
        fail(ErrorCode::NotALattice,
             "pair (" + std::to_string(x) + ", " + std::to_string(y) + ") has no least upper bound");
      out.meet_[out.idx(x, y)] = out.meet_[out.idx(y, x)] = m;
      out.join_[out.idx(x, y)] = out.join_[out.idx(y, x)] = j;
    }
  return out;
}

FiniteLattice FiniteLattice::from_tables(int n, std::vector<uint8_t> leq, std::vector<ElemId> meet,
                                         std::vector<ElemId> join, ElemId bottom, ElemId top,
                                         int full_check_limit) {
  check_shape(n, leq, bottom, top);
  if (meet.size() != leq.size() || join.size() != leq.size())
    fail(ErrorCode::BadInput, "meet/join tables must be n x n");

  if (n <= full_check_limit) {
    FiniteLattice reference = build(n, leq, bottom, top);
    if (reference.meet_ != meet || reference.join_ != join)
      fail(ErrorCode::NotALattice, "supplied meet/join tables disagree with the order relation");
    return reference;
  }

  // Large carrier: cheap consistency checks only.
  auto le = [&](int x, int y) { return leq[static_cast<std::size_t>(x) * n + y] != 0; };
  for (int x = 0; x < n; ++x)
    if (!le(x, x)) fail(ErrorCode::NotAPoset, "relation is not reflexive at element " + std::to_string(x));
  check_bounds(n, leq, bottom, top);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ElemId m = meet[static_cast<std::size_t>(x) * n + y];
      ElemId j = join[static_cast<std::size_t>(x) * n + y];
      if (m < 0 || m >= n || j < 0 || j >= n) fail(ErrorCode::BadInput, "meet/join entry out of range");
      if (!le(m, x) || !le(m, y) || !le(x, j) || !le(y, j))
        fail(ErrorCode::NotALattice, "meet/join tables disagree with the order relation");
      if (le(x, y) && (m != x || j != y))
        fail(ErrorCode::NotALattice, "meet/join tables disagree with the order relation");
    }

  FiniteLattice out;
  out.n_ = n;
  out.bottom_ = bottom;
  out.top_ = top;
  out.leq_ = std::move(leq);
  out.meet_ = std::move(meet);
  out.join_ = std::move(join);
  return out;
}

FiniteLattice build_lattice(int n, const std::vector<uint8_t>& leq, ElemId bottom, ElemId top) {
  return FiniteLattice::build(n, leq, bottom, top);
}

FiniteOrthoLattice::FiniteOrthoLattice(FiniteLattice lattice, std::vector<ElemId> ortho)
    : lattice_(std::move(lattice)), ortho_(std::move(ortho)) {
  Verdict v = is_ortholattice(lattice_, ortho_);
  if (!v.pass)
    fail(ErrorCode::NotAnOrtholattice,
         v.witness->law + " law fails at element " + std::to_string(v.witness->elems.front()));
}

Verdict is_distributive(const FiniteLattice& l) {
  const int n = l.size();
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b)
      for (ElemId c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          return {false, Witness{"distributive", {a, b, c}}};
  return {};
}

Verdict is_modular(const FiniteLattice& l) {
  const int n = l.size();
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      for (ElemId z = 0; z < n; ++z)
        if (l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
          return {false, Witness{"modular", {x, y, z}}};
  return {};
}

Verdict is_ortholattice(const FiniteLattice& l, const std::vector<ElemId>& ortho) {
  const int n = l.size();
  if (ortho.size() != static_cast<std::size_t>(n)) fail(ErrorCode::BadInput, "ortho map must have n entries");
  for (ElemId x = 0; x < n; ++x)
    if (ortho[x] < 0 || ortho[x] >= n) fail(ErrorCode::BadInput, "ortho map entry out of range");

  for (ElemId x = 0; x < n; ++x)
    if (ortho[ortho[x]] != x) return {false, Witness{"involution", {x}}};
  for (ElemId x = 0; x < n; ++x)
    if (l.meet(x, ortho[x]) != l.bottom() || l.join(x, ortho[x]) != l.top())
      return {false, Witness{"complement", {x}}};
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (l.leq(x, y) && !l.leq(ortho[y], ortho[x])) return {false, Witness{"order-reversal", {x, y}}};
  return {};
}

Verdict is_orthomodular(const FiniteOrthoLattice& l) {
  const int n = l.size();
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (l.leq(x, y) && l.join(x, l.meet(l.ortho(x), y)) != y)
        return {false, Witness{"orthomodular", {x, y}}};
  return {};
}

std::vector<std::pair<ElemId, ElemId>> hasse_covers(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<std::pair<ElemId, ElemId>> covers;
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      if (!l.lt(x, y)) continue;
      bool direct = true;
      for (ElemId z = 0; z < n; ++z)
        if (l.lt(x, z) && l.lt(z, y)) {
          direct = false;
          break;
        }
      if (direct) covers.emplace_back(x, y);
    }
  return covers;
}

}  // namespace omlat
