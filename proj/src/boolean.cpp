#include "omlat/boolean.hpp"

#include <utility>

namespace omlat {

namespace {

FiniteOrthoLattice powerset_view(int atoms) {
  const int n = 1 << atoms;
  const ElemId full = n - 1;
  std::vector<uint8_t> leq(static_cast<std::size_t>(n) * n);
  std::vector<ElemId> meet(leq.size()), join(leq.size());
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      const std::size_t i = static_cast<std::size_t>(x) * n + y;
      leq[i] = (x & ~y) == 0 ? 1 : 0;
      meet[i] = x & y;
      join[i] = x | y;
    }
  std::vector<ElemId> ortho(n);
  for (ElemId x = 0; x < n; ++x) ortho[x] = full ^ x;
  return {FiniteLattice::from_tables(n, std::move(leq), std::move(meet), std::move(join), 0, full),
          std::move(ortho)};
}

}  // namespace

BooleanAlgebra::BooleanAlgebra(int atoms) : atoms_(atoms), view_(powerset_view(atoms)) {}

BooleanAlgebra BooleanAlgebra::powerset(int atoms, int max_elements) {
  if (atoms < 1) fail(ErrorCode::BadInput, "atom count must be at least 1");
  if (atoms >= 31 || (1LL << atoms) > max_elements)
    fail(ErrorCode::SizeLimit, "powerset over " + std::to_string(atoms) + " atoms exceeds the element cap");
  return BooleanAlgebra(atoms);
}

BooleanAlgebra BooleanAlgebra::two_element() { return BooleanAlgebra(1); }

HomFlags compute_hom_flags(const FiniteOrthoLattice& source, const FiniteOrthoLattice& target,
                           const std::vector<ElemId>& map) {
  const int n = source.size();
  HomFlags f;
  f.preserves_meet = f.preserves_join = true;
  for (ElemId x = 0; x < n && (f.preserves_meet || f.preserves_join); ++x)
    for (ElemId y = 0; y < n; ++y) {
      if (map[source.meet(x, y)] != target.meet(map[x], map[y])) f.preserves_meet = false;
      if (map[source.join(x, y)] != target.join(map[x], map[y])) f.preserves_join = false;
    }
  f.preserves_bounds = map[source.bottom()] == target.bottom() && map[source.top()] == target.top();
  f.preserves_ortho = true;
  for (ElemId x = 0; x < n; ++x)
    if (map[source.ortho(x)] != target.ortho(map[x])) {
      f.preserves_ortho = false;
      break;
    }
  f.bound_reflecting = f.preserves_bounds;
  for (ElemId x = 0; x < n && f.bound_reflecting; ++x)
    if (x != source.bottom() && x != source.top() && (map[x] == target.bottom() || map[x] == target.top()))
      f.bound_reflecting = false;
  return f;
}

std::optional<CounterReport> first_hom_violation(const FiniteOrthoLattice& source,
                                                 const FiniteOrthoLattice& target,
                                                 const std::vector<ElemId>& map) {
  if (map[source.bottom()] != target.bottom())
    return CounterReport{"bounds", {source.bottom()}, target.bottom(), map[source.bottom()]};
  if (map[source.top()] != target.top())
    return CounterReport{"bounds", {source.top()}, target.top(), map[source.top()]};
  const int n = source.size();
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      ElemId expected = map[source.meet(x, y)];
      ElemId actual = target.meet(map[x], map[y]);
      if (expected != actual) return CounterReport{"meet", {x, y}, expected, actual};
      expected = map[source.join(x, y)];
      actual = target.join(map[x], map[y]);
      if (expected != actual) return CounterReport{"join", {x, y}, expected, actual};
    }
  for (ElemId x = 0; x < n; ++x)
    if (map[source.ortho(x)] != target.ortho(map[x]))
      return CounterReport{"ortho", {x}, map[source.ortho(x)], target.ortho(map[x])};
  return std::nullopt;
}

LatticeHom::LatticeHom(FiniteOrthoLattice source, FiniteOrthoLattice target, std::vector<ElemId> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != static_cast<std::size_t>(source_.size()))
    fail(ErrorCode::BadInput, "hom map must cover every source element");
  for (ElemId v : map_)
    if (v < 0 || v >= target_.size()) fail(ErrorCode::BadInput, "hom map entry out of range");
  flags_ = compute_hom_flags(source_, target_, map_);
}

LatticeHom LatticeHom::identity(const FiniteOrthoLattice& l) {
  std::vector<ElemId> map(static_cast<std::size_t>(l.size()));
  for (ElemId x = 0; x < l.size(); ++x) map[x] = x;
  return {l, l, std::move(map)};
}

LatticeHom compose(const LatticeHom& outer, const LatticeHom& inner) {
  if (!(inner.target() == outer.source())) fail(ErrorCode::BadInput, "hom composition endpoint mismatch");
  std::vector<ElemId> map(inner.map().size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = outer.map()[inner.map()[x]];
  return {inner.source(), outer.target(), std::move(map)};
}

BooleanHomVerdict is_boolean_hom(const LatticeHom& h) {
  const auto& s = h.source();
  const auto& t = h.target();
  const auto& m = h.map();
  BooleanHomVerdict v;
  if (m[s.bottom()] != t.bottom()) {
    v.witness = Witness{"bottom", {s.bottom()}};
    return v;
  }
  if (m[s.top()] != t.top()) {
    v.witness = Witness{"top", {s.top()}};
    return v;
  }
  for (ElemId x = 0; x < s.size(); ++x)
    for (ElemId y = 0; y < s.size(); ++y) {
      if (m[s.meet(x, y)] != t.meet(m[x], m[y])) {
        v.witness = Witness{"meet", {x, y}};
        return v;
      }
      if (m[s.join(x, y)] != t.join(m[x], m[y])) {
        v.witness = Witness{"join", {x, y}};
        return v;
      }
    }
  v.pass = true;
  v.complements_preserved = h.flags().preserves_ortho;
  return v;
}

std::vector<LatticeHom> enumerate_boolean_homs(const BooleanAlgebra& a, const BooleanAlgebra& b) {
  const int src_atoms = a.atoms();
  const int dst_atoms = b.atoms();
  long long count = 1;
  for (int i = 0; i < dst_atoms; ++i) {
    count *= src_atoms;
    if (count > kMaxHomEnumeration) fail(ErrorCode::SizeLimit, "hom-set enumeration too large");
  }

  std::vector<LatticeHom> homs;
  homs.reserve(static_cast<std::size_t>(count));
  std::vector<int> fn(static_cast<std::size_t>(dst_atoms), 0);  // atom of b -> atom of a
  while (true) {
    std::vector<ElemId> map(static_cast<std::size_t>(a.size()));
    for (ElemId s = 0; s < a.size(); ++s) {
      ElemId image = 0;
      for (int y = 0; y < dst_atoms; ++y)
        if ((s >> fn[y]) & 1) image |= ElemId{1} << y;
      map[s] = image;
    }
    homs.emplace_back(a.view(), b.view(), std::move(map));
    if (!is_boolean_hom(homs.back()).pass)
      fail(ErrorCode::BadInput, "enumerated preimage map failed the homomorphism check");

    // Odometer: last atom varies fastest.
    int pos = dst_atoms - 1;
    while (pos >= 0 && fn[pos] == src_atoms - 1) fn[pos--] = 0;
    if (pos < 0) break;
    ++fn[pos];
  }
  return homs;
}

Coproduct coproduct(const BooleanAlgebra& a, const BooleanAlgebra& b, int max_elements) {
  const long long atoms = static_cast<long long>(a.atoms()) * b.atoms();
  if (atoms >= 31 || (1LL << atoms) > max_elements)
    fail(ErrorCode::SizeLimit, "coproduct exceeds the element cap");
  BooleanAlgebra prod = BooleanAlgebra::powerset(static_cast<int>(atoms), max_elements);

  // Pair atom (x, y) of the product is bit x*|Y|+y.
  auto pair_bit = [&](int x, int y) { return x * b.atoms() + y; };
  std::vector<ElemId> map1(static_cast<std::size_t>(a.size()));
  for (ElemId s = 0; s < a.size(); ++s) {
    ElemId image = 0;
    for (int x = 0; x < a.atoms(); ++x)
      if ((s >> x) & 1)
        for (int y = 0; y < b.atoms(); ++y) image |= ElemId{1} << pair_bit(x, y);
    map1[s] = image;
  }
  std::vector<ElemId> map2(static_cast<std::size_t>(b.size()));
  for (ElemId t = 0; t < b.size(); ++t) {
    ElemId image = 0;
    for (int y = 0; y < b.atoms(); ++y)
      if ((t >> y) & 1)
        for (int x = 0; x < a.atoms(); ++x) image |= ElemId{1} << pair_bit(x, y);
    map2[t] = image;
  }
  LatticeHom inj1(a.view(), prod.view(), std::move(map1));
  LatticeHom inj2(b.view(), prod.view(), std::move(map2));
  return {std::move(prod), std::move(inj1), std::move(inj2)};
}

}  // namespace omlat
