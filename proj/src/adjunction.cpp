#include "omlat/adjunction.hpp"

#include <algorithm>
#include <stdexcept>

namespace omlat {

namespace {

constexpr int kMaxAuditBound = 3;

std::string pair_name(int a1, int a2) {
  return "B(" + std::to_string(a1) + ")xB(" + std::to_string(a2) + ")";
}

std::string glued_name(int a1, int a2) {
  return "glue(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
}

using MapPair = std::pair<std::vector<ElemId>, std::vector<ElemId>>;

}  // namespace

HomSet enumerate_ctx_homs(const GluedLattice& p, const BlockedLattice& l) {
  if (l.blocks().size() != p.blocks().size())
    fail(ErrorCode::BlockCount, "source and target must carry the same number of blocks");
  if (p.inputs().size() != 2) fail(ErrorCode::BlockCount, "ctx hom enumeration expects two blocks");

  HomSet out;
  out.source = "glue n=" + std::to_string(p.carrier().size());
  out.target = "blocked n=" + std::to_string(l.carrier().size());

  const auto homs1 = enumerate_boolean_homs(p.inputs()[0], l.view(0).algebra);
  const auto homs2 = enumerate_boolean_homs(p.inputs()[1], l.view(1).algebra);
  const int n = p.carrier().size();
  for (const auto& r1 : homs1)
    for (const auto& r2 : homs2) {
      std::vector<ElemId> map(static_cast<std::size_t>(n));
      map[static_cast<std::size_t>(p.carrier().bottom())] = l.carrier().bottom();
      map[static_cast<std::size_t>(p.carrier().top())] = l.carrier().top();
      for (ElemId e = 0; e < n; ++e) {
        const auto a = p.address(e);
        if (a.block == 0) map[static_cast<std::size_t>(e)] = l.view(0).embedding(r1(a.mask));
        if (a.block == 1) map[static_cast<std::size_t>(e)] = l.view(1).embedding(r2(a.mask));
      }
      LatticeHom h(p.carrier(), l.carrier(), std::move(map));
      if (h.flags().ortho_hom()) out.homs.push_back(std::move(h));
    }
  return out;
}

std::pair<LatticeHom, LatticeHom> restrict_to_blocks(const GluedLattice& p, const BlockedLattice& l,
                                                     const LatticeHom& h) {
  if (p.inputs().size() != 2 || l.blocks().size() != 2)
    fail(ErrorCode::BlockCount, "restriction expects two blocks on each side");
  std::vector<LatticeHom> parts;
  for (int j = 0; j < 2; ++j) {
    const auto& b = p.inputs()[static_cast<std::size_t>(j)];
    std::vector<ElemId> map(static_cast<std::size_t>(b.size()));
    for (ElemId mask = 0; mask < b.size(); ++mask) {
      ElemId image = l.view(j).carrier_to_mask[static_cast<std::size_t>(h(p.inject(j, mask)))];
      if (image < 0) fail(ErrorCode::BadInput, "hom does not map block " + std::to_string(j + 1) +
                                                   " into the target block");
      map[static_cast<std::size_t>(mask)] = image;
    }
    parts.emplace_back(b.view(), l.view(j).algebra.view(), std::move(map));
  }
  return {std::move(parts[0]), std::move(parts[1])};
}

std::variant<LatticeHom, CounterReport> extend_from_blocks(const GluedLattice& p,
                                                           const BlockedLattice& l,
                                                           const LatticeHom& f1,
                                                           const LatticeHom& f2) {
  if (p.inputs().size() != 2 || l.blocks().size() != 2)
    fail(ErrorCode::BlockCount, "extension expects two blocks on each side");
  const LatticeHom* fs[2] = {&f1, &f2};
  for (int j = 0; j < 2; ++j)
    if (!(fs[j]->source() == p.inputs()[static_cast<std::size_t>(j)].view()) ||
        !(fs[j]->target() == l.view(j).algebra.view()))
      fail(ErrorCode::BlockMismatch, "component hom endpoints do not match the block structure");
  MediateResult res =
      mediate(p, compose(l.view(0).embedding, f1), compose(l.view(1).embedding, f2), l.carrier());
  if (auto* ok = std::get_if<MediateSuccess>(&res)) return ok->hom;
  return std::get<CounterReport>(res);
}

AdjunctionReport adjunction_audit(int bound, int max_elements) {
  if (bound < 0 || bound > kMaxAuditBound) fail(ErrorCode::SizeLimit, "audit bound out of range");

  AdjunctionReport report;
  report.bound = bound;

  std::vector<std::pair<int, int>> pairs;
  for (int a1 = 1; a1 <= bound; ++a1)
    for (int a2 = 1; a2 <= bound; ++a2) pairs.emplace_back(a1, a2);

  std::vector<GluedLattice> glued;
  std::vector<BlockedLattice> blocked;
  glued.reserve(pairs.size());
  for (auto [a1, a2] : pairs) {
    glued.push_back(glue(powerset(a1), powerset(a2), max_elements));
    blocked.push_back(glued.back().as_blocked());
  }
  const std::size_t cells = pairs.size();

  // Hom-sets between every source and codomain; reused for naturality.
  std::vector<std::vector<HomSet>> ctx(cells, std::vector<HomSet>());
  for (std::size_t s = 0; s < cells; ++s)
    for (std::size_t c = 0; c < cells; ++c) ctx[s].push_back(enumerate_ctx_homs(glued[s], blocked[c]));

  auto restrictions_of = [&](std::size_t s, std::size_t c, const LatticeHom& h) {
    return restrict_to_blocks(glued[s], blocked[c], h);
  };
  auto is_br_pair = [](const LatticeHom& f1, const LatticeHom& f2) {
    return f1.flags().bound_reflecting && f2.flags().bound_reflecting;
  };

  for (std::size_t s = 0; s < cells; ++s) {
    const auto [sa1, sa2] = pairs[s];
    for (std::size_t c = 0; c < cells; ++c) {
      const auto [ca1, ca2] = pairs[c];
      const auto pairs1 = enumerate_boolean_homs(powerset(sa1), blocked[c].view(0).algebra);
      const auto pairs2 = enumerate_boolean_homs(powerset(sa2), blocked[c].view(1).algebra);

      for (int cls = 0; cls < 2; ++cls) {
        const bool br_only = cls == 0;
        AdjunctionCell cell;
        cell.source = pair_name(sa1, sa2);
        cell.codomain = glued_name(ca1, ca2);
        cell.hom_class = br_only ? "bound-reflecting" : "all";

        // Class-filtered hom-set and Boolean pair set.
        std::vector<const LatticeHom*> homs;
        std::vector<MapPair> images;
        for (const auto& h : ctx[s][c].homs) {
          auto [r1, r2] = restrictions_of(s, c, h);
          if (br_only && !is_br_pair(r1, r2)) continue;
          homs.push_back(&h);
          images.emplace_back(r1.map(), r2.map());
        }
        std::vector<std::pair<const LatticeHom*, const LatticeHom*>> bool_pairs;
        for (const auto& f1 : pairs1)
          for (const auto& f2 : pairs2) {
            if (br_only && !is_br_pair(f1, f2)) continue;
            bool_pairs.emplace_back(&f1, &f2);
          }
        cell.ctx_hom_count = static_cast<int>(homs.size());
        cell.pair_count = static_cast<int>(bool_pairs.size());

        std::vector<MapPair> sorted_images = images;
        std::sort(sorted_images.begin(), sorted_images.end());
        const bool injective =
            std::adjacent_find(sorted_images.begin(), sorted_images.end()) == sorted_images.end();
        std::vector<MapPair> target_pairs;
        target_pairs.reserve(bool_pairs.size());
        for (const auto& [f1, f2] : bool_pairs) target_pairs.emplace_back(f1->map(), f2->map());
        std::sort(target_pairs.begin(), target_pairs.end());
        cell.bijection = injective && sorted_images == target_pairs;

        for (const auto& [f1, f2] : bool_pairs) {
          MapPair key{f1->map(), f2->map()};
          if (std::binary_search(sorted_images.begin(), sorted_images.end(), key)) continue;
          auto res = extend_from_blocks(glued[s], blocked[c], *f1, *f2);
          if (std::holds_alternative<LatticeHom>(res))
            throw std::logic_error("blockwise extension succeeded outside the enumerated hom-set");
          cell.counterexamples.push_back({f1->map(), f2->map(), std::get<CounterReport>(res)});
        }

        if (br_only && cell.bijection) {
          bool natural = true;
          // Post-composition squares: k : codomain c -> codomain c2.
          for (std::size_t c2 = 0; c2 < cells && natural; ++c2)
            for (const auto& k : ctx[c][c2].homs) {
              auto [k1, k2] = restrictions_of(c, c2, k);
              if (!is_br_pair(k1, k2)) continue;
              for (const auto* h : homs) {
                auto [h1, h2] = restrictions_of(s, c, *h);
                auto [kh1, kh2] = restrictions_of(s, c2, compose(k, *h));
                if (!(kh1 == compose(k1, h1)) || !(kh2 == compose(k2, h2))) {
                  natural = false;
                  break;
                }
              }
              if (!natural) break;
            }
          // Pre-composition squares: (g1, g2) : source s2 -> source s.
          for (std::size_t s2 = 0; s2 < cells && natural; ++s2) {
            const auto [ta1, ta2] = pairs[s2];
            const auto gs1 = enumerate_boolean_homs(powerset(ta1), powerset(sa1));
            const auto gs2 = enumerate_boolean_homs(powerset(ta2), powerset(sa2));
            for (const auto& g1 : gs1) {
              if (!g1.flags().bound_reflecting) continue;
              for (const auto& g2 : gs2) {
                if (!g2.flags().bound_reflecting) continue;
                LatticeHom gh = glue_hom(glued[s2], glued[s], g1, g2);
                for (const auto* h : homs) {
                  auto [h1, h2] = restrictions_of(s, c, *h);
                  auto [hg1, hg2] = restrictions_of(s2, c, compose(*h, gh));
                  if (!(hg1 == compose(h1, g1)) || !(hg2 == compose(h2, g2))) {
                    natural = false;
                    break;
                  }
                }
                if (!natural) break;
              }
              if (!natural) break;
            }
          }
          cell.naturality = natural;
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }

  // Triangle identities, derived from the restriction map where the
  // bijection holds (glued codomains, bound-reflecting class).
  for (std::size_t s = 0; s < cells; ++s) {
    const auto [a1, a2] = pairs[s];
    TriangleRecord rec;
    rec.object = pair_name(a1, a2);
    auto unit = restrict_to_blocks(glued[s], blocked[s], LatticeHom::identity(glued[s].carrier()));
    LatticeHom g_unit = glue_hom(glued[s], glued[s], unit.first, unit.second);
    auto counit = extend_from_blocks(glued[s], blocked[s], LatticeHom::identity(unit.first.target()),
                                     LatticeHom::identity(unit.second.target()));
    rec.checked = std::holds_alternative<LatticeHom>(counit);
    rec.holds = rec.checked &&
                compose(std::get<LatticeHom>(counit), g_unit) ==
                    LatticeHom::identity(glued[s].carrier());
    report.unit_triangles.push_back(std::move(rec));
  }
  for (std::size_t c = 0; c < cells; ++c) {
    const auto [a1, a2] = pairs[c];
    TriangleRecord rec;
    rec.object = glued_name(a1, a2);
    auto counit = extend_from_blocks(glued[c], blocked[c],
                                     LatticeHom::identity(blocked[c].view(0).algebra.view()),
                                     LatticeHom::identity(blocked[c].view(1).algebra.view()));
    rec.checked = std::holds_alternative<LatticeHom>(counit);
    if (rec.checked) {
      auto eps = restrict_to_blocks(glued[c], blocked[c], std::get<LatticeHom>(counit));
      auto unit = restrict_to_blocks(glued[c], blocked[c], LatticeHom::identity(glued[c].carrier()));
      rec.holds = compose(eps.first, unit.first) == LatticeHom::identity(unit.first.source()) &&
                  compose(eps.second, unit.second) == LatticeHom::identity(unit.second.source());
    }
    report.counit_triangles.push_back(std::move(rec));
  }
  return report;
}

}  // namespace omlat
