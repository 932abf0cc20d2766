#include "omlat/glue.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace omlat {

namespace {

std::string describe_blocked(const BlockedLattice& l) {
  std::string s = "n=" + std::to_string(l.carrier().size()) + " blocks=[";
  for (std::size_t j = 0; j < l.blocks().size(); ++j) {
    if (j > 0) s += ",";
    s += std::to_string(l.blocks()[j].size());
  }
  return s + "]";
}

}  // namespace

BlockView extract_block(const FiniteOrthoLattice& carrier, const std::vector<ElemId>& block) {
  std::vector<ElemId> elems = block;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) fail(ErrorCode::NotABooleanBlock, "block is empty");
  if (elems.front() < 0 || elems.back() >= carrier.size())
    fail(ErrorCode::BadInput, "block element out of range");

  std::vector<uint8_t> member(static_cast<std::size_t>(carrier.size()), 0);
  for (ElemId e : elems) member[static_cast<std::size_t>(e)] = 1;
  if (!member[carrier.bottom()] || !member[carrier.top()])
    fail(ErrorCode::NotABooleanBlock, "block must contain the carrier bounds");
  for (ElemId x : elems) {
    if (!member[carrier.ortho(x)])
      fail(ErrorCode::NotABooleanBlock, "block is not closed under orthocomplement");
    for (ElemId y : elems)
      if (!member[carrier.meet(x, y)] || !member[carrier.join(x, y)])
        fail(ErrorCode::NotABooleanBlock, "block is not closed under meet/join");
  }

  // Atoms of the block: minimal nonzero members.
  std::vector<ElemId> atoms;
  for (ElemId x : elems) {
    if (x == carrier.bottom()) continue;
    bool minimal = true;
    for (ElemId z : elems)
      if (z != carrier.bottom() && z != x && carrier.leq(z, x)) {
        minimal = false;
        break;
      }
    if (minimal) atoms.push_back(x);
  }
  const int k = static_cast<int>(atoms.size());
  if (k < 1 || k > 20 || (std::size_t{1} << k) != elems.size())
    fail(ErrorCode::NotABooleanBlock, "block size is not 2^(atom count)");

  std::vector<ElemId> carrier_to_mask(static_cast<std::size_t>(carrier.size()), -1);
  std::vector<ElemId> mask_to_elem(std::size_t{1} << k, -1);
  for (ElemId e : elems) {
    ElemId mask = 0;
    for (int i = 0; i < k; ++i)
      if (carrier.leq(atoms[static_cast<std::size_t>(i)], e)) mask |= ElemId{1} << i;
    if (mask_to_elem[static_cast<std::size_t>(mask)] != -1)
      fail(ErrorCode::NotABooleanBlock, "two block elements dominate the same atoms");
    mask_to_elem[static_cast<std::size_t>(mask)] = e;
    carrier_to_mask[static_cast<std::size_t>(e)] = mask;
  }

  BooleanAlgebra algebra = BooleanAlgebra::powerset(k);
  LatticeHom embedding(algebra.view(), carrier, mask_to_elem);
  if (!embedding.flags().ortho_hom())
    fail(ErrorCode::NotABooleanBlock, "block is not a Boolean subalgebra");
  return {std::move(algebra), std::move(embedding), std::move(carrier_to_mask)};
}

BlockedLattice::BlockedLattice(FiniteOrthoLattice carrier, std::vector<std::vector<ElemId>> blocks)
    : carrier_(std::move(carrier)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) fail(ErrorCode::BlockCount, "at least one block required");
  for (auto& block : blocks_) {
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    views_.push_back(extract_block(carrier_, block));
  }
}

ElemId GluedLattice::inject(int block, ElemId mask) const {
  const BooleanAlgebra& b = inputs_[static_cast<std::size_t>(block)];
  if (mask == b.bottom()) return carrier_.bottom();
  if (mask == b.top()) return carrier_.top();
  return offsets_[static_cast<std::size_t>(block)] + mask - 1;
}

GluedLattice glue_n(const std::vector<BooleanAlgebra>& inputs, int max_elements) {
  if (inputs.empty()) fail(ErrorCode::BadInput, "at least one algebra required");
  long long total = 2;
  for (const auto& b : inputs) total += b.size() - 2;
  if (total > max_elements) fail(ErrorCode::SizeLimit, "glued carrier exceeds the element cap");

  const int n = static_cast<int>(total);
  const ElemId bottom = 0;
  const ElemId top = n - 1;
  const int m = static_cast<int>(inputs.size());

  GluedLattice out;
  out.inputs_ = inputs;
  out.offsets_.resize(static_cast<std::size_t>(m));
  out.address_.assign(static_cast<std::size_t>(n), {});
  int next = 1;
  for (int j = 0; j < m; ++j) {
    out.offsets_[static_cast<std::size_t>(j)] = next;
    for (ElemId mask = 1; mask < inputs[static_cast<std::size_t>(j)].top(); ++mask)
      out.address_[static_cast<std::size_t>(next++)] = {j, mask};
  }
  out.address_[static_cast<std::size_t>(bottom)] = {-1, 0};
  out.address_[static_cast<std::size_t>(top)] = {-1, 0};

  std::vector<uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<ElemId> meet(leq.size()), join(leq.size());
  auto at = [&](ElemId x, ElemId y) { return static_cast<std::size_t>(x) * n + y; };
  for (ElemId x = 0; x < n; ++x) {
    leq[at(x, x)] = 1;
    leq[at(bottom, x)] = 1;
    leq[at(x, top)] = 1;
  }
  for (ElemId x = 1; x < top; ++x)
    for (ElemId y = 1; y < top; ++y) {
      const auto& ax = out.address_[static_cast<std::size_t>(x)];
      const auto& ay = out.address_[static_cast<std::size_t>(y)];
      if (ax.block == ay.block && (ax.mask & ~ay.mask) == 0) leq[at(x, y)] = 1;
    }
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      if (leq[at(x, y)]) {
        meet[at(x, y)] = x;
        join[at(x, y)] = y;
      } else if (leq[at(y, x)]) {
        meet[at(x, y)] = y;
        join[at(x, y)] = x;
      } else {
        // Two incomparable propers.
        const auto& ax = out.address_[static_cast<std::size_t>(x)];
        const auto& ay = out.address_[static_cast<std::size_t>(y)];
        if (ax.block == ay.block) {
          meet[at(x, y)] = out.inject(ax.block, ax.mask & ay.mask);
          join[at(x, y)] = out.inject(ax.block, ax.mask | ay.mask);
        } else {
          meet[at(x, y)] = bottom;
          join[at(x, y)] = top;
        }
      }
    }

  std::vector<ElemId> ortho(static_cast<std::size_t>(n));
  ortho[static_cast<std::size_t>(bottom)] = top;
  ortho[static_cast<std::size_t>(top)] = bottom;
  for (ElemId x = 1; x < top; ++x) {
    const auto& a = out.address_[static_cast<std::size_t>(x)];
    ortho[static_cast<std::size_t>(x)] =
        out.inject(a.block, inputs[static_cast<std::size_t>(a.block)].top() ^ a.mask);
  }

  out.carrier_ = FiniteOrthoLattice(
      FiniteLattice::from_tables(n, std::move(leq), std::move(meet), std::move(join), bottom, top),
      std::move(ortho));

  for (int j = 0; j < m; ++j) {
    const auto& b = inputs[static_cast<std::size_t>(j)];
    std::vector<ElemId> block = {bottom};
    std::vector<ElemId> inj(static_cast<std::size_t>(b.size()));
    for (ElemId mask = 0; mask < b.size(); ++mask) inj[static_cast<std::size_t>(mask)] = out.inject(j, mask);
    for (ElemId mask = 1; mask < b.top(); ++mask) block.push_back(out.inject(j, mask));
    block.push_back(top);
    out.blocks_.push_back(std::move(block));
    out.injections_.emplace_back(b.view(), out.carrier_, std::move(inj));
  }

  if (!is_orthomodular(out.carrier_).pass)
    throw std::logic_error("glued carrier failed the orthomodular law");
  return out;
}

GluedLattice glue(const BooleanAlgebra& b1, const BooleanAlgebra& b2, int max_elements) {
  return glue_n({b1, b2}, max_elements);
}

LatticeHom glue_hom(const GluedLattice& source, const GluedLattice& target, const LatticeHom& f1,
                    const LatticeHom& f2) {
  if (source.inputs().size() != 2 || target.inputs().size() != 2)
    fail(ErrorCode::BlockCount, "glue_hom expects binary glued lattices");
  const LatticeHom* fs[2] = {&f1, &f2};
  for (int j = 0; j < 2; ++j) {
    if (!(fs[j]->source() == source.inputs()[static_cast<std::size_t>(j)].view()) ||
        !(fs[j]->target() == target.inputs()[static_cast<std::size_t>(j)].view()))
      fail(ErrorCode::BlockMismatch, "component hom does not match the glued structures");
    if (!is_boolean_hom(*fs[j]).pass)
      fail(ErrorCode::BadInput, "component map is not a Boolean homomorphism");
  }

  const int n = source.carrier().size();
  std::vector<ElemId> map(static_cast<std::size_t>(n));
  map[static_cast<std::size_t>(source.carrier().bottom())] = target.carrier().bottom();
  map[static_cast<std::size_t>(source.carrier().top())] = target.carrier().top();
  for (ElemId x = 0; x < n; ++x) {
    const auto a = source.address(x);
    if (a.block >= 0) map[static_cast<std::size_t>(x)] = target.inject(a.block, (*fs[a.block])(a.mask));
  }
  return {source.carrier(), target.carrier(), std::move(map)};
}

Forgotten forget(const BlockedLattice& l) {
  if (l.blocks().size() != 2)
    fail(ErrorCode::BlockCount, "forget expects exactly two blocks, got " +
                                    std::to_string(l.blocks().size()));
  return {{l.view(0).algebra, l.view(1).algebra}, {l.view(0).embedding, l.view(1).embedding}};
}

MediateResult mediate(const GluedLattice& p, const LatticeHom& h1, const LatticeHom& h2,
                      const FiniteOrthoLattice& x) {
  if (p.inputs().size() != 2) fail(ErrorCode::BlockCount, "mediate expects a binary glued lattice");
  const LatticeHom* hs[2] = {&h1, &h2};
  for (int j = 0; j < 2; ++j) {
    if (!(hs[j]->source() == p.inputs()[static_cast<std::size_t>(j)].view()))
      fail(ErrorCode::BlockMismatch, "cocone leg does not start at the glued inputs");
    if (!(hs[j]->target() == x)) fail(ErrorCode::BlockMismatch, "cocone leg does not end at the codomain");
    if (!is_boolean_hom(*hs[j]).pass) fail(ErrorCode::BadInput, "cocone leg is not a Boolean homomorphism");
  }
  const ElemId b1_top = p.inputs()[0].top();
  const ElemId b2_top = p.inputs()[1].top();
  if (h1(0) != h2(0) || h1(b1_top) != h2(b2_top))
    fail(ErrorCode::CoconeMismatch, "cocone legs disagree on the shared bounds");

  const int n = p.carrier().size();
  std::vector<ElemId> map(static_cast<std::size_t>(n));
  map[static_cast<std::size_t>(p.carrier().bottom())] = h1(0);
  map[static_cast<std::size_t>(p.carrier().top())] = h1(b1_top);
  for (ElemId e = 0; e < n; ++e) {
    const auto a = p.address(e);
    if (a.block >= 0) map[static_cast<std::size_t>(e)] = (*hs[a.block])(a.mask);
  }

  if (auto violation = first_hom_violation(p.carrier(), x, map)) return *violation;

  // The candidate is forced pointwise as long as the blocks cover the
  // carrier; re-check that rather than assume it.
  std::vector<uint8_t> covered(static_cast<std::size_t>(n), 0);
  for (const auto& block : p.blocks())
    for (ElemId e : block) covered[static_cast<std::size_t>(e)] = 1;
  bool unique = std::all_of(covered.begin(), covered.end(), [](uint8_t c) { return c != 0; });
  return MediateSuccess{LatticeHom(p.carrier(), x, std::move(map)), unique};
}

UniversalReport universal_audit(const BooleanAlgebra& b1, const BooleanAlgebra& b2,
                                const std::vector<BlockedLattice>& corpus, int max_elements) {
  GluedLattice p = glue(b1, b2, max_elements);
  UniversalReport report;
  report.source = "B(" + std::to_string(b1.atoms()) + ")xB(" + std::to_string(b2.atoms()) + ")";
  report.summary = {{"bound-reflecting"}, {"all"}};

  for (std::size_t ci = 0; ci < corpus.size(); ++ci) {
    const BlockedLattice& l = corpus[ci];
    if (l.blocks().size() != 2) fail(ErrorCode::BlockCount, "audit codomains must have two blocks");
    report.codomains.push_back(describe_blocked(l));
    const auto homs1 = enumerate_boolean_homs(b1, l.view(0).algebra);
    const auto homs2 = enumerate_boolean_homs(b2, l.view(1).algebra);
    for (const auto& f1 : homs1)
      for (const auto& f2 : homs2) {
        CoconeRecord row;
        row.codomain = static_cast<int>(ci);
        row.f1 = f1.map();
        row.f2 = f2.map();
        row.bound_reflecting = f1.flags().bound_reflecting && f2.flags().bound_reflecting;
        MediateResult res = mediate(p, compose(l.view(0).embedding, f1),
                                    compose(l.view(1).embedding, f2), l.carrier());
        if (auto* ok = std::get_if<MediateSuccess>(&res)) {
          row.mediates = true;
          row.unique = ok->unique;
        } else {
          row.failure = std::get<CounterReport>(res);
        }
        for (int cls = 0; cls < 2; ++cls) {
          if (cls == 0 && !row.bound_reflecting) continue;
          auto& s = report.summary[static_cast<std::size_t>(cls)];
          ++s.total;
          if (row.mediates && row.unique)
            ++s.mediated;
          else
            ++s.failed;
        }
        report.rows.push_back(std::move(row));
      }
  }
  for (auto& s : report.summary) s.confirmed = s.total > 0 && s.failed == 0;
  return report;
}

std::optional<std::array<ElemId, 3>> blockwise_distributivity_witness(const GluedLattice& p) {
  const auto& carrier = p.carrier();
  const int m = static_cast<int>(p.inputs().size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      for (ElemId ma = 1; ma < p.inputs()[static_cast<std::size_t>(i)].top(); ++ma)
        for (ElemId mb = 1; mb < p.inputs()[static_cast<std::size_t>(j)].top(); ++mb) {
          ElemId a = p.inject(i, ma);
          ElemId b = p.inject(j, mb);
          ElemId c = carrier.ortho(b);
          if (carrier.meet(a, carrier.join(b, c)) == a && a != carrier.bottom() &&
              carrier.join(carrier.meet(a, b), carrier.meet(a, c)) == carrier.bottom())
            return std::array<ElemId, 3>{a, b, c};
        }
    }
  return std::nullopt;
}

std::vector<std::string> glued_labels(const GluedLattice& p) {
  std::vector<std::string> labels(static_cast<std::size_t>(p.carrier().size()));
  labels[static_cast<std::size_t>(p.carrier().bottom())] = "0";
  labels[static_cast<std::size_t>(p.carrier().top())] = "1";
  for (ElemId e = 0; e < p.carrier().size(); ++e) {
    const auto a = p.address(e);
    if (a.block < 0) continue;
    std::string bits;
    for (int i = 0; i < p.inputs()[static_cast<std::size_t>(a.block)].atoms(); ++i)
      bits += ((a.mask >> i) & 1) != 0 ? '1' : '0';
    labels[static_cast<std::size_t>(e)] = "B" + std::to_string(a.block + 1) + ":" + bits;
  }
  return labels;
}

}  // namespace omlat
