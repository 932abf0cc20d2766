#include "omlat/contextuality.hpp"

#include <algorithm>
#include <set>

namespace omlat {

Scenario Scenario::make(std::vector<std::string> measurements,
                        std::vector<std::vector<std::string>> outcomes,
                        std::vector<std::vector<int>> cover) {
  if (measurements.empty()) fail(ErrorCode::BadInput, "scenario needs at least one measurement");
  if (outcomes.size() != measurements.size())
    fail(ErrorCode::BadInput, "every measurement needs an outcome set");
  for (const auto& o : outcomes)
    if (o.empty()) fail(ErrorCode::BadInput, "outcome sets must be nonempty");
  {
    std::set<std::string> names(measurements.begin(), measurements.end());
    if (names.size() != measurements.size())
      fail(ErrorCode::BadInput, "measurement labels must be unique");
  }
  if (cover.empty()) fail(ErrorCode::BadInput, "cover needs at least one context");

  std::vector<uint8_t> seen(measurements.size(), 0);
  std::set<std::vector<int>> distinct;
  for (const auto& ctx : cover) {
    if (ctx.empty()) fail(ErrorCode::BadInput, "contexts must be nonempty");
    std::set<int> members;
    for (int mi : ctx) {
      if (mi < 0 || mi >= static_cast<int>(measurements.size()))
        fail(ErrorCode::BadInput, "context references an unknown measurement");
      if (!members.insert(mi).second)
        fail(ErrorCode::BadInput, "context lists a measurement twice");
      seen[static_cast<std::size_t>(mi)] = 1;
    }
    if (!distinct.insert(std::vector<int>(members.begin(), members.end())).second)
      fail(ErrorCode::BadInput, "cover lists the same context twice");
  }
  for (std::size_t mi = 0; mi < measurements.size(); ++mi)
    if (!seen[mi]) fail(ErrorCode::BadInput, "measurement '" + measurements[mi] + "' is in no context");

  return {std::move(measurements), std::move(outcomes), std::move(cover)};
}

EmpiricalModel EmpiricalModel::make(Scenario scenario, std::vector<std::vector<Assignment>> supports) {
  if (supports.size() != scenario.cover.size())
    fail(ErrorCode::BadInput, "every context needs a support");
  for (std::size_t ci = 0; ci < supports.size(); ++ci) {
    const auto& ctx = scenario.cover[ci];
    auto& support = supports[ci];
    if (support.empty()) fail(ErrorCode::BadInput, "supports must be nonempty");
    for (const auto& a : support) {
      if (a.size() != ctx.size())
        fail(ErrorCode::BadInput, "support assignment length does not match its context");
      for (std::size_t p = 0; p < a.size(); ++p) {
        int mi = ctx[p];
        if (a[p] < 0 || a[p] >= static_cast<int>(scenario.outcomes[static_cast<std::size_t>(mi)].size()))
          fail(ErrorCode::BadInput, "support assignment uses an unknown outcome");
      }
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
  }
  return {std::move(scenario), std::move(supports)};
}

namespace {

// Marginal of a context's support onto a sorted list of measurement ids.
std::set<Assignment> marginal(const EmpiricalModel& m, std::size_t ci, const std::vector<int>& shared) {
  const auto& ctx = m.scenario.cover[ci];
  std::vector<int> positions;
  for (int mi : shared)
    positions.push_back(static_cast<int>(std::find(ctx.begin(), ctx.end(), mi) - ctx.begin()));
  std::set<Assignment> out;
  for (const auto& a : m.supports[ci]) {
    Assignment restricted;
    for (int p : positions) restricted.push_back(a[static_cast<std::size_t>(p)]);
    out.insert(std::move(restricted));
  }
  return out;
}

}  // namespace

Verdict check_compatibility(const EmpiricalModel& m) {
  const std::size_t k = m.scenario.cover.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<int> shared;
      for (int mi : m.scenario.cover[i])
        if (std::find(m.scenario.cover[j].begin(), m.scenario.cover[j].end(), mi) !=
            m.scenario.cover[j].end())
          shared.push_back(mi);
      if (shared.empty()) continue;
      std::sort(shared.begin(), shared.end());
      if (marginal(m, i, shared) != marginal(m, j, shared))
        return {false, Witness{"compatibility", {static_cast<int>(i), static_cast<int>(j)}}};
    }
  return {};
}

std::vector<Assignment> global_sections(const EmpiricalModel& m) {
  if (!check_compatibility(m).pass)
    fail(ErrorCode::BadInput, "model is not compatible across overlapping contexts");

  const auto& sc = m.scenario;
  const int mcount = static_cast<int>(sc.measurements.size());
  Assignment current(static_cast<std::size_t>(mcount), -1);
  std::vector<Assignment> sections;

  // A partial assignment survives iff every context still has a support
  // element matching it.
  auto viable = [&]() {
    for (std::size_t ci = 0; ci < sc.cover.size(); ++ci) {
      bool any = false;
      for (const auto& a : m.supports[ci]) {
        bool matches = true;
        for (std::size_t p = 0; p < a.size(); ++p) {
          int assigned = current[static_cast<std::size_t>(sc.cover[ci][p])];
          if (assigned >= 0 && assigned != a[p]) {
            matches = false;
            break;
          }
        }
        if (matches) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  };

  // Assign measurements in the order they first appear in the cover so that
  // context constraints bite early; remaining ones (none, by the scenario
  // invariant) would follow in index order.
  std::vector<int> order;
  std::vector<uint8_t> queued(static_cast<std::size_t>(mcount), 0);
  for (const auto& ctx : sc.cover)
    for (int mi : ctx)
      if (!queued[static_cast<std::size_t>(mi)]) {
        queued[static_cast<std::size_t>(mi)] = 1;
        order.push_back(mi);
      }

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      sections.push_back(current);
      return;
    }
    const int mi = order[depth];
    const int noutcomes = static_cast<int>(sc.outcomes[static_cast<std::size_t>(mi)].size());
    for (int v = 0; v < noutcomes; ++v) {
      current[static_cast<std::size_t>(mi)] = v;
      if (viable()) self(self, depth + 1);
      current[static_cast<std::size_t>(mi)] = -1;
    }
  };
  search(search, 0);

  std::sort(sections.begin(), sections.end());
  return sections;
}

std::vector<BooleanAlgebra> scenario_to_contexts(const Scenario& s, int max_elements) {
  std::vector<BooleanAlgebra> out;
  for (const auto& ctx : s.cover) {
    long long joint = 1;
    for (int mi : ctx) {
      joint *= static_cast<long long>(s.outcomes[static_cast<std::size_t>(mi)].size());
      if (joint > 30) fail(ErrorCode::SizeLimit, "context event algebra exceeds the element cap");
    }
    if ((1LL << joint) > max_elements)
      fail(ErrorCode::SizeLimit, "context event algebra exceeds the element cap");
    out.push_back(powerset(static_cast<int>(joint), max_elements));
  }
  return out;
}

DictionaryRow dictionary_harness(const EmpiricalModel& m, const std::string& name, int max_elements) {
  DictionaryRow row;
  row.model = name;
  row.contexts = static_cast<int>(m.scenario.cover.size());

  const auto sections = global_sections(m);
  row.section_count = static_cast<int>(sections.size());
  row.has_global_section = !sections.empty();

  GluedLattice glued = glue_n(scenario_to_contexts(m.scenario, max_elements), max_elements);
  row.glued_elements = glued.carrier().size();
  row.glued_distributive = is_distributive(glued.carrier().lattice()).pass;

  row.agreement = row.has_global_section == row.glued_distributive;
  row.discrepancy = !row.agreement;
  return row;
}

std::vector<NamedModel> builtin_scenarios() {
  std::vector<NamedModel> out;
  const std::vector<std::string> binary = {"0", "1"};

  {
    Scenario s = Scenario::make({"m0", "m1"}, {binary, binary}, {{0, 1}});
    out.push_back({"deterministic-single", EmpiricalModel::make(s, {{{0, 1}}}), 1});
  }
  {
    // Possibilistic PR box: contexts {a_i, b_j} with a xor b = i and j.
    Scenario s = Scenario::make({"a0", "a1", "b0", "b1"}, {binary, binary, binary, binary},
                                {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto equal_pairs = std::vector<Assignment>{{0, 0}, {1, 1}};
    auto differ_pairs = std::vector<Assignment>{{0, 1}, {1, 0}};
    out.push_back({"pr-style",
                   EmpiricalModel::make(s, {equal_pairs, equal_pairs, equal_pairs, differ_pairs}), 0});
  }
  {
    // Anti-correlated triangle: x != y, y != z, z != x has no 2-valued model.
    Scenario s = Scenario::make({"x", "y", "z"}, {binary, binary, binary}, {{0, 1}, {1, 2}, {2, 0}});
    auto differ_pairs = std::vector<Assignment>{{0, 1}, {1, 0}};
    out.push_back({"odd-cycle", EmpiricalModel::make(s, {differ_pairs, differ_pairs, differ_pairs}), 0});
  }
  {
    Scenario s = Scenario::make({"x", "y", "z"}, {binary, binary, binary}, {{0, 1}, {1, 2}});
    auto all_pairs = std::vector<Assignment>{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    out.push_back({"full-support", EmpiricalModel::make(s, {all_pairs, all_pairs}), 8});
  }
  return out;
}

}  // namespace omlat
