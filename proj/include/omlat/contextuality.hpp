#pragma once

#include <string>
#include <vector>

#include "omlat/glue.hpp"

namespace omlat {

// Measurement scenario: labelled measurements with finite outcome sets and a
// cover of contexts (subsets of measurements that can be evaluated jointly).
struct Scenario {
  std::vector<std::string> measurements;
  std::vector<std::vector<std::string>> outcomes;  // per measurement
  std::vector<std::vector<int>> cover;             // contexts as measurement indices

  static Scenario make(std::vector<std::string> measurements,
                       std::vector<std::vector<std::string>> outcomes,
                       std::vector<std::vector<int>> cover);

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Joint outcome assignment: outcome index per position of a context's
// measurement list (local), or per measurement (global section).
using Assignment = std::vector<int>;

// Possibilistic empirical model: per-context sets of allowed joint outcomes.
// Construction checks structural validity only; compatibility across
// overlaps is a separate check so that incompatible models can be examined.
struct EmpiricalModel {
  Scenario scenario;
  std::vector<std::vector<Assignment>> supports;  // per context, sorted, duplicate-free

  static EmpiricalModel make(Scenario scenario, std::vector<std::vector<Assignment>> supports);

  friend bool operator==(const EmpiricalModel&, const EmpiricalModel&) = default;
};

// Possibilistic no-signalling: marginal supports of overlapping contexts
// agree on the shared measurements. Failure names the offending context pair.
Verdict check_compatibility(const EmpiricalModel& m);

// All global outcome assignments whose restriction to every context lies in
// that context's support. Backtracking over measurements with per-context
// pruning; output sorted lexicographically. Requires a compatible model.
std::vector<Assignment> global_sections(const EmpiricalModel& m);

// Classical event logic of each context: the powerset algebra over the
// context's joint outcomes. Overlaps contribute only the trivial events,
// matching the view that contexts share just impossible/certain.
std::vector<BooleanAlgebra> scenario_to_contexts(const Scenario& s,
                                                 int max_elements = kDefaultMaxElements);

// One dictionary row: the sheaf-side predicate (global section exists) next
// to the lattice-side predicate (glued event algebra distributive), plus
// whether the two readings of contextuality agree on this instance. The
// lattice side depends only on the contexts, not on the supports, so
// disagreement is possible and is recorded rather than suppressed.
struct DictionaryRow {
  std::string model;
  int contexts = 0;
  int section_count = 0;
  bool has_global_section = false;
  int glued_elements = 0;
  bool glued_distributive = false;
  bool agreement = false;
  bool discrepancy = false;
  friend bool operator==(const DictionaryRow&, const DictionaryRow&) = default;
};

DictionaryRow dictionary_harness(const EmpiricalModel& m, const std::string& name = "",
                                 int max_elements = kDefaultMaxElements);

struct NamedModel {
  std::string name;
  EmpiricalModel model;
  int expected_sections = 0;
};

// Fixed corpus: a deterministic single-context model, the possibilistic PR
// box, an anti-correlated odd cycle, and a full-support model.
std::vector<NamedModel> builtin_scenarios();

}  // namespace omlat
