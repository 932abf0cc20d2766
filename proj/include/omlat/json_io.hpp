#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "omlat/adjunction.hpp"
#include "omlat/contextuality.hpp"
#include "omlat/glue.hpp"

namespace omlat {

using Json = nlohmann::ordered_json;

// Lattice document: { "n", "bottom", "top", "leq": [[bool]],
// "ortho": [int] (optional), "labels": [string] (optional) }.
struct ParsedLattice {
  FiniteLattice lattice;
  std::optional<std::vector<ElemId>> ortho;
  std::optional<std::vector<std::string>> labels;
};

Json lattice_to_json(const FiniteLattice& l, const std::vector<ElemId>* ortho = nullptr,
                     const std::vector<std::string>* labels = nullptr);
Json lattice_to_json(const FiniteOrthoLattice& l, const std::vector<std::string>* labels = nullptr);
ParsedLattice lattice_from_json(const Json& j);

// { "kind": "boolean", "atoms": k }
Json boolean_to_json(const BooleanAlgebra& b);
BooleanAlgebra boolean_from_json(const Json& j);

// { "source": lattice doc, "target": lattice doc, "map": [int] }
Json hom_to_json(const LatticeHom& h);
LatticeHom hom_from_json(const Json& j);

// Lattice doc plus { "blocks": [[int]], "provenance": [boolean docs] }.
// Parsing rebuilds the canonical glued lattice from the provenance and
// checks it matches the document.
Json glued_to_json(const GluedLattice& g);
GluedLattice glued_from_json(const Json& j);

Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);
Json model_to_json(const EmpiricalModel& m);
EmpiricalModel model_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);
Json counter_report_to_json(const CounterReport& c);
CounterReport counter_report_from_json(const Json& j);

Json universal_report_to_json(const UniversalReport& r);
UniversalReport universal_report_from_json(const Json& j);
Json adjunction_report_to_json(const AdjunctionReport& r);
AdjunctionReport adjunction_report_from_json(const Json& j);
Json dictionary_row_to_json(const DictionaryRow& r);
DictionaryRow dictionary_row_from_json(const Json& j);

// Law-check report produced by the check command.
struct LawReport {
  int n = 0;
  ElemId bottom = 0;
  ElemId top = 0;
  struct Entry {
    std::string law;
    std::string verdict;  // "pass" | "fail" | "skipped"
    std::optional<Witness> witness;
    std::optional<std::string> error;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
  friend bool operator==(const LawReport&, const LawReport&) = default;
};

Json law_report_to_json(const LawReport& r);
LawReport law_report_from_json(const Json& j);

}  // namespace omlat
