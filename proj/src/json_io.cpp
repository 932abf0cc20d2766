#include "omlat/json_io.hpp"

#include <algorithm>

namespace omlat {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::BadInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::BadInput, std::string("field '") + key + "' has the wrong shape");
  }
}

}  // namespace

Json lattice_to_json(const FiniteLattice& l, const std::vector<ElemId>* ortho,
                     const std::vector<std::string>* labels) {
  Json j;
  j["n"] = l.size();
  j["bottom"] = l.bottom();
  j["top"] = l.top();
  Json rows = Json::array();
  for (ElemId x = 0; x < l.size(); ++x) {
    Json row = Json::array();
    for (ElemId y = 0; y < l.size(); ++y) row.push_back(l.leq(x, y));
    rows.push_back(std::move(row));
  }
  j["leq"] = std::move(rows);
  if (ortho != nullptr) j["ortho"] = *ortho;
  if (labels != nullptr) j["labels"] = *labels;
  return j;
}

Json lattice_to_json(const FiniteOrthoLattice& l, const std::vector<std::string>* labels) {
  return lattice_to_json(l.lattice(), &l.ortho_map(), labels);
}

ParsedLattice lattice_from_json(const Json& j) {
  const int n = get_field<int>(j, "n");
  const ElemId bottom = get_field<ElemId>(j, "bottom");
  const ElemId top = get_field<ElemId>(j, "top");
  const auto rows = get_field<std::vector<std::vector<bool>>>(j, "leq");
  if (static_cast<int>(rows.size()) != n) fail(ErrorCode::BadInput, "leq row count does not match n");
  std::vector<uint8_t> leq;
  leq.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::BadInput, "leq column count does not match n");
    for (bool b : row) leq.push_back(b ? 1 : 0);
  }
  ParsedLattice out{FiniteLattice::build(n, leq, bottom, top), std::nullopt, std::nullopt};
  if (j.contains("ortho")) out.ortho = get_field<std::vector<ElemId>>(j, "ortho");
  if (j.contains("labels")) {
    auto labels = get_field<std::vector<std::string>>(j, "labels");
    if (static_cast<int>(labels.size()) != n) fail(ErrorCode::BadInput, "label count does not match n");
    out.labels = std::move(labels);
  }
  return out;
}

Json boolean_to_json(const BooleanAlgebra& b) {
  Json j;
  j["kind"] = "boolean";
  j["atoms"] = b.atoms();
  return j;
}

BooleanAlgebra boolean_from_json(const Json& j) {
  if (get_field<std::string>(j, "kind") != "boolean")
    fail(ErrorCode::BadInput, "expected a boolean algebra document");
  return powerset(get_field<int>(j, "atoms"));
}

Json hom_to_json(const LatticeHom& h) {
  Json j;
  j["source"] = lattice_to_json(h.source());
  j["target"] = lattice_to_json(h.target());
  j["map"] = h.map();
  return j;
}

LatticeHom hom_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target"))
    fail(ErrorCode::BadInput, "hom document needs source and target");
  ParsedLattice src = lattice_from_json(j.at("source"));
  ParsedLattice tgt = lattice_from_json(j.at("target"));
  if (!src.ortho || !tgt.ortho)
    fail(ErrorCode::BadInput, "hom endpoints must carry an ortho map");
  return {FiniteOrthoLattice(std::move(src.lattice), std::move(*src.ortho)),
          FiniteOrthoLattice(std::move(tgt.lattice), std::move(*tgt.ortho)),
          get_field<std::vector<ElemId>>(j, "map")};
}

Json glued_to_json(const GluedLattice& g) {
  const auto labels = glued_labels(g);
  Json j = lattice_to_json(g.carrier(), &labels);
  j["blocks"] = g.blocks();
  Json provenance = Json::array();
  for (const auto& b : g.inputs()) provenance.push_back(boolean_to_json(b));
  j["provenance"] = std::move(provenance);
  return j;
}

GluedLattice glued_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("provenance"))
    fail(ErrorCode::BadInput, "glued document needs provenance");
  std::vector<BooleanAlgebra> inputs;
  for (const auto& b : j.at("provenance")) inputs.push_back(boolean_from_json(b));
  ParsedLattice doc = lattice_from_json(j);
  GluedLattice rebuilt = glue_n(inputs, std::max(kDefaultMaxElements, doc.lattice.size()));
  const auto blocks = get_field<std::vector<std::vector<ElemId>>>(j, "blocks");
  if (!(rebuilt.carrier().lattice() == doc.lattice) || !doc.ortho ||
      rebuilt.carrier().ortho_map() != *doc.ortho || rebuilt.blocks() != blocks)
    fail(ErrorCode::BadInput, "glued document is not the canonical gluing of its provenance");
  return rebuilt;
}

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["measurements"] = s.measurements;
  Json outcomes = Json::object();
  for (std::size_t mi = 0; mi < s.measurements.size(); ++mi) outcomes[s.measurements[mi]] = s.outcomes[mi];
  j["outcomes"] = std::move(outcomes);
  Json cover = Json::array();
  for (const auto& ctx : s.cover) {
    Json names = Json::array();
    for (int mi : ctx) names.push_back(s.measurements[static_cast<std::size_t>(mi)]);
    cover.push_back(std::move(names));
  }
  j["cover"] = std::move(cover);
  return j;
}

Scenario scenario_from_json(const Json& j) {
  auto measurements = get_field<std::vector<std::string>>(j, "measurements");
  if (!j.contains("outcomes") || !j.at("outcomes").is_object())
    fail(ErrorCode::BadInput, "missing field 'outcomes'");
  std::vector<std::vector<std::string>> outcomes;
  for (const auto& m : measurements) {
    if (!j.at("outcomes").contains(m))
      fail(ErrorCode::BadInput, "no outcome set for measurement '" + m + "'");
    try {
      outcomes.push_back(j.at("outcomes").at(m).get<std::vector<std::string>>());
    } catch (const nlohmann::json::exception&) {
      fail(ErrorCode::BadInput, "outcome set for '" + m + "' has the wrong shape");
    }
  }
  const auto cover_names = get_field<std::vector<std::vector<std::string>>>(j, "cover");
  std::vector<std::vector<int>> cover;
  for (const auto& ctx : cover_names) {
    std::vector<int> ids;
    for (const auto& name : ctx) {
      auto it = std::find(measurements.begin(), measurements.end(), name);
      if (it == measurements.end())
        fail(ErrorCode::BadInput, "cover references unknown measurement '" + name + "'");
      ids.push_back(static_cast<int>(it - measurements.begin()));
    }
    cover.push_back(std::move(ids));
  }
  return Scenario::make(std::move(measurements), std::move(outcomes), std::move(cover));
}

Json model_to_json(const EmpiricalModel& m) {
  Json j = scenario_to_json(m.scenario);
  Json supports = Json::object();
  for (std::size_t ci = 0; ci < m.supports.size(); ++ci)
    supports[std::to_string(ci)] = m.supports[ci];
  j["supports"] = std::move(supports);
  return j;
}

EmpiricalModel model_from_json(const Json& j) {
  Scenario s = scenario_from_json(j);
  if (!j.contains("supports") || !j.at("supports").is_object())
    fail(ErrorCode::BadInput, "missing field 'supports'");
  std::vector<std::vector<Assignment>> supports(s.cover.size());
  for (std::size_t ci = 0; ci < s.cover.size(); ++ci) {
    const std::string key = std::to_string(ci);
    if (!j.at("supports").contains(key))
      fail(ErrorCode::BadInput, "no support for context " + key);
    try {
      supports[ci] = j.at("supports").at(key).get<std::vector<Assignment>>();
    } catch (const nlohmann::json::exception&) {
      fail(ErrorCode::BadInput, "support for context " + key + " has the wrong shape");
    }
  }
  return EmpiricalModel::make(std::move(s), std::move(supports));
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["law"] = w.law;
  j["elems"] = w.elems;
  return j;
}

Witness witness_from_json(const Json& j) {
  return {get_field<std::string>(j, "law"), get_field<std::vector<ElemId>>(j, "elems")};
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["verdict"] = v.pass ? "pass" : "fail";
  j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.pass = get_field<std::string>(j, "verdict") == "pass";
  if (j.contains("witness") && !j.at("witness").is_null()) v.witness = witness_from_json(j.at("witness"));
  return v;
}

Json counter_report_to_json(const CounterReport& c) {
  Json j;
  j["operation"] = c.operation;
  j["at"] = c.at;
  j["expected"] = c.expected;
  j["actual"] = c.actual;
  return j;
}

CounterReport counter_report_from_json(const Json& j) {
  return {get_field<std::string>(j, "operation"), get_field<std::vector<ElemId>>(j, "at"),
          get_field<ElemId>(j, "expected"), get_field<ElemId>(j, "actual")};
}

Json universal_report_to_json(const UniversalReport& r) {
  Json j;
  j["source"] = r.source;
  j["codomains"] = r.codomains;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["codomain"] = row.codomain;
    jr["f1"] = row.f1;
    jr["f2"] = row.f2;
    jr["bound_reflecting"] = row.bound_reflecting;
    jr["mediates"] = row.mediates;
    jr["unique"] = row.unique;
    jr["failure"] = row.failure ? counter_report_to_json(*row.failure) : Json(nullptr);
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  Json summary = Json::array();
  for (const auto& s : r.summary) {
    Json js;
    js["class"] = s.cocone_class;
    js["total"] = s.total;
    js["mediated"] = s.mediated;
    js["failed"] = s.failed;
    js["confirmed"] = s.confirmed;
    summary.push_back(std::move(js));
  }
  j["summary"] = std::move(summary);
  return j;
}

UniversalReport universal_report_from_json(const Json& j) {
  UniversalReport r;
  r.source = get_field<std::string>(j, "source");
  r.codomains = get_field<std::vector<std::string>>(j, "codomains");
  if (!j.contains("rows") || !j.at("rows").is_array()) fail(ErrorCode::BadInput, "missing field 'rows'");
  for (const auto& jr : j.at("rows")) {
    CoconeRecord row;
    row.codomain = get_field<int>(jr, "codomain");
    row.f1 = get_field<std::vector<ElemId>>(jr, "f1");
    row.f2 = get_field<std::vector<ElemId>>(jr, "f2");
    row.bound_reflecting = get_field<bool>(jr, "bound_reflecting");
    row.mediates = get_field<bool>(jr, "mediates");
    row.unique = get_field<bool>(jr, "unique");
    if (jr.contains("failure") && !jr.at("failure").is_null())
      row.failure = counter_report_from_json(jr.at("failure"));
    r.rows.push_back(std::move(row));
  }
  if (!j.contains("summary") || !j.at("summary").is_array())
    fail(ErrorCode::BadInput, "missing field 'summary'");
  for (const auto& js : j.at("summary")) {
    ClassSummary s;
    s.cocone_class = get_field<std::string>(js, "class");
    s.total = get_field<int>(js, "total");
    s.mediated = get_field<int>(js, "mediated");
    s.failed = get_field<int>(js, "failed");
    s.confirmed = get_field<bool>(js, "confirmed");
    r.summary.push_back(std::move(s));
  }
  return r;
}

Json adjunction_report_to_json(const AdjunctionReport& r) {
  Json j;
  j["bound"] = r.bound;
  Json cells = Json::array();
  for (const auto& cell : r.cells) {
    Json jc;
    jc["source"] = cell.source;
    jc["codomain"] = cell.codomain;
    jc["class"] = cell.hom_class;
    jc["ctx_homs"] = cell.ctx_hom_count;
    jc["pairs"] = cell.pair_count;
    jc["bijection"] = cell.bijection;
    jc["naturality"] = cell.naturality ? Json(*cell.naturality) : Json(nullptr);
    Json cex = Json::array();
    for (const auto& c : cell.counterexamples) {
      Json je;
      je["f1"] = c.f1;
      je["f2"] = c.f2;
      je["failure"] = counter_report_to_json(c.failure);
      cex.push_back(std::move(je));
    }
    jc["counterexamples"] = std::move(cex);
    cells.push_back(std::move(jc));
  }
  j["cells"] = std::move(cells);
  auto triangles = [](const std::vector<TriangleRecord>& list) {
    Json out = Json::array();
    for (const auto& t : list) {
      Json jt;
      jt["object"] = t.object;
      jt["checked"] = t.checked;
      jt["holds"] = t.holds;
      out.push_back(std::move(jt));
    }
    return out;
  };
  j["unit_triangles"] = triangles(r.unit_triangles);
  j["counit_triangles"] = triangles(r.counit_triangles);
  return j;
}

AdjunctionReport adjunction_report_from_json(const Json& j) {
  AdjunctionReport r;
  r.bound = get_field<int>(j, "bound");
  if (!j.contains("cells") || !j.at("cells").is_array()) fail(ErrorCode::BadInput, "missing field 'cells'");
  for (const auto& jc : j.at("cells")) {
    AdjunctionCell cell;
    cell.source = get_field<std::string>(jc, "source");
    cell.codomain = get_field<std::string>(jc, "codomain");
    cell.hom_class = get_field<std::string>(jc, "class");
    cell.ctx_hom_count = get_field<int>(jc, "ctx_homs");
    cell.pair_count = get_field<int>(jc, "pairs");
    cell.bijection = get_field<bool>(jc, "bijection");
    if (jc.contains("naturality") && !jc.at("naturality").is_null())
      cell.naturality = jc.at("naturality").get<bool>();
    if (jc.contains("counterexamples"))
      for (const auto& je : jc.at("counterexamples"))
        cell.counterexamples.push_back({get_field<std::vector<ElemId>>(je, "f1"),
                                        get_field<std::vector<ElemId>>(je, "f2"),
                                        counter_report_from_json(je.at("failure"))});
    r.cells.push_back(std::move(cell));
  }
  auto triangles = [](const Json& list) {
    std::vector<TriangleRecord> out;
    for (const auto& jt : list)
      out.push_back({get_field<std::string>(jt, "object"), get_field<bool>(jt, "checked"),
                     get_field<bool>(jt, "holds")});
    return out;
  };
  r.unit_triangles = triangles(j.at("unit_triangles"));
  r.counit_triangles = triangles(j.at("counit_triangles"));
  return r;
}

Json dictionary_row_to_json(const DictionaryRow& r) {
  Json j;
  j["model"] = r.model;
  j["contexts"] = r.contexts;
  j["sections"] = r.section_count;
  j["has_global_section"] = r.has_global_section;
  j["glued_elements"] = r.glued_elements;
  j["glued_distributive"] = r.glued_distributive;
  j["agreement"] = r.agreement;
  j["discrepancy"] = r.discrepancy;
  return j;
}

DictionaryRow dictionary_row_from_json(const Json& j) {
  DictionaryRow r;
  r.model = get_field<std::string>(j, "model");
  r.contexts = get_field<int>(j, "contexts");
  r.section_count = get_field<int>(j, "sections");
  r.has_global_section = get_field<bool>(j, "has_global_section");
  r.glued_elements = get_field<int>(j, "glued_elements");
  r.glued_distributive = get_field<bool>(j, "glued_distributive");
  r.agreement = get_field<bool>(j, "agreement");
  r.discrepancy = get_field<bool>(j, "discrepancy");
  return r;
}

Json law_report_to_json(const LawReport& r) {
  Json j;
  j["n"] = r.n;
  j["bottom"] = r.bottom;
  j["top"] = r.top;
  Json laws = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["law"] = e.law;
    je["verdict"] = e.verdict;
    je["witness"] = e.witness ? witness_to_json(*e.witness) : Json(nullptr);
    je["error"] = e.error ? Json(*e.error) : Json(nullptr);
    laws.push_back(std::move(je));
  }
  j["laws"] = std::move(laws);
  return j;
}

LawReport law_report_from_json(const Json& j) {
  LawReport r;
  r.n = get_field<int>(j, "n");
  r.bottom = get_field<ElemId>(j, "bottom");
  r.top = get_field<ElemId>(j, "top");
  if (!j.contains("laws") || !j.at("laws").is_array()) fail(ErrorCode::BadInput, "missing field 'laws'");
  for (const auto& je : j.at("laws")) {
    LawReport::Entry e;
    e.law = get_field<std::string>(je, "law");
    e.verdict = get_field<std::string>(je, "verdict");
    if (je.contains("witness") && !je.at("witness").is_null()) e.witness = witness_from_json(je.at("witness"));
    if (je.contains("error") && !je.at("error").is_null()) e.error = je.at("error").get<std::string>();
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace omlat
