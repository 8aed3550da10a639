#include "conlab/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "conlab/generators.hpp"
#include "conlab/minimality.hpp"
#include "conlab/representations.hpp"

namespace conlab {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ojson parse_json(const std::string& text) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const ojson& member(const ojson& node, const std::string& key, const std::string& path) {
  if (!node.is_object() || !node.contains(key))
    throw ParseError(path + ": missing key \"" + key + "\"");
  return node.at(key);
}

int int_member(const ojson& node, const std::string& key, const std::string& path) {
  const ojson& value = member(node, key, path);
  if (!value.is_number_integer()) throw ParseError(path + "." + key + ": expected an integer");
  return value.get<int>();
}

ojson subset_labels(Mask m, const Carrier& carrier) {
  ojson out = ojson::array();
  for (int i = 0; i < carrier.size(); ++i)
    if (contains(m, i)) out.push_back(carrier.label(i));
  return out;
}

Mask mask_from_labels(const ojson& node, const Carrier& carrier, const std::string& path) {
  if (!node.is_array()) throw ParseError(path + ": expected an array of labels");
  Mask m = 0;
  for (const auto& item : node) {
    if (!item.is_string()) throw ParseError(path + ": labels must be strings");
    const auto idx = carrier.index_of(item.get<std::string>());
    if (!idx) throw ParseError(path + ": unknown label \"" + item.get<std::string>() + "\"");
    if (contains(m, *idx)) throw ParseError(path + ": repeated label \"" + item.get<std::string>() + "\"");
    m |= singleton(*idx);
  }
  return m;
}

Carrier parse_carrier(const ojson& doc, const std::string& path) {
  const ojson& node = member(doc, "carrier", path);
  if (!node.is_array()) throw ParseError(path + ".carrier: expected an array");
  std::vector<std::string> labels;
  for (const auto& item : node) {
    if (!item.is_string()) throw ParseError(path + ".carrier: labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  try {
    return Carrier(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ".carrier: " + e.what());
  }
}

}  // namespace

ParsedStructure parse_structure(const std::string& text) {
  ojson doc = parse_json(text);
  if (doc.is_object() && doc.contains("structure")) doc = doc.at("structure");
  const std::string path = "structure";
  Carrier carrier = parse_carrier(doc, path);

  const ojson& entries = member(doc, "operator", path);
  if (!entries.is_array()) throw ParseError(path + ".operator: expected an array of entries");
  std::vector<Mask> table(carrier.subset_count(), 0);
  std::vector<bool> defined(carrier.subset_count(), false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = path + ".operator[" + std::to_string(i) + "]";
    const Mask input = mask_from_labels(member(entries[i], "input", at), carrier, at + ".input");
    if (defined[input]) throw ParseError(at + ": duplicate entry for this subset");
    defined[input] = true;
    table[input] = mask_from_labels(member(entries[i], "output", at), carrier, at + ".output");
  }
  for (Mask g = 0; g < carrier.subset_count(); ++g)
    if (!defined[g])
      throw ParseError(path + ".operator: incomplete table, no entry for subset " +
                       subset_labels(g, carrier).dump());

  ParsedStructure parsed{ConsequenceOperator(carrier, std::move(table)), std::nullopt, std::nullopt};
  if (doc.contains("family")) {
    const ojson& fam = doc.at("family");
    if (!fam.is_array()) throw ParseError(path + ".family: expected an array of subsets");
    std::vector<Mask> members;
    for (std::size_t i = 0; i < fam.size(); ++i)
      members.push_back(mask_from_labels(fam[i], carrier, path + ".family[" + std::to_string(i) + "]"));
    parsed.family = FamilyK::of(std::move(members));
  }
  if (doc.contains("kappa")) {
    if (!doc.at("kappa").is_number_integer() || doc.at("kappa").get<int>() < 0)
      throw ParseError(path + ".kappa: expected a nonnegative integer");
    parsed.kappa = doc.at("kappa").get<int>();
  }
  return parsed;
}

namespace {

ojson structure_json(const ConsequenceOperator& op, const std::optional<FamilyK>& family,
                     std::optional<int> kappa) {
  const Carrier& carrier = op.carrier();
  ojson doc;
  doc["carrier"] = carrier.labels();
  ojson entries = ojson::array();
  for (Mask g = 0; g < carrier.subset_count(); ++g) {
    ojson entry;
    entry["input"] = subset_labels(g, carrier);
    entry["output"] = subset_labels(op.apply(g), carrier);
    entries.push_back(std::move(entry));
  }
  doc["operator"] = std::move(entries);
  if (family) {
    ojson fam = ojson::array();
    for (Mask m : family->members) fam.push_back(subset_labels(m, carrier));
    doc["family"] = std::move(fam);
  }
  if (kappa) doc["kappa"] = *kappa;
  return doc;
}

ojson functional_json(const FunctionalSemantics& sem, const Carrier& carrier) {
  ojson doc;
  doc["type"] = "functional";
  doc["values"] = sem.value_count;
  doc["carrier"] = carrier.labels();
  ojson models = ojson::array();
  for (const auto& valuation : sem.models) models.push_back(valuation);
  doc["models"] = std::move(models);
  ojson designated = ojson::array();
  for (Mask d : sem.designated) {
    ojson values = ojson::array();
    for (int v = 0; v < sem.value_count; ++v)
      if (contains(d, v)) values.push_back(v);
    designated.push_back(std::move(values));
  }
  doc["designated"] = std::move(designated);
  ojson pairs = ojson::array();
  for (auto [i, j] : sem.pairs) pairs.push_back(ojson::array({i, j}));
  doc["pairs"] = std::move(pairs);
  return doc;
}

ojson generic_json(const GenericSemantics& sem, const Carrier& carrier) {
  ojson doc;
  doc["type"] = "generic";
  doc["carrier"] = carrier.labels();
  doc["model_count"] = sem.model_count;
  ojson relations = ojson::array();
  for (int i = 0; i < sem.index_count(); ++i) {
    ojson per_model = ojson::array();
    for (int m = 0; m < sem.model_count; ++m) {
      ojson satisfied = ojson::array();
      for (Mask g = 0; g < carrier.subset_count(); ++g)
        if (sem.relations[i].at(m, g)) satisfied.push_back(subset_labels(g, carrier));
      per_model.push_back(std::move(satisfied));
    }
    relations.push_back(std::move(per_model));
  }
  doc["relations"] = std::move(relations);
  ojson pairs = ojson::array();
  for (auto [i, j] : sem.pairs) pairs.push_back(ojson::array({i, j}));
  doc["pairs"] = std::move(pairs);
  return doc;
}

ojson s_json(const SSemantics& sem, const Carrier& carrier) {
  ojson doc;
  doc["type"] = "s";
  doc["carrier"] = carrier.labels();
  const bool normal = sem.is_normal();
  ojson points = ojson::array();
  for (int v = 0; v < sem.point_count(); ++v) {
    ojson point;
    if (sem.points[v]) point["bivaluation"] = subset_labels(*sem.points[v], carrier);
    if (!normal) {
      ojson satisfied = ojson::array();
      for (Mask g = 0; g < carrier.subset_count(); ++g)
        if (sem.sat.at(v, g)) satisfied.push_back(subset_labels(g, carrier));
      point["satisfies"] = std::move(satisfied);
    }
    points.push_back(std::move(point));
  }
  doc["points"] = std::move(points);
  ojson relation = ojson::array();
  for (auto [v, w] : sem.relation) relation.push_back(ojson::array({v, w}));
  doc["relation"] = std::move(relation);
  return doc;
}

FunctionalSemantics parse_functional(const ojson& doc, const Carrier& carrier) {
  const std::string path = "semantics";
  FunctionalSemantics sem;
  sem.value_count = int_member(doc, "values", path);
  const ojson& models = member(doc, "models", path);
  for (const auto& row : models) {
    std::vector<int> valuation;
    for (const auto& v : row) valuation.push_back(v.get<int>());
    if (static_cast<int>(valuation.size()) != carrier.size())
      throw ParseError(path + ".models: each valuation needs one value per carrier element");
    sem.models.push_back(std::move(valuation));
  }
  for (const auto& d : member(doc, "designated", path)) {
    Mask m = 0;
    for (const auto& v : d) {
      const int value = v.get<int>();
      if (value < 0 || value >= sem.value_count) throw ParseError(path + ".designated: value out of range");
      m |= singleton(value);
    }
    sem.designated.push_back(m);
  }
  for (const auto& p : member(doc, "pairs", path)) sem.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  try {
    sem.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
  return sem;
}

GenericSemantics parse_generic(const ojson& doc, const Carrier& carrier) {
  const std::string path = "semantics";
  GenericSemantics sem;
  sem.n = carrier.size();
  sem.model_count = int_member(doc, "model_count", path);
  const ojson& relations = member(doc, "relations", path);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    SatTable table(sem.model_count, sem.n);
    const ojson& per_model = relations[i];
    if (static_cast<int>(per_model.size()) != sem.model_count)
      throw ParseError(path + ".relations: one satisfied-set list per model required");
    for (int m = 0; m < sem.model_count; ++m)
      for (const auto& subset : per_model[m])
        table.set(m, mask_from_labels(subset, carrier, path + ".relations"), true);
    sem.relations.push_back(std::move(table));
  }
  for (const auto& p : member(doc, "pairs", path)) sem.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  try {
    sem.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
  return sem;
}

SSemantics parse_s(const ojson& doc, const Carrier& carrier) {
  const std::string path = "semantics";
  SSemantics sem;
  sem.n = carrier.size();
  const ojson& points = member(doc, "points", path);
  sem.points.resize(points.size());
  sem.sat = SatTable(static_cast<int>(points.size()), sem.n);
  for (std::size_t v = 0; v < points.size(); ++v) {
    const ojson& point = points[v];
    const std::string at = path + ".points[" + std::to_string(v) + "]";
    if (point.contains("bivaluation"))
      sem.points[v] = mask_from_labels(point.at("bivaluation"), carrier, at + ".bivaluation");
    if (point.contains("satisfies")) {
      for (const auto& subset : point.at("satisfies"))
        sem.sat.set(static_cast<int>(v), mask_from_labels(subset, carrier, at + ".satisfies"), true);
    } else if (sem.points[v]) {
      for (Mask g = 0; g < carrier.subset_count(); ++g)
        if (subset_of(g, *sem.points[v])) sem.sat.set(static_cast<int>(v), g, true);
    } else {
      throw ParseError(at + ": needs a bivaluation or an explicit satisfies list");
    }
  }
  for (const auto& p : member(doc, "relation", path))
    sem.relation.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  try {
    sem.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
  return sem;
}

ojson classification_json(const ClassificationReport& r) {
  ojson out;
  out["reflexive"] = r.reflexive;
  out["monotonic"] = r.monotonic;
  out["transitive"] = r.transitive;
  out["tarski"] = r.tarski;
  out["idempotent"] = r.idempotent;
  out["quasi_closed"] = r.quasi_closed;
  out["q_type"] = r.q_type;
  out["p_type"] = r.p_type;
  out["cm_type"] = r.cm_type;
  out["wct_type"] = r.wct_type;
  out["anti_reflexive_global"] = r.anti_reflexive_global;
  return out;
}

ojson discrepancies_json(const std::vector<Discrepancy>& list, const Carrier& carrier) {
  ojson out = ojson::array();
  for (const Discrepancy& d : list) {
    ojson item;
    item["premises"] = subset_labels(d.premises, carrier);
    item["element"] = carrier.label(d.element);
    item["direction"] =
        d.direction == DiscrepancyDirection::missing_from_induced ? "missing" : "extra";
    out.push_back(std::move(item));
  }
  return out;
}

std::string dump_report(const ojson& report) { return report.dump(2) + "\n"; }

// Resolves the kappa used for family-relative checks: an explicit value wins,
// otherwise the smallest member size (the only candidate an internally-kappa
// family can have).
std::optional<int> effective_kappa(const ParsedStructure& parsed) {
  if (parsed.kappa) return parsed.kappa;
  if (parsed.family && !parsed.family->members.empty()) {
    int smallest = popcount(parsed.family->members.front());
    for (Mask m : parsed.family->members) smallest = std::min(smallest, popcount(m));
    return smallest;
  }
  return std::nullopt;
}

ojson family_checks_json(const ParsedStructure& parsed) {
  ojson out;
  const std::optional<int> kappa = effective_kappa(parsed);
  if (parsed.family && kappa) {
    out["kappa"] = *kappa;
    out["internally_kappa"] = check_internally_kappa(*parsed.family, *kappa);
    const bool s_type = check_s_type(parsed.op, *parsed.family, *kappa);
    out["s_type"] = s_type;
    if (s_type) {
      const RPropReport rp = r_prop_checks(parsed.op, *parsed.family, *kappa);
      ojson props;
      props["complement_image"] = rp.complement_image;
      props["complement_disjoint"] = rp.complement_disjoint;
      props["never_maps_onto"] = rp.never_maps_onto;
      out["complement_properties"] = std::move(props);
    }
  }
  if (kappa) out["r_type"] = check_r_type(parsed.op, *kappa);
  return out;
}

int command_classify(const ParsedStructure& parsed, std::ostream& out) {
  ojson report;
  report["command"] = "classify";
  report["carrier"] = parsed.op.carrier().labels();
  report["classification"] = classification_json(classify(parsed.op));
  const ojson checks = family_checks_json(parsed);
  if (!checks.empty()) report["family_checks"] = checks;
  report["findings"] = ojson::array();
  out << dump_report(report);
  return 0;
}

int command_charq(const ParsedStructure& parsed, std::ostream& out) {
  const CharQReport r = charq_equivalents(parsed.op);
  ojson report;
  report["command"] = "charq";
  report["carrier"] = parsed.op.carrier().labels();
  ojson conditions;
  conditions["q_operator"] = r.q_operator;
  conditions["iterate_fixpoint"] = r.iterate_fixpoint;
  conditions["all_downward_closed"] = r.all_downward_closed;
  conditions["closed_extension"] = r.closed_extension;
  conditions["absorbing_premises"] = r.absorbing_premises;
  report["conditions"] = std::move(conditions);
  report["all_equal"] = r.all_equal();
  report["findings"] = r.all_equal() ? ojson::array()
                                     : ojson::array({"equivalent characterisations disagree"});
  out << dump_report(report);
  return 0;
}

int command_construct(const ParsedStructure& parsed, const std::string& target, std::ostream& out) {
  const ConsequenceOperator& op = parsed.op;
  const Carrier& carrier = op.carrier();
  ojson report;
  report["command"] = "construct";
  report["target"] = target;
  report["carrier"] = carrier.labels();
  ojson construction;
  ojson findings = ojson::array();

  auto family_inputs = [&]() -> std::pair<FamilyK, int> {
    const std::optional<int> kappa = effective_kappa(parsed);
    if (!parsed.family || !kappa)
      throw PreconditionError(target + " needs a premise-set family and kappa in the input document");
    return {*parsed.family, *kappa};
  };

  if (target == "canonical" || target == "tarski2") {
    GenericSemantics sem =
        target == "canonical" ? canonical_semantics(op) : tarski_bivalent(op);
    const AdequacyVerdict verdict = verify_adequacy(op, induced_table(sem));
    construction["adequate"] = verdict.adequate;
    construction["discrepancies"] = discrepancies_json(verdict.discrepancies, carrier);
    ojson summary;
    summary["models"] = sem.model_count;
    summary["relations"] = sem.index_count();
    construction["summary"] = std::move(summary);
    construction["semantics"] = generic_json(sem, carrier);
  } else if (target == "mon4" || target == "q3" || target == "p3" || target == "s3") {
    FunctionalSemantics sem;
    AdequacyVerdict verdict;
    if (target == "mon4") {
      sem = build_mon4(op);
      verdict = verify_adequacy(op, sem);
    } else if (target == "q3") {
      sem = build_q3(op);
      verdict = verify_adequacy(op, sem);
    } else if (target == "p3") {
      sem = build_p3(op);
      verdict = verify_adequacy(op, sem);
    } else {
      auto [family, kappa] = family_inputs();
      S3Result result = build_s3(op, family, kappa);
      sem = std::move(result.semantics);
      verdict = std::move(result.verdict);
      if (!verdict.adequate)
        findings.push_back(
            "three-valued construction adequate on the family and from below only; "
            "full adequacy fails on the listed premise sets");
    }
    construction["adequate"] = verdict.adequate;
    construction["discrepancies"] = discrepancies_json(verdict.discrepancies, carrier);
    ojson summary;
    summary["models"] = static_cast<int>(sem.models.size());
    summary["values"] = sem.value_count;
    construction["summary"] = std::move(summary);
    construction["semantics"] = functional_json(sem, carrier);
  } else if (target == "smon" || target == "sq" || target == "sp" || target == "ss" ||
             target == "cm" || target == "wct") {
    SSemantics sem;
    AdequacyVerdict verdict;
    bool type2 = false;
    if (target == "smon") {
      sem = build_s_mon(op);
    } else if (target == "sq") {
      sem = build_s_q(op);
    } else if (target == "sp") {
      sem = build_s_p(op);
    } else if (target == "ss") {
      auto [family, kappa] = family_inputs();
      SSBuildResult result = build_s_s(op, family, kappa);
      sem = std::move(result.semantics);
      verdict = std::move(result.verdict);
      if (!verdict.adequate)
        findings.push_back("bivalent construction not fully adequate on the listed premise sets");
    } else {
      type2 = true;
      sem = target == "cm" ? build_s_cm(op) : build_s_wct(op);
      const ClassificationReport flags = classify(op);
      if (target == "cm" && !flags.cm_type)
        findings.push_back("type-II evaluation reproduces the operator although cautious monotonicity fails");
      if (target == "wct" && !flags.wct_type)
        findings.push_back(
            "type-II evaluation reproduces the operator although weak cumulative transitivity fails");
    }
    if (target != "ss") {
      const ConsequenceOperator induced =
          type2 ? type2_operator(sem, op) : type1_operator(sem, carrier);
      verdict = verify_adequacy(op, induced.table());
    }
    construction["adequate"] = verdict.adequate;
    construction["entailment"] = type2 ? "type-II" : "type-I";
    construction["discrepancies"] = discrepancies_json(verdict.discrepancies, carrier);
    if (type2 && sem.relation.size() <= 12) {
      const ConsequenceOperator literal = type2_operator_literal(sem, op);
      const ConsequenceOperator reduced = type2_operator(sem, op);
      construction["literal_agrees"] = operators_equal(literal, reduced);
    }
    ojson summary;
    summary["points"] = sem.point_count();
    summary["relation_pairs"] = static_cast<int>(sem.relation.size());
    construction["summary"] = std::move(summary);
    construction["semantics"] = s_json(sem, carrier);
  } else {
    throw ParseError("unknown construction target: " + target);
  }

  report["construction"] = std::move(construction);
  report["findings"] = std::move(findings);
  out << dump_report(report);
  return 0;
}

int command_verify(const ParsedStructure& parsed, const std::string& semantics_text,
                   std::ostream& out) {
  const Carrier& carrier = parsed.op.carrier();
  ojson doc = parse_json(semantics_text);
  const std::string type = member(doc, "type", "semantics").get<std::string>();
  AdequacyVerdict verdict;
  if (type == "functional") {
    verdict = verify_adequacy(parsed.op, parse_functional(doc, carrier));
  } else if (type == "generic") {
    verdict = verify_adequacy(parsed.op, induced_table(parse_generic(doc, carrier)));
  } else if (type == "s") {
    verdict = verify_adequacy(parsed.op, type1_table(parse_s(doc, carrier)));
  } else {
    throw ParseError("unknown semantics type: " + type);
  }
  ojson report;
  report["command"] = "verify";
  report["carrier"] = carrier.labels();
  report["semantics_type"] = type;
  report["adequate"] = verdict.adequate;
  report["discrepancies"] = discrepancies_json(verdict.discrepancies, carrier);
  report["findings"] = ojson::array();
  out << dump_report(report);
  return 0;
}

int command_minimality(const ParsedStructure& parsed, int max_values, int threads,
                       std::ostream& out) {
  SearchLimits limits;
  limits.threads = threads;
  const MinimalityResult result = inferential_valuedness(parsed.op, max_values, limits);
  ojson report;
  report["command"] = "minimality";
  report["carrier"] = parsed.op.carrier().labels();
  report["max_values"] = max_values;
  report["min_values"] = result.min_values ? ojson(*result.min_values) : ojson(nullptr);
  ojson per_mu;
  for (const auto& [mu, achievable] : result.per_mu) per_mu[std::to_string(mu)] = achievable;
  report["per_values"] = std::move(per_mu);
  report["witness"] =
      result.witness ? functional_json(*result.witness, parsed.op.carrier()) : ojson(nullptr);
  report["findings"] = ojson::array();
  out << dump_report(report);
  return 0;
}

int command_generate(const std::string& family, int size, std::uint64_t seed, int kappa, int pivot,
                     std::ostream& out) {
  ojson report;
  report["command"] = "generate";
  report["family"] = family;
  report["size"] = size;
  report["seed"] = seed;
  GeneratedStructure generated = [&]() -> GeneratedStructure {
    if (family == "random_monotone") return {gen_random_monotone(size, seed), std::nullopt, std::nullopt};
    if (family == "random_q") return {gen_random_typed(RandomKind::q, size, seed), std::nullopt, std::nullopt};
    if (family == "random_p") return {gen_random_typed(RandomKind::p, size, seed), std::nullopt, std::nullopt};
    if (family == "random_tarski") return {gen_random_tarski(size, seed), std::nullopt, std::nullopt};
    GeneratorSpec spec;
    spec.family = family;
    spec.size = size;
    spec.kappa = kappa;
    spec.pivot = pivot;
    spec.seed = seed;
    return gen_named(spec);
  }();
  report["structure"] = structure_json(generated.op, generated.family, generated.kappa);
  report["findings"] = ojson::array();
  out << dump_report(report);
  return 0;
}

OrderedFamily parse_hierarchy(const ojson& doc, int* kappa_out, Carrier* base_out) {
  const std::string path = "hierarchy";
  OrderedFamily family;
  *kappa_out = int_member(doc, "kappa", path);
  const ojson& levels = member(doc, "levels", path);
  if (!levels.is_array() || levels.empty()) throw ParseError(path + ".levels: expected a nonempty array");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string at = path + ".levels[" + std::to_string(i) + "]";
    const ojson& node = levels[i];
    HierarchyLevel level;
    Carrier carrier = parse_carrier(node, at);
    if (i == 0) *base_out = carrier;
    level.carrier_size = carrier.size();
    level.value_count = int_member(node, "values", at);
    const ojson& rows = member(node, "valuations", at);
    level.model_count = static_cast<int>(rows.size());
    for (const auto& row : rows) {
      std::vector<int> cells;
      for (const auto& v : row) cells.push_back(v.get<int>());
      level.values.push_back(std::move(cells));
    }
    family.levels.push_back(std::move(level));
  }
  if (doc.contains("injections"))
    for (const auto& node : doc.at("injections")) {
      const int lower = int_member(node, "lower", path + ".injections");
      const int upper = int_member(node, "upper", path + ".injections");
      std::vector<int> map;
      for (const auto& v : member(node, "map", path + ".injections")) map.push_back(v.get<int>());
      family.injections[{lower, upper}] = std::move(map);
    }
  for (const auto& node : member(doc, "pairs", path)) {
    if (!node.is_array() || node.size() != 2) throw ParseError(path + ".pairs: expected [[level,value],[level,value]]");
    LevelValue from{node.at(0).at(0).get<int>(), node.at(0).at(1).get<int>()};
    LevelValue to{node.at(1).at(0).get<int>(), node.at(1).at(1).get<int>()};
    family.pairs.emplace_back(from, to);
  }
  return family;
}

int command_hierarchy_eval(const std::string& text, std::ostream& out) {
  ojson doc = parse_json(text);
  int kappa = 0;
  Carrier base = Carrier::make(0);
  OrderedFamily family = parse_hierarchy(doc, &kappa, &base);
  std::string why;
  if (!validate_family(family, kappa, &why)) throw PreconditionError("invalid family: " + why);
  const EntailmentRelation relation = induced_entailment_order(family, kappa);
  const ConsequenceOperator op = operator_from_relation(relation, base);
  ojson report;
  report["command"] = "hierarchy-eval";
  report["kappa"] = kappa;
  report["carrier"] = base.labels();
  ojson entries = ojson::array();
  for (Mask g = 0; g < base.subset_count(); ++g) {
    ojson entry;
    entry["input"] = subset_labels(g, base);
    entry["output"] = subset_labels(op.apply(g), base);
    entries.push_back(std::move(entry));
  }
  report["operator"] = std::move(entries);
  report["findings"] = ojson::array();
  out << dump_report(report);
  return 0;
}

}  // namespace

std::string emit_structure(const ConsequenceOperator& op, const std::optional<FamilyK>& family,
                           std::optional<int> kappa) {
  return dump_report(structure_json(op, family, kappa));
}

std::string emit_functional(const FunctionalSemantics& sem, const Carrier& carrier) {
  return dump_report(functional_json(sem, carrier));
}

std::string emit_generic(const GenericSemantics& sem, const Carrier& carrier) {
  return dump_report(generic_json(sem, carrier));
}

std::string emit_s(const SSemantics& sem, const Carrier& carrier) {
  return dump_report(s_json(sem, carrier));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"classification, semantics constructions, and minimal-valuedness search "
               "for consequence operators over finite carriers"};
  app.require_subcommand(1);

  std::string input;
  std::string semantics_file;
  std::string target;
  std::string family;
  int max_values = 4;
  int size = 0;
  int kappa = -1;
  int pivot = 0;
  int threads = 1;
  std::uint64_t seed = 0;

  app.add_option("--threads", threads, "worker threads for the valuation sweep")->check(CLI::PositiveNumber);

  CLI::App* classify_cmd = app.add_subcommand("classify", "structural property flags");
  classify_cmd->add_option("--input", input, "structure document")->required();
  classify_cmd->add_option("--kappa", kappa, "override the document's kappa");

  CLI::App* charq_cmd = app.add_subcommand("charq", "five equivalent q-type descriptions");
  charq_cmd->add_option("--input", input)->required();

  CLI::App* construct_cmd = app.add_subcommand("construct", "build and verify a semantics");
  construct_cmd->add_option("--input", input)->required();
  construct_cmd->add_option("--kappa", kappa, "override the document's kappa");
  construct_cmd->add_option("--target", target)
      ->required()
      ->check(CLI::IsMember({"canonical", "tarski2", "mon4", "q3", "p3", "s3", "smon", "sq", "sp",
                             "ss", "cm", "wct"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a serialized semantics against an operator");
  verify_cmd->add_option("--input", input)->required();
  verify_cmd->add_option("--semantics", semantics_file)->required();

  CLI::App* minimality_cmd = app.add_subcommand("minimality", "least adequate value-set size");
  minimality_cmd->add_option("--input", input)->required();
  minimality_cmd->add_option("--max-values", max_values)->check(CLI::Range(2, 8));

  CLI::App* generate_cmd = app.add_subcommand("generate", "mint a named or random operator");
  generate_cmd->add_option("--family", family)->required();
  generate_cmd->add_option("--size", size)->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--seed", seed);
  generate_cmd->add_option("--kappa", kappa);
  generate_cmd->add_option("--pivot", pivot);

  CLI::App* hierarchy_cmd = app.add_subcommand("hierarchy", "layered entailment evaluation");
  CLI::App* hierarchy_eval = hierarchy_cmd->add_subcommand("eval", "evaluate the induced entailment");
  hierarchy_eval->add_option("--input", input)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    auto load_structure = [&]() {
      ParsedStructure parsed = parse_structure(read_file(input));
      if (kappa >= 0) parsed.kappa = kappa;
      return parsed;
    };
    if (classify_cmd->parsed()) return command_classify(load_structure(), out);
    if (charq_cmd->parsed()) return command_charq(parse_structure(read_file(input)), out);
    if (construct_cmd->parsed()) return command_construct(load_structure(), target, out);
    if (verify_cmd->parsed())
      return command_verify(parse_structure(read_file(input)), read_file(semantics_file), out);
    if (minimality_cmd->parsed())
      return command_minimality(parse_structure(read_file(input)), max_values, threads, out);
    if (generate_cmd->parsed())
      return command_generate(family, size, seed, kappa < 0 ? 0 : kappa, pivot, out);
    if (hierarchy_cmd->parsed() && hierarchy_eval->parsed())
      return command_hierarchy_eval(read_file(input), out);
    err << "no command selected\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace conlab
