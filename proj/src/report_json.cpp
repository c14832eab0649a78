#include "fanar/report_json.hpp"

namespace fanar {

json to_json(const VertexSet& s) {
  json out = json::array();
  for (int v : s) out.push_back(v);
  return out;
}

json to_json(const FanWitness& w) {
  json cliques = json::array();
  for (const auto& c : w.cliques) cliques.push_back(to_json(c));
  json out = {{"center", w.center}, {"cliques", cliques}};
  if (!w.colors.empty()) out["colors"] = w.colors;
  return out;
}

json to_json(const ExtremalValue& v) {
  return {{"value", v.value},
          {"parity_branch", v.parity_branch == Parity::kOdd ? "odd" : "even"},
          {"below_threshold", v.below_threshold},
          {"threshold", v.threshold}};
}

json to_json(const DeficitReport& d) {
  return {{"inner_edges", d.inner_edges}, {"cross_missing", d.cross_missing}, {"deficit", d.deficit}, {"bound", d.bound}};
}

json to_json(const PartitionProperties& p) {
  return {{"sizes", p.sizes}, {"inner_matchings", p.inner_matchings}, {"neighborhoods", p.neighborhoods}, {"all", p.all()}};
}

json to_json(const VerificationReport& r) {
  json out = {{"parameters", {{"n", r.n}, {"k", r.kplus1 - 1}, {"r", r.r}}},
              {"colors_used", r.colors_used},
              {"construction_edge_count", r.construction_edge_count},
              {"formula_value", r.formula_value},
              {"fan_free", r.fan_free},
              {"rainbow_free", r.rainbow_free},
              {"colors_match", r.colors_match},
              {"below_threshold", r.below_threshold},
              {"elapsed", r.elapsed_seconds},
              {"passed", r.passed()}};
  if (r.failing_witness) out["failing_witness"] = to_json(*r.failing_witness);
  return out;
}

json to_json(const GridCell& c) {
  return {{"parameters", {{"n", c.n}, {"k", c.k}, {"r", c.r}}},
          {"construction_edges", c.construction_edges},
          {"formula_value", c.formula_value},
          {"identity_holds", c.identity_holds},
          {"deficit", to_json(c.deficit)},
          {"deficit_holds", c.deficit_holds},
          {"passed", c.passed()}};
}

json oracle_record(const json& parameters, const OracleResult& res, const std::string& witness_file) {
  json out = {{"parameters", parameters}, {"value", res.value}, {"nodes", res.nodes}, {"elapsed", res.elapsed_seconds}};
  out["witness_file"] = witness_file.empty() ? json(nullptr) : json(witness_file);
  return out;
}

}  // namespace fanar
