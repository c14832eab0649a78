#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fanar/report_json.hpp"

using namespace fanar;

namespace {

struct Options {
  bool as_json = false;
  std::int64_t n = 0;
  int p = 0;
  int nu = 0;
  int delta = 0;
  int k = 0;
  int r = 0;
  std::string out;
  std::string graph_file;
  std::string coloring_file;
  std::string partition_file;
  std::string witness_file;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  int k_lo = 1, k_hi = 6, r_lo = 3, r_hi = 6, n_lo = 0, n_hi = 120;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const Options& o, const json& j, const std::string& plain) {
  if (o.as_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << plain << '\n';
}

std::string describe(const FanWitness& w) {
  std::ostringstream ss;
  ss << "center " << w.center << ":";
  for (const auto& c : w.cliques) {
    ss << " {";
    bool first = true;
    for (int v : c) {
      ss << (first ? "" : ",") << v;
      first = false;
    }
    ss << "}";
  }
  if (!w.colors.empty()) {
    ss << " colors";
    for (int c : w.colors) ss << ' ' << c;
  }
  return ss.str();
}

void report_witness(const Options& o, const char* what, const std::optional<FanWitness>& w) {
  json j = {{"query", what}, {"found", w.has_value()}};
  if (w) j["witness"] = to_json(*w);
  emit(o, j, w ? std::string(what) + " found, " + describe(*w) : std::string(what) + " absent");
}

void add_n(CLI::App* c, Options& o) { c->add_option("--n", o.n, "vertex count")->required(); }
void add_kr(CLI::App* c, Options& o) {
  c->add_option("--k", o.k, "number of cliques")->required();
  c->add_option("--r", o.r, "clique size")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fan graph extremal and anti-Ramsey toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "JSON output");

  // formula
  auto* formula = app.add_subcommand("formula", "closed-form values")->require_subcommand(1);
  auto* f_turan = formula->add_subcommand("turan", "edges of T_{n,p}");
  add_n(f_turan, o);
  f_turan->add_option("--p", o.p)->required();
  f_turan->callback([&] {
    auto v = turan_count(o.n, o.p);
    emit(o, {{"n", o.n}, {"p", o.p}, {"value", v}}, std::to_string(v));
  });
  auto* f_f = formula->add_subcommand("f", "max edges with matching number <= nu and max degree <= delta");
  f_f->add_option("--nu", o.nu)->required();
  f_f->add_option("--delta", o.delta)->required();
  f_f->callback([&] {
    auto v = f_bounded(BoundedPair(o.nu, o.delta));
    emit(o, {{"nu", o.nu}, {"delta", o.delta}, {"value", v}}, std::to_string(v));
  });
  auto* f_ex = formula->add_subcommand("ex-fan", "ex(n, F_{k,r})");
  add_n(f_ex, o);
  add_kr(f_ex, o);
  f_ex->callback([&] {
    auto v = ex_fan(o.n, FanSpec(o.k, o.r));
    json j = to_json(v);
    j["parameters"] = {{"n", o.n}, {"k", o.k}, {"r", o.r}};
    emit(o, j, std::to_string(v.value) + (v.below_threshold ? " (below threshold)" : ""));
  });
  auto* f_ar = formula->add_subcommand("ar-fan", "ar(n, F_{k,r}) for k >= 2, r >= 3");
  add_n(f_ar, o);
  add_kr(f_ar, o);
  f_ar->callback([&] {
    auto v = ar_fan(o.n, o.k, o.r);
    json j = to_json(v);
    j["parameters"] = {{"n", o.n}, {"k", o.k}, {"r", o.r}};
    emit(o, j, std::to_string(v.value) + (v.below_threshold ? " (below threshold)" : ""));
  });

  // construct
  auto* construct = app.add_subcommand("construct", "write a graph in text format")->require_subcommand(1);
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "output file (default stdout)"); };
  auto* c_complete = construct->add_subcommand("complete");
  add_n(c_complete, o);
  add_out(c_complete);
  c_complete->callback([&] { write_text(o.out, to_text(complete(static_cast<int>(o.n)))); });
  auto* c_turan = construct->add_subcommand("turan");
  add_n(c_turan, o);
  c_turan->add_option("--p", o.p)->required();
  add_out(c_turan);
  c_turan->callback([&] { write_text(o.out, to_text(turan(static_cast<int>(o.n), o.p))); });
  auto* c_fan = construct->add_subcommand("fan");
  add_kr(c_fan, o);
  add_out(c_fan);
  c_fan->callback([&] { write_text(o.out, to_text(fan(FanSpec(o.k, o.r)))); });
  auto* c_ext = construct->add_subcommand("extremal-fan-free");
  add_n(c_ext, o);
  add_kr(c_ext, o);
  add_out(c_ext);
  c_ext->callback([&] {
    write_text(o.out, to_text(construct_extremal_fan_free(static_cast<int>(o.n), FanSpec(o.k, o.r))));
  });
  auto* c_bm = construct->add_subcommand("bounded-max");
  c_bm->add_option("--nu", o.nu)->required();
  c_bm->add_option("--delta", o.delta)->required();
  add_out(c_bm);
  c_bm->callback([&] { write_text(o.out, to_text(construct_bounded_max(BoundedPair(o.nu, o.delta)))); });

  // detect
  auto* detect = app.add_subcommand("detect", "exact subgraph search")->require_subcommand(1);
  auto* d_clique = detect->add_subcommand("clique");
  d_clique->add_option("--graph", o.graph_file)->required();
  d_clique->add_option("--r", o.r)->required();
  d_clique->callback([&] {
    Graph g = graph_from_text(read_file(o.graph_file));
    auto c = contains_clique(g, o.r);
    json j = {{"query", "clique"}, {"r", o.r}, {"found", c.has_value()}};
    if (c) j["witness"] = to_json(*c);
    std::string plain = "clique absent";
    if (c) {
      plain = "clique found:";
      for (int v : *c) plain += " " + std::to_string(v);
    }
    emit(o, j, plain);
  });
  auto* d_fan = detect->add_subcommand("fan");
  d_fan->add_option("--graph", o.graph_file)->required();
  add_kr(d_fan, o);
  d_fan->callback([&] {
    Graph g = graph_from_text(read_file(o.graph_file));
    report_witness(o, "fan", find_fan(g, FanSpec(o.k, o.r)));
  });
  auto* d_rainbow = detect->add_subcommand("rainbow-fan");
  d_rainbow->add_option("--coloring", o.coloring_file)->required();
  d_rainbow->add_option("--graph", o.graph_file, "restrict to edges of this host graph");
  add_kr(d_rainbow, o);
  d_rainbow->callback([&] {
    EdgeColoring col = coloring_from_text(read_file(o.coloring_file));
    FanSpec spec(o.k, o.r);
    if (o.graph_file.empty())
      report_witness(o, "rainbow fan", find_rainbow_fan(col, spec));
    else
      report_witness(o, "rainbow fan", find_rainbow_fan(col, graph_from_text(read_file(o.graph_file)), spec));
  });

  // color
  auto* color = app.add_subcommand("color", "colorings")->require_subcommand(1);
  auto* c_lb = color->add_subcommand("lower-bound", "rainbow F_{k+1,r}-free coloring with ex(n,F_{k,r})+1 colors");
  add_n(c_lb, o);
  add_kr(c_lb, o);
  add_out(c_lb);
  c_lb->callback([&] {
    write_text(o.out, to_text(lower_bound_coloring(static_cast<int>(o.n), FanSpec(o.k, o.r))));
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact brute-force values")->require_subcommand(1);
  auto add_oracle_opts = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "node budget");
    c->add_option("--witness", o.witness_file, "write the witness here");
  };
  auto finish_oracle = [&](const json& params, const OracleResult& res, const std::string& witness_text) {
    if (!o.witness_file.empty()) write_text(o.witness_file, witness_text);
    emit(o, oracle_record(params, res, o.witness_file),
         std::to_string(res.value) + " (" + std::to_string(res.nodes) + " nodes)");
  };
  auto* o_ex = oracle->add_subcommand("ex", "ex(n, K_r) with --clique, else ex(n, F_{k,r})");
  add_n(o_ex, o);
  int clique_r = 0;
  o_ex->add_option("--clique", clique_r, "forbid K_r");
  o_ex->add_option("--k", o.k);
  o_ex->add_option("--r", o.r);
  add_oracle_opts(o_ex);
  o_ex->callback([&] {
    Forbidden fb = clique_r > 0 ? Forbidden::clique(clique_r) : Forbidden::fan(FanSpec(o.k, o.r));
    auto res = brute_force_ex(static_cast<int>(o.n), fb, {o.budget});
    finish_oracle({{"n", o.n}, {"forbidden", fb.describe()}}, res, to_text(*res.witness_graph));
  });
  auto* o_f = oracle->add_subcommand("f");
  o_f->add_option("--nu", o.nu)->required();
  o_f->add_option("--delta", o.delta)->required();
  add_oracle_opts(o_f);
  o_f->callback([&] {
    auto res = brute_force_f(BoundedPair(o.nu, o.delta), {o.budget});
    finish_oracle({{"nu", o.nu}, {"delta", o.delta}}, res, to_text(*res.witness_graph));
  });
  auto* o_ar = oracle->add_subcommand("ar", "ar(n, F_{k,r})");
  add_n(o_ar, o);
  add_kr(o_ar, o);
  add_oracle_opts(o_ar);
  o_ar->callback([&] {
    auto res = brute_force_ar(static_cast<int>(o.n), FanSpec(o.k, o.r), {o.budget});
    finish_oracle({{"n", o.n}, {"k", o.k}, {"r", o.r}}, res, to_text(*res.witness_coloring));
  });

  // verify
  auto* verify = app.add_subcommand("verify", "consistency checks")->require_subcommand(1);
  auto* v_lb = verify->add_subcommand("lower-bound", "certify ar(n,F_{k,r}) >= ex(n,F_{k-1,r}) + 2");
  add_n(v_lb, o);
  add_kr(v_lb, o);
  v_lb->callback([&] {
    auto rep = verify_lower_bound(static_cast<int>(o.n), o.k, o.r);
    std::ostringstream ss;
    ss << (rep.passed() ? "ok" : "FAILED") << ": colors " << rep.colors_used << ", fan_free " << rep.fan_free
       << ", rainbow_free " << rep.rainbow_free << ", colors_match " << rep.colors_match;
    if (rep.failing_witness) ss << "\nwitness " << describe(*rep.failing_witness);
    emit(o, to_json(rep), ss.str());
  });
  auto* v_grid = verify->add_subcommand("grid", "construction identity and deficit over a grid");
  v_grid->add_option("--k-min", o.k_lo);
  v_grid->add_option("--k-max", o.k_hi);
  v_grid->add_option("--r-min", o.r_lo);
  v_grid->add_option("--r-max", o.r_hi);
  v_grid->add_option("--n-min", o.n_lo);
  v_grid->add_option("--n-max", o.n_hi);
  v_grid->callback([&] {
    auto cells = verify_formula_grid({o.k_lo, o.k_hi}, {o.r_lo, o.r_hi}, {o.n_lo, o.n_hi});
    json failures = json::array();
    for (const auto& c : cells)
      if (!c.passed()) failures.push_back(to_json(c));
    emit(o, {{"cells", cells.size()}, {"failures", failures}},
         std::to_string(cells.size()) + " cells, " + std::to_string(failures.size()) + " failures");
  });
  auto* v_part = verify->add_subcommand("partition", "properties and deficit of a given partition");
  v_part->add_option("--graph", o.graph_file)->required();
  v_part->add_option("--partition", o.partition_file)->required();
  v_part->add_option("--k", o.k)->required();
  v_part->callback([&] {
    Graph g = graph_from_text(read_file(o.graph_file));
    auto parts = partition_from_text(read_file(o.partition_file), g.size());
    auto props = verify_partition_properties(g, parts, o.k);
    auto def = edgelow_deficit(g, parts, o.k);
    std::ostringstream ss;
    ss << "properties " << (props.all() ? "hold" : "fail") << "; deficit " << def.deficit << " (bound " << def.bound
       << ")";
    emit(o, {{"properties", to_json(props)}, {"deficit", to_json(def)}}, ss.str());
  });
  auto* v_l28 = verify->add_subcommand("lemma28", "heuristic partition, then deficit bound for an F_{k+1,r}-free graph");
  v_l28->add_option("--graph", o.graph_file)->required();
  add_kr(v_l28, o);
  v_l28->callback([&] {
    Graph g = graph_from_text(read_file(o.graph_file));
    json j = {{"parameters", {{"k", o.k}, {"r", o.r}}}};
    auto hit = find_fan(g, FanSpec(o.k + 1, o.r));
    j["fan_free"] = !hit.has_value();
    auto parts = heuristic_partition(g, o.r - 1);
    auto props = verify_partition_properties(g, parts, o.k);
    auto def = edgelow_deficit(g, parts, o.k);
    j["partition"] = json::array();
    for (const auto& c : parts.classes) j["partition"].push_back(to_json(c));
    j["properties"] = to_json(props);
    j["deficit"] = to_json(def);
    bool applicable = !hit && props.all();
    j["applicable"] = applicable;
    j["bound_holds"] = def.deficit <= def.bound;
    std::ostringstream ss;
    ss << (applicable ? "applicable" : "not applicable") << "; deficit " << def.deficit << " (bound " << def.bound
       << ")";
    emit(o, j, ss.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
