#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hypermim/cut_enumeration.h"
#include "hypermim/cut_oracle.h"
#include "hypermim/engine.h"
#include "hypermim/expander.h"
#include "hypermim/important_cuts.h"
#include "hypermim/instance_io.h"
#include "hypermim/matroid.h"
#include "hypermim/partition.h"
#include "hypermim/result_document.h"

using namespace hypermim;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Common {
  std::string file;
  std::optional<std::uint32_t> c;
  std::string phi = "1";
  double exponent_m = 1.0;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::size_t guard_n = 20;
  std::size_t guard_k = 12;
  std::string out;
};

void add_common(CLI::App *cmd, Common &o, bool with_file = true) {
  if (with_file) cmd->add_option("file", o.file, "instance file")->required();
  cmd->add_option("--c", o.c, "override the budget from the file");
  cmd->add_option("--phi", o.phi, "expansion parameter: rational, decimal or 'formula'");
  cmd->add_option("--M", o.exponent_m, "exponent constant of the phi formula");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--guard-n", o.guard_n, "exhaustive scan vertex limit");
  cmd->add_option("--guard-k", o.guard_k, "terminal partition enumeration limit");
  cmd->add_option("--out", o.out, "write output to this path");
}

Instance load(const Common &o) {
  Instance inst = read_instance_file(o.file);
  if (o.c) inst.budget = *o.c;
  return inst;
}

Rational phi_of(const Common &o, const Instance &inst) {
  if (o.phi == "formula") {
    return formula_phi(inst.graph.num_vertices(), inst.graph.rank(), inst.budget, o.exponent_m);
  }
  return parse_rational(o.phi);
}

// "1,2,3" in 1-indexed ids.
std::vector<std::uint32_t> parse_ids(const std::string &text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token.find_first_not_of("0123456789 ") != std::string::npos) throw Error("bad id '" + token + "'");
    const unsigned long v = std::stoul(token);
    if (v == 0) throw Error("ids are 1-indexed");
    out.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return out;
}

TerminalPartition parse_partition(const Instance &inst, const std::string &text) {
  std::vector<VertexSet> blocks;
  std::stringstream in(text);
  std::string block;
  while (std::getline(in, block, '|')) {
    VertexSet b = parse_ids(block);
    normalize(b);
    blocks.push_back(std::move(b));
  }
  return TerminalPartition::from_blocks(inst.terminals, blocks);
}

std::string ids_str(const std::vector<std::uint32_t> &ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i] + 1);
  return s.empty() ? "-" : s;
}

void emit(const Common &o, const std::string &text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error("cannot write " + o.out);
  file << text;
}

std::string read_text(const std::string &path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

Verdicts check(const Instance &inst, const Hypergraph &h, const ContractionMap &map, EdgeSet *non_essential) {
  Verdicts v;
  v.mimicking = is_mimicking(inst, h, map);
  Instance result{h, map.image(inst.terminals), inst.budget};
  EdgeSet essential = essential_edges(result);
  EdgeSet missing = set_difference(h.edge_ids(), essential);
  v.all_essential = missing.empty();
  if (non_essential) *non_essential = std::move(missing);
  return v;
}

int run_sparsify(const Common &o, bool verify, bool timestamp) {
  const std::string text = read_text(o.file);
  Instance inst = parse_instance(text);
  if (o.c) inst.budget = *o.c;
  EngineOptions eo;
  if (o.phi != "formula") eo.phi = parse_rational(o.phi);
  eo.exponent_m = o.exponent_m;
  eo.guard_n = o.guard_n;
  SparsifyResult res = sparsify(inst, eo);
  Verdicts verdicts;
  if (verify) verdicts = check(inst, res.graph, res.map, nullptr);
  ResultParameters params{inst.budget, o.phi, o.exponent_m, o.seed};
  if (o.format == "structured") {
    emit(o, make_result_document(text, params, res, verdicts, timestamp).dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "edges " << inst.graph.num_edges() << " -> " << res.report.final_size << "\n";
    s << "passes " << res.report.passes << "\n";
    s << "contracted " << ids_str(res.report.contractions) << "\n";
    for (const auto &e : res.graph.edges()) s << "edge " << e.id + 1 << ": " << ids_str(e.vertices) << "\n";
    if (verify) {
      s << "mimicking " << (*verdicts.mimicking ? "yes" : "no") << "\n";
      s << "all-essential " << (*verdicts.all_essential ? "yes" : "no") << "\n";
    }
    emit(o, s.str());
  }
  return verify && !*verdicts.mimicking ? kFailed : kOk;
}

int run_verify(const Common &o, const std::string &result_path, const std::string &contract) {
  Instance inst = load(o);
  std::vector<EdgeId> order;
  bool replay_ok = true;
  if (!result_path.empty()) {
    json doc = json::parse(read_text(result_path));
    for (const auto &e : doc.at("contractions")) order.push_back(e.get<EdgeId>() - 1);
    replay_ok = replay_matches(inst, doc);
  } else {
    order = parse_ids(contract);
  }
  auto [h, map] = contract_sequence(inst.graph, order);
  EdgeSet non_essential;
  Verdicts v = check(inst, h, map, &non_essential);
  const bool ok = replay_ok && *v.mimicking;
  if (o.format == "structured") {
    json out = {{"mimicking", *v.mimicking},
                {"all_essential", *v.all_essential},
                {"replay_ok", replay_ok},
                {"non_essential", json::array()}};
    for (EdgeId e : non_essential) out["non_essential"].push_back(e + 1);
    emit(o, out.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "mimicking " << (*v.mimicking ? "yes" : "no") << "\n";
    s << "non-essential " << ids_str(non_essential) << "\n";
    if (!replay_ok) s << "replay mismatch\n";
    emit(o, s.str());
  }
  return ok ? kOk : kFailed;
}

int run_enumerate(const Common &o, bool all_vertices) {
  Instance inst = load(o);
  const Rational phi = phi_of(o, inst);
  EnumerationOptions en;
  en.all_vertices = all_vertices;
  en.expander_guard_n = o.guard_n;
  auto cuts = connected_multiway_cuts(inst, phi, en);
  if (o.format == "structured") {
    json out = json::array();
    for (const auto &cut : cuts) {
      json e = json::array();
      for (EdgeId id : cut.edges) e.push_back(id + 1);
      out.push_back(e);
    }
    emit(o, json{{"phi", phi.str()}, {"cuts", out}}.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "phi " << phi.str() << ", " << cuts.size() << " candidate cuts\n";
    for (const auto &cut : cuts) s << ids_str(cut.edges) << "\n";
    emit(o, s.str());
  }
  return kOk;
}

int run_important(const Common &o, const std::string &source, const std::string &sink) {
  Instance inst = load(o);
  VertexSet a = parse_ids(source), b = parse_ids(sink);
  normalize(a);
  normalize(b);
  auto cuts = important_cuts_hypergraph(inst.graph, a, b, inst.budget);
  std::ostringstream s;
  if (o.format == "structured") {
    json out = json::array();
    for (const auto &ic : cuts) {
      json side = json::array(), cut = json::array();
      for (VertexId v : ic.source_side) side.push_back(v + 1);
      for (EdgeId e : ic.cut) cut.push_back(e + 1);
      out.push_back({{"source_side", side}, {"cut", cut}});
    }
    s << out.dump(2) << "\n";
  } else {
    s << cuts.size() << " important cuts\n";
    for (const auto &ic : cuts) s << "R=" << ids_str(ic.source_side) << " cut=" << ids_str(ic.cut) << "\n";
  }
  emit(o, s.str());
  return kOk;
}

int run_decompose(const Common &o, bool unbreakable) {
  Instance inst = load(o);
  std::ostringstream s;
  if (unbreakable) {
    auto dec = unbreakable_decompose(inst, o.guard_n);
    if (o.format == "structured") {
      json parts = json::array();
      for (const auto &p : dec.parts) {
        json vs = json::array();
        for (VertexId v : p.host_set) vs.push_back(v + 1);
        parts.push_back(vs);
      }
      s << json{{"parts", parts}, {"terminal_sum", dec.terminal_sum}, {"terminal_sum_ok", dec.terminal_sum_ok}}.dump(2)
        << "\n";
    } else {
      s << dec.parts.size() << " parts, terminal sum " << dec.terminal_sum << (dec.terminal_sum_ok ? " ok" : " over")
        << "\n";
      for (const auto &p : dec.parts) s << ids_str(p.host_set) << "\n";
    }
  } else {
    const Rational phi = phi_of(o, inst);
    ExpanderOptions eo;
    eo.guard_n = o.guard_n;
    auto dec = expander_decompose(inst.graph, phi, 1.0, eo);
    if (o.format == "structured") {
      json parts = json::array();
      for (const auto &p : dec.parts) {
        json vs = json::array();
        for (VertexId v : p) vs.push_back(v + 1);
        parts.push_back(vs);
      }
      json cut = json::array();
      for (EdgeId e : dec.cut_edges) cut.push_back(e + 1);
      s << json{{"phi", phi.str()},
                {"parts", parts},
                {"cut_edges", cut},
                {"cut_budget", dec.cut_budget},
                {"within_budget", dec.within_budget}}
               .dump(2)
        << "\n";
    } else {
      s << "phi " << phi.str() << ", " << dec.parts.size() << " parts, " << dec.cut_edges.size() << " cut edges\n";
      for (const auto &p : dec.parts) s << ids_str(p) << "\n";
    }
  }
  emit(o, s.str());
  return kOk;
}

int run_oracle(const Common &o, const std::string &query, const std::string &partition, const std::string &pairs,
               const std::string &edge) {
  Instance inst = load(o);
  std::ostringstream s;
  if (query == "min-multiway") {
    auto cert = min_multiway_cut(inst, parse_partition(inst, partition));
    if (cert) {
      s << "value " << cert->value << "\ncut " << ids_str(cert->edges) << "\n";
    } else {
      s << "value >" << inst.budget << "\n";
    }
  } else if (query == "min-multicut") {
    std::vector<std::pair<VertexId, VertexId>> list;
    std::stringstream in(pairs);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto dash = item.find('-');
      if (dash == std::string::npos) throw Error("pairs look like 1-3,2-4");
      const auto u = parse_ids(item.substr(0, dash)), v = parse_ids(item.substr(dash + 1));
      if (u.size() != 1 || v.size() != 1) throw Error("pairs look like 1-3,2-4");
      list.emplace_back(u[0], v[0]);
    }
    auto cert = min_multicut(inst, list);
    if (cert) {
      s << "value " << cert->value << "\ncut " << ids_str(cert->edges) << "\n";
    } else {
      s << "value >" << inst.budget << "\n";
    }
  } else if (query == "essential") {
    if (edge.empty()) {
      s << "essential " << ids_str(essential_edges(inst)) << "\n";
    } else {
      const auto e = parse_ids(edge);
      if (e.size() != 1) throw Error("--edge takes one id");
      s << "edge " << e[0] + 1 << (is_essential(inst, e[0], o.guard_k) ? " essential" : " not essential") << "\n";
    }
  } else {
    throw Error("unknown oracle query '" + query + "'");
  }
  emit(o, s.str());
  return kOk;
}

int run_check_matroid(const Common &o, const std::string &set, double alpha, std::size_t d) {
  Instance inst = load(o);
  SplitDigraph sd = build_d_split(inst.graph, inst.terminals);
  std::ostringstream s;
  s << "D^split nodes " << sd.digraph.num_nodes << ", sources " << sd.sources.size() << "\n";
  s << "gammoid rank " << hyperedge_gammoid(sd).rank() << "\n";
  if (!set.empty()) {
    // e<id> names an edge node, s<id> its sink-only copy.
    NodeSet f;
    std::stringstream in(set);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (token.size() < 2 || (token[0] != 'e' && token[0] != 's')) throw Error("set entries look like e3 or s3");
      const auto id = parse_ids(token.substr(1));
      if (id.size() != 1) throw Error("bad entry '" + token + "'");
      f.push_back(token[0] == 'e' ? sd.edge_node(id[0]) : sd.sink_node(id[0]));
    }
    normalize(f);
    s << "independent " << (gammoid_independent(sd, f) ? "yes" : "no") << "\n";
  }
  auto unb = is_unbreakable(inst, d, o.guard_n);
  s << d << "-unbreakable " << (unb.holds ? "yes" : "no, X=" + ids_str(*unb.witness)) << "\n";
  auto dense = is_dense(inst, alpha, o.guard_n);
  s << alpha << "-dense " << (dense.holds ? "yes" : "no, X=" + ids_str(*dense.witness)) << "\n";
  emit(o, s.str());
  return kOk;
}

int run_gen(const Common &o, std::size_t n, std::size_t m, std::size_t r, std::size_t k) {
  emit(o, serialize_instance(generate_random(o.seed.value_or(1), n, m, r, k, o.c.value_or(1))));
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"multicut-mimicking networks for hypergraphs"};
  app.require_subcommand(1);

  Common sp, ve, en, im, de, orc, mat, gen;
  bool verify = false, no_timestamp = false;
  auto *c_sparsify = app.add_subcommand("sparsify", "contract to a mimicking network");
  add_common(c_sparsify, sp);
  c_sparsify->add_flag("--verify", verify, "check the output with the exact oracle");
  c_sparsify->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from structured output");

  std::string result_path, contract;
  auto *c_verify = app.add_subcommand("verify", "check a contraction against the exact oracle");
  add_common(c_verify, ve);
  auto *g_res = c_verify->add_option("--result", result_path, "structured sparsify output");
  auto *g_con = c_verify->add_option("--contract", contract, "contraction order, edge ids");
  g_res->excludes(g_con);

  bool all_vertices = false;
  auto *c_enum = app.add_subcommand("enumerate-cuts", "candidate connected multiway cuts of an expander");
  add_common(c_enum, en);
  c_enum->add_flag("--all-vertices", all_vertices, "start the search from every vertex");

  std::string source, sink;
  auto *c_imp = app.add_subcommand("important-cuts", "important (A,B)-cuts of size at most c");
  add_common(c_imp, im);
  c_imp->add_option("--source", source, "A, vertex ids")->required();
  c_imp->add_option("--sink", sink, "B, vertex ids")->required();

  bool unbreakable = false;
  auto *c_dec = app.add_subcommand("decompose", "expander or unbreakable decomposition");
  add_common(c_dec, de);
  c_dec->add_flag("--unbreakable", unbreakable, "split into 5c-unbreakable parts instead");

  std::string query, partition, pairs, edge;
  auto *c_orc = app.add_subcommand("oracle", "exact cut oracle queries");
  c_orc->add_option("query", query, "min-multiway | min-multicut | essential")->required();
  add_common(c_orc, orc);
  c_orc->add_option("--partition", partition, "terminal blocks, e.g. 1,2|3");
  c_orc->add_option("--pairs", pairs, "vertex pairs, e.g. 1-3,2-4");
  c_orc->add_option("--edge", edge, "edge id");

  std::string set;
  double alpha = 2.0;
  std::size_t d = 1;
  auto *c_mat = app.add_subcommand("check-matroid", "hyperedge gammoid and unbreakable/dense checks");
  add_common(c_mat, mat);
  c_mat->add_option("--set", set, "gammoid set, e.g. e1,s2");
  c_mat->add_option("--alpha", alpha, "density exponent");
  c_mat->add_option("--d", d, "unbreakability threshold");

  std::size_t gn = 8, gm = 10, gr = 3, gk = 3;
  auto *c_gen = app.add_subcommand("gen", "seeded random instance");
  add_common(c_gen, gen, false);
  c_gen->add_option("--n", gn, "vertices");
  c_gen->add_option("--m", gm, "edges");
  c_gen->add_option("--r", gr, "rank");
  c_gen->add_option("--k", gk, "terminals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*c_sparsify) return run_sparsify(sp, verify, !no_timestamp);
    if (*c_verify) {
      if (result_path.empty() && contract.empty()) throw Error("verify needs --result or --contract");
      return run_verify(ve, result_path, contract);
    }
    if (*c_enum) return run_enumerate(en, all_vertices);
    if (*c_imp) return run_important(im, source, sink);
    if (*c_dec) return run_decompose(de, unbreakable);
    if (*c_orc) return run_oracle(orc, query, partition, pairs, edge);
    if (*c_mat) return run_check_matroid(mat, set, alpha, d);
    if (*c_gen) return run_gen(gen, gn, gm, gr, gk);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
