#include "hypermim/result_document.h"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace hypermim {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

nlohmann::json hypergraph_json(const Hypergraph &g) {
  nlohmann::json vs = nlohmann::json::array();
  for (VertexId v : g.vertices()) vs.push_back(v + 1);
  nlohmann::json es = nlohmann::json::array();
  for (const auto &e : g.edges()) {
    nlohmann::json ev = nlohmann::json::array();
    for (VertexId v : e.vertices) ev.push_back(v + 1);
    es.push_back({{"id", e.id + 1}, {"vertices", ev}});
  }
  return {{"vertices", vs}, {"edges", es}};
}

std::string document_hash(const nlohmann::json &doc) {
  nlohmann::json copy = doc;
  copy.erase("timestamp");
  copy.erase("document_hash");
  return hex64(fnv1a64(copy.dump()));
}

nlohmann::json make_result_document(const std::string &input_text, const ResultParameters &params,
                                    const SparsifyResult &result, const Verdicts &verdicts, bool with_timestamp) {
  nlohmann::json doc;
  doc["format"] = "hypermim-result/1";
  doc["input_hash"] = hex64(fnv1a64(input_text));
  doc["parameters"] = {{"c", params.c},
                       {"phi", params.phi},
                       {"M", params.exponent_m},
                       {"seed", params.seed ? nlohmann::json(*params.seed) : nlohmann::json(nullptr)}};
  nlohmann::json seq = nlohmann::json::array();
  for (EdgeId e : result.report.contractions) seq.push_back(e + 1);
  doc["contractions"] = seq;
  doc["final"] = hypergraph_json(result.graph);
  nlohmann::json passes = nlohmann::json::array();
  for (const auto &p : result.report.pass_stats) {
    passes.push_back({{"phi", p.phi.str()},
                      {"parts", p.parts},
                      {"cut_edges", p.cut_edges},
                      {"cut_budget", p.cut_budget},
                      {"cut_within_budget", p.cut_within_budget},
                      {"edges_before", p.edges_before},
                      {"edges_after", p.edges_after},
                      {"contractions", p.contractions},
                      {"small_mode_parts", p.small_mode_parts}});
  }
  doc["passes"] = passes;
  auto opt = [](const std::optional<bool> &b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); };
  doc["verdicts"] = {{"mimicking", opt(verdicts.mimicking)}, {"all_essential", opt(verdicts.all_essential)}};
  doc["document_hash"] = document_hash(doc);
  if (with_timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    doc["timestamp"] = buf;
  }
  return doc;
}

bool replay_matches(const Instance &input, const nlohmann::json &doc) {
  std::vector<EdgeId> order;
  for (const auto &e : doc.at("contractions")) order.push_back(e.get<EdgeId>() - 1);
  try {
    auto [g, map] = contract_sequence(input.graph, order);
    return hypergraph_json(g) == doc.at("final");
  } catch (const Error &) {
    return false;
  }
}

}  // namespace hypermim
