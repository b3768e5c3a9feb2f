#ifndef HYPERMIM_RESULT_DOCUMENT_H_
#define HYPERMIM_RESULT_DOCUMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypermim/engine.h"
#include "hypermim/hypergraph.h"

namespace hypermim {

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

struct ResultParameters {
  std::uint32_t c = 0;
  std::string phi;  // "formula" or a rational
  double exponent_m = 1.0;
  std::optional<std::uint64_t> seed;
};

struct Verdicts {
  std::optional<bool> mimicking;
  std::optional<bool> all_essential;
};

// Field layout (stable):
//   format, input_hash, parameters{c, phi, M, seed}, contractions,
//   final{vertices, edges[{id, vertices}]}, passes[...], verdicts{mimicking, all_essential},
//   document_hash, timestamp
// Vertex and edge ids are 1-indexed as in the instance file. document_hash
// covers every field except itself and timestamp.
nlohmann::json make_result_document(const std::string &input_text, const ResultParameters &params,
                                    const SparsifyResult &result, const Verdicts &verdicts,
                                    bool with_timestamp = true);

// Hash of the document with document_hash and timestamp removed.
std::string document_hash(const nlohmann::json &doc);

// Applies the recorded contraction sequence to `input` and compares with the
// recorded final hypergraph.
bool replay_matches(const Instance &input, const nlohmann::json &doc);

nlohmann::json hypergraph_json(const Hypergraph &g);

}  // namespace hypermim

#endif  // HYPERMIM_RESULT_DOCUMENT_H_
