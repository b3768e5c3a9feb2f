#ifndef HYPERMIM_EXPANDER_H_
#define HYPERMIM_EXPANDER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "hypermim/hypergraph.h"

namespace hypermim {

struct ExpanderCheck {
  bool expander = true;
  std::optional<VertexSet> witness;  // violating X when not an expander
  bool sampled = false;              // verdict from sampling mode, "probably expander"
  std::uint64_t sets_tested = 0;
};

struct ExpanderOptions {
  // Exhaustive scan limit on vertices of degree >= 2; pendant vertices are
  // resolved analytically and do not count.
  std::size_t guard_n = 20;
  bool allow_sampling = false;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
};

// Whether min(|E(X)|, |E(V - X)|) <= phi^-1 |boundary(X)| for every X.
// The witness, when present, is the sparsest violation (smallest ratio
// |boundary| / min side, ties by smallest vertex mask).
ExpanderCheck is_phi_expander(const Hypergraph &g, Rational phi, const ExpanderOptions &options = {});

// phi^-1 = ceil(4 r c^(M r log2 c) log2^3 n), at least 1.
Rational formula_phi(std::size_t n, std::size_t r, std::uint32_t c, double exponent_m = 1.0);

// floor(3 c phi^-1 + c).
std::uint64_t small_regime_threshold(std::uint32_t c, Rational phi);

struct ExpanderDecomposition {
  std::vector<VertexSet> parts;
  Rational phi;
  EdgeSet cut_edges;
  double cut_budget = 0;  // cut_budget_factor * phi * m * log2^3 n
  bool within_budget = true;
};

// Splits along sparsest violations of the restricted hypergraphs until every
// part certifies. Parts are ordered by smallest vertex.
ExpanderDecomposition expander_decompose(const Hypergraph &g, Rational phi, double cut_budget_factor = 1.0,
                                         const ExpanderOptions &options = {});

// The restricted hypergraph of X (anchors included), as certified per part.
Hypergraph restricted_hypergraph(const Hypergraph &g, const VertexSet &x);

}  // namespace hypermim

#endif  // HYPERMIM_EXPANDER_H_
