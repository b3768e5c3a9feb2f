#include "hypermim/expander.h"

#include <algorithm>
#include <cmath>
#include <random>

namespace hypermim {

namespace {

struct Layout {
  std::vector<int> core;                // dense indices of vertices with degree >= 2
  std::vector<std::uint64_t> edge_core;  // per edge, mask over core positions
};

Layout layout_of(const DenseView &view) {
  Layout layout;
  std::vector<int> position(view.n(), -1);
  for (std::size_t v = 0; v < view.n(); ++v) {
    if (view.incident[v].size() >= 2) {
      position[v] = static_cast<int>(layout.core.size());
      layout.core.push_back(static_cast<int>(v));
    }
  }
  for (const auto &vs : view.edge_vertices) {
    std::uint64_t mask = 0;
    for (int v : vs) {
      if (position[v] >= 0) mask |= std::uint64_t{1} << position[v];
    }
    layout.edge_core.push_back(mask);
  }
  return layout;
}

struct Evaluation {
  std::uint64_t boundary = 0;
  std::uint64_t best_min = 0;  // max over free-edge splits of min(|E(X)|, |E(V-X)|)
  std::uint64_t free_to_x = 0;
};

Evaluation evaluate(const Layout &layout, std::uint64_t mask) {
  std::uint64_t in = 0, out = 0, cut = 0, free = 0;
  for (std::uint64_t em : layout.edge_core) {
    if (em == 0) {
      ++free;
    } else if ((em & mask) == em) {
      ++in;
    } else if ((em & mask) == 0) {
      ++out;
    } else {
      ++cut;
    }
  }
  Evaluation ev;
  ev.boundary = cut;
  for (std::uint64_t j = 0; j <= free; ++j) {
    std::uint64_t value = std::min(in + j, out + free - j);
    if (value > ev.best_min) {
      ev.best_min = value;
      ev.free_to_x = j;
    }
  }
  return ev;
}

bool violates(const Evaluation &ev, Rational phi) {
  // min > phi^-1 * boundary  <=>  min * num > den * boundary
  return static_cast<__int128>(ev.best_min) * phi.num > static_cast<__int128>(ev.boundary) * phi.den;
}

VertexSet witness_of(const DenseView &view, const Layout &layout, std::uint64_t mask, const Evaluation &ev) {
  std::vector<char> in_x(view.n(), 0);
  for (std::size_t i = 0; i < layout.core.size(); ++i) {
    if (mask >> i & 1) in_x[layout.core[i]] = 1;
  }
  std::uint64_t free_left = ev.free_to_x;
  for (std::size_t e = 0; e < view.m(); ++e) {
    const std::uint64_t em = layout.edge_core[e];
    bool pull = false;
    if (em == 0) {
      if (free_left > 0) {
        --free_left;
        pull = true;
      }
    } else {
      pull = (em & mask) == em;
    }
    if (!pull) continue;
    for (int v : view.edge_vertices[e]) {
      if (view.incident[v].size() <= 1) in_x[v] = 1;
    }
  }
  VertexSet out;
  for (std::size_t v = 0; v < view.n(); ++v) {
    if (in_x[v]) out.push_back(view.vertex_ids[v]);
  }
  return out;
}

}  // namespace

ExpanderCheck is_phi_expander(const Hypergraph &g, Rational phi, const ExpanderOptions &options) {
  if (!phi.positive()) throw Error("phi must be positive");
  DenseView view(g);
  Layout layout = layout_of(view);
  const std::size_t nc = layout.core.size();
  ExpanderCheck check;

  std::optional<std::uint64_t> best_mask;
  Evaluation best{};
  auto consider = [&](std::uint64_t mask) {
    ++check.sets_tested;
    Evaluation ev = evaluate(layout, mask);
    if (!violates(ev, phi)) return;
    if (best_mask) {
      // sparser when boundary / min is smaller
      auto lhs = static_cast<__int128>(ev.boundary) * best.best_min;
      auto rhs = static_cast<__int128>(best.boundary) * ev.best_min;
      if (lhs > rhs || (lhs == rhs && mask >= *best_mask)) return;
    }
    best_mask = mask;
    best = ev;
  };

  if (nc <= options.guard_n && nc < 63) {
    const std::uint64_t total = std::uint64_t{1} << nc;
    for (std::uint64_t mask = 0; mask < total; ++mask) consider(mask);
  } else if (options.allow_sampling && nc < 64) {
    check.sampled = true;
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t i = 0; i < options.samples; ++i) consider(rng() & ((std::uint64_t{1} << nc) - 1));
  } else {
    throw GuardError("expander check over " + std::to_string(nc) + " vertices exceeds guard " +
                     std::to_string(options.guard_n) + "; enable sampling mode");
  }
  if (best_mask) {
    check.expander = false;
    check.witness = witness_of(view, layout, *best_mask, best);
  }
  return check;
}

Rational formula_phi(std::size_t n, std::size_t r, std::uint32_t c, double exponent_m) {
  const double log_n = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  const double log_c = c > 1 ? std::log2(static_cast<double>(c)) : 0.0;
  const double value =
      4.0 * static_cast<double>(r) * std::pow(static_cast<double>(std::max<std::uint32_t>(c, 1)),
                                              exponent_m * static_cast<double>(r) * log_c) *
      log_n * log_n * log_n;
  const double capped = std::min(std::ceil(value), 1e15);
  return Rational::make(1, std::max<std::int64_t>(1, static_cast<std::int64_t>(capped)));
}

std::uint64_t small_regime_threshold(std::uint32_t c, Rational phi) {
  if (!phi.positive()) throw Error("phi must be positive");
  const __int128 scaled = static_cast<__int128>(3) * c * phi.den / phi.num;
  return static_cast<std::uint64_t>(scaled) + c;
}

Hypergraph restricted_hypergraph(const Hypergraph &g, const VertexSet &x) {
  return subinstance(Instance{g, {}, 0}, x).instance.graph;
}

ExpanderDecomposition expander_decompose(const Hypergraph &g, Rational phi, double cut_budget_factor,
                                         const ExpanderOptions &options) {
  if (!phi.positive()) throw Error("phi must be positive");
  ExpanderDecomposition out;
  out.phi = phi;
  std::vector<VertexSet> pending;
  if (g.num_vertices() > 0) pending.push_back(g.vertices());
  while (!pending.empty()) {
    VertexSet s = std::move(pending.back());
    pending.pop_back();
    ExpanderCheck check = is_phi_expander(restricted_hypergraph(g, s), phi, options);
    if (check.expander) {
      out.parts.push_back(std::move(s));
      continue;
    }
    VertexSet inside = set_intersection(*check.witness, s);
    VertexSet outside = set_difference(s, inside);
    if (inside.empty() || outside.empty()) throw Error("expander split made no progress");
    pending.push_back(std::move(outside));
    pending.push_back(std::move(inside));
  }
  std::sort(out.parts.begin(), out.parts.end());
  std::vector<std::size_t> part_of(g.num_vertices());
  for (std::size_t p = 0; p < out.parts.size(); ++p) {
    for (VertexId v : out.parts[p]) {
      part_of[std::lower_bound(g.vertices().begin(), g.vertices().end(), v) - g.vertices().begin()] = p;
    }
  }
  for (const auto &e : g.edges()) {
    auto first = part_of[std::lower_bound(g.vertices().begin(), g.vertices().end(), e.vertices.front()) -
                         g.vertices().begin()];
    for (VertexId v : e.vertices) {
      if (part_of[std::lower_bound(g.vertices().begin(), g.vertices().end(), v) - g.vertices().begin()] != first) {
        out.cut_edges.push_back(e.id);
        break;
      }
    }
  }
  const double log_n = g.num_vertices() > 1 ? std::log2(static_cast<double>(g.num_vertices())) : 0.0;
  out.cut_budget = cut_budget_factor * phi.value() * static_cast<double>(g.num_edges()) * log_n * log_n * log_n;
  out.within_budget = static_cast<double>(out.cut_edges.size()) <= out.cut_budget;
  return out;
}

}  // namespace hypermim
