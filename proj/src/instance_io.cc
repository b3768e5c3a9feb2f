#include "hypermim/instance_io.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace hypermim {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string &what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::uint64_t> numbers(const std::string &text, std::size_t line) {
  std::istringstream in(text);
  std::vector<std::uint64_t> out;
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 18) {
      fail(line, "expected a non-negative integer, got '" + token + "'");
    }
    out.push_back(std::stoull(token));
  }
  return out;
}

// Uniform draw in [0, bound) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t draw(std::mt19937_64 &rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::vector<VertexId> sample(std::mt19937_64 &rng, std::size_t n, std::size_t s) {
  std::vector<VertexId> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<VertexId>(i);
  for (std::size_t i = 0; i < s; ++i) {
    std::swap(pool[i], pool[i + draw(rng, n - i)]);
  }
  pool.resize(s);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

Instance parse_instance(const std::string &text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::vector<std::pair<std::size_t, std::string>> records;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '%') continue;
    records.emplace_back(line, raw);
  }
  if (records.empty()) throw Error("line 1: missing header");

  const auto header = numbers(records[0].second, records[0].first);
  if (header.size() < 2 || header.size() > 3) fail(records[0].first, "header must be 'm n [fmt]'");
  if (header.size() == 3 && header[2] != 0) fail(records[0].first, "weighted formats are not supported");
  const std::size_t m = header[0];
  const std::size_t n = header[1];
  auto record = [&](std::size_t i, const std::string &what) -> const std::pair<std::size_t, std::string> & {
    if (i >= records.size()) fail(records.back().first + 1, "unexpected end of input, expected " + what);
    return records[i];
  };

  std::vector<std::vector<VertexId>> edges;
  for (std::size_t j = 0; j < m; ++j) {
    const auto &[ln, body] = record(1 + j, "edge line " + std::to_string(j + 1) + " of " + std::to_string(m));
    if (body.find_first_of("TC") != std::string::npos) {
      fail(ln, "expected edge line " + std::to_string(j + 1) + " of " + std::to_string(m));
    }
    const auto ids = numbers(body, ln);
    if (ids.size() < 2) fail(ln, "an edge needs at least two vertices");
    std::vector<VertexId> e;
    for (auto v : ids) {
      if (v < 1 || v > n) fail(ln, "vertex index " + std::to_string(v) + " outside 1.." + std::to_string(n));
      e.push_back(static_cast<VertexId>(v - 1));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) fail(ln, "duplicate vertex in an edge");
    edges.push_back(std::move(e));
  }

  const auto &[tl, tbody] = record(1 + m, "terminal line");
  std::istringstream ts(tbody);
  std::string tag;
  ts >> tag;
  if (tag != "T") fail(tl, "expected terminal line 'T ...'");
  std::string rest;
  std::getline(ts, rest);
  const auto tids = numbers(rest, tl);
  if (tids.empty()) fail(tl, "empty terminal line");
  VertexSet terminals;
  for (auto t : tids) {
    if (t < 1 || t > n) fail(tl, "terminal index " + std::to_string(t) + " outside 1.." + std::to_string(n));
    terminals.push_back(static_cast<VertexId>(t - 1));
  }
  std::sort(terminals.begin(), terminals.end());
  if (std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end()) fail(tl, "duplicate terminal");

  const auto &[cl, cbody] = record(2 + m, "budget line");
  std::istringstream cs(cbody);
  cs >> tag;
  if (tag != "C") fail(cl, "expected budget line 'C c'");
  std::getline(cs, rest);
  const auto cval = numbers(rest, cl);
  if (cval.size() != 1 || cval[0] > 64) fail(cl, "budget line must hold one integer in 0..64");
  if (records.size() > m + 3) fail(records[m + 3].first, "unexpected trailing content");

  Instance inst{Hypergraph::from_lists(n, edges), std::move(terminals), static_cast<std::uint32_t>(cval[0])};
  inst.validate();
  return inst;
}

Instance read_instance_file(const std::string &path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const Instance &inst) {
  const auto &g = inst.graph;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (g.vertices()[i] != i) throw Error("serialization needs vertices 0..n-1");
  }
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    if (g.edges()[j].id != j) throw Error("serialization needs edge ids 0..m-1");
  }
  std::ostringstream out;
  out << g.num_edges() << ' ' << g.num_vertices() << '\n';
  for (const auto &e : g.edges()) {
    for (std::size_t i = 0; i < e.vertices.size(); ++i) out << (i ? " " : "") << e.vertices[i] + 1;
    out << '\n';
  }
  out << 'T';
  for (VertexId t : inst.terminals) out << ' ' << t + 1;
  out << "\nC " << inst.budget << '\n';
  return out.str();
}

Instance generate_random(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t r, std::size_t k,
                         std::uint32_t c) {
  if (n < 2) throw Error("generator needs n >= 2");
  if (r < 2) throw Error("generator needs r >= 2");
  if (k < 1 || k > n) throw Error("generator needs 1 <= k <= n");
  const std::size_t rr = std::min(r, n);
  if (m * (rr - 1) < n - 1) throw Error("m edges of rank r cannot connect n vertices");
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 10000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t size = 2 + draw(rng, rr - 1);
      edges.push_back(sample(rng, n, size));
    }
    Hypergraph g = Hypergraph::from_lists(n, edges);
    if (!is_connected(g)) continue;
    VertexSet terminals = sample(rng, n, k);
    return Instance{std::move(g), std::move(terminals), c};
  }
  throw Error("no connected sample within the retry limit");
}

}  // namespace hypermim
