#ifndef HYPERMIM_INSTANCE_IO_H_
#define HYPERMIM_INSTANCE_IO_H_

#include <cstdint>
#include <string>

#include "hypermim/hypergraph.h"

namespace hypermim {

// Text format, one record per line, '%' starts a comment line:
//   m n [fmt]        fmt must be 0 when present
//   v1 v2 ...        m edge lines, 1-indexed, at least two distinct vertices
//   T t1 t2 ...      at least one terminal
//   C c
// Vertex i of the file becomes vertex i-1, edge line j becomes edge j-1.
Instance parse_instance(const std::string &text);
Instance read_instance_file(const std::string &path);

// Requires vertices 0..n-1 and edge ids 0..m-1.
std::string serialize_instance(const Instance &inst);

// Deterministic for a fixed seed. Edge sizes are uniform in [2, min(r, n)];
// a draw is repeated until the hypergraph is connected.
Instance generate_random(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t r, std::size_t k,
                         std::uint32_t c);

}  // namespace hypermim

#endif  // HYPERMIM_INSTANCE_IO_H_
