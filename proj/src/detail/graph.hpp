#pragma once

#include <cstddef>
#include <vector>

namespace pfcrn::detail {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Tarjan's algorithm, iterative. comp[v] is the component id of v; ids are in
// reverse topological order of the condensation.
struct Sccs {
  std::vector<std::size_t> comp;
  std::size_t count = 0;
};

Sccs strongly_connected(const Adjacency& out);

// Components of the condensation with no edge leaving them.
std::vector<bool> closed_components(const Adjacency& out, const Sccs& s);

}  // namespace pfcrn::detail
