#include "detail/graph.hpp"

#include <algorithm>
#include <limits>

namespace pfcrn::detail {

Sccs strongly_connected(const Adjacency& out) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = out.size();
  std::vector<std::size_t> index(n, unset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  Sccs res;
  res.comp.assign(n, unset);
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < out[f.v].size()) {
        std::size_t w = out[f.v][f.edge++];
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          res.comp[w] = res.count;
        } while (w != v);
        ++res.count;
      }
    }
  }
  return res;
}

std::vector<bool> closed_components(const Adjacency& out, const Sccs& s) {
  std::vector<bool> closed(s.count, true);
  for (std::size_t v = 0; v < out.size(); ++v)
    for (auto w : out[v])
      if (s.comp[w] != s.comp[v]) closed[s.comp[v]] = false;
  return closed;
}

}  // namespace pfcrn::detail
