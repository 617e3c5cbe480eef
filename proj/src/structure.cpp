#include "pfcrn/structure.hpp"

#include "detail/graph.hpp"
#include "detail/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace pfcrn {

const char* to_string(Reversibility r) {
  switch (r) {
    case Reversibility::reversible: return "reversible";
    case Reversibility::weakly_reversible: return "weakly_reversible";
    case Reversibility::non_weakly_reversible: return "non_weakly_reversible";
  }
  return "?";
}

namespace {

detail::Matrix stoichiometry(const ReactionNetwork& net) {
  detail::Matrix m;
  for (const auto& r : net.reactions()) {
    State v = net.reaction_vector(r);
    m.emplace_back(v.begin(), v.end());
  }
  return m;
}

std::vector<std::size_t> support(const std::vector<Rational>& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

}  // namespace

std::size_t stoich_subspace_dim(const ReactionNetwork& net) {
  return detail::rank(stoichiometry(net), net.species_count());
}

std::vector<std::vector<std::size_t>> linkage_classes(const ReactionNetwork& net) {
  const std::size_t c = net.complex_count();
  std::vector<std::size_t> parent(c);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& r : net.reactions()) {
    auto a = find(r.reactant), b = find(r.product);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> slot(c, c);
  for (std::size_t v = 0; v < c; ++v) {
    auto root = find(v);
    if (slot[root] == c) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(v);
  }
  return classes;
}

std::size_t deficiency(const ReactionNetwork& net) {
  return net.complex_count() - linkage_classes(net).size() - stoich_subspace_dim(net);
}

// Double description on the dual: start from the orthant's rays and cut with
// one hyperplane per reaction, keeping minimal-support combinations.
std::vector<std::vector<Rational>> conservation_rays(const ReactionNetwork& net) {
  const std::size_t n = net.species_count();
  std::vector<std::vector<Rational>> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  for (const auto& row : stoichiometry(net)) {
    std::vector<std::vector<Rational>> pos, neg, next;
    for (auto& g : rays) {
      Rational d = 0;
      for (std::size_t i = 0; i < n; ++i) d += row[i] * g[i];
      if (d > 0) pos.push_back(g);
      else if (d < 0) neg.push_back(g);
      else next.push_back(g);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Rational dp = 0, dq = 0;
        for (std::size_t i = 0; i < n; ++i) {
          dp += row[i] * p[i];
          dq += row[i] * q[i];
        }
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = dp * q[i] - dq * p[i];
        next.push_back(detail::primitive_integer(std::move(v)));
      }
    // Keep only minimal supports; equal minimal supports are proportional.
    std::vector<std::vector<Rational>> kept;
    for (std::size_t a = 0; a < next.size(); ++a) {
      auto sa = support(next[a]);
      bool redundant = false;
      for (std::size_t b = 0; b < next.size() && !redundant; ++b) {
        if (a == b) continue;
        auto sb = support(next[b]);
        bool subset = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
        if (subset && (sb.size() < sa.size() || b < a)) redundant = true;
      }
      if (!redundant) kept.push_back(next[a]);
    }
    rays = std::move(kept);
  }
  std::sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return x > y; });
  });
  return rays;
}

std::optional<std::vector<Rational>> conservation_vector(const ReactionNetwork& net) {
  const std::size_t n = net.species_count();
  if (n == 0) return std::nullopt;
  std::vector<Rational> w(n, Rational(0));
  for (const auto& ray : conservation_rays(net))
    for (std::size_t i = 0; i < n; ++i) w[i] += ray[i];
  for (const auto& x : w)
    if (x <= 0) return std::nullopt;
  return w;
}

bool conserves_total_count(const ReactionNetwork& net) {
  for (const auto& r : net.reactions()) {
    State v = net.reaction_vector(r);
    if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) != 0) return false;
  }
  return net.species_count() > 0;
}

Reversibility reversibility_class(const ReactionNetwork& net) {
  bool reversible = true;
  for (const auto& r : net.reactions()) {
    bool found = std::any_of(net.reactions().begin(), net.reactions().end(), [&](const Reaction& s) {
      return s.reactant == r.product && s.product == r.reactant;
    });
    if (!found) {
      reversible = false;
      break;
    }
  }
  if (reversible) return Reversibility::reversible;

  detail::Adjacency out(net.complex_count());
  for (const auto& r : net.reactions()) out[r.reactant].push_back(r.product);
  auto scc = detail::strongly_connected(out);
  for (const auto& cls : linkage_classes(net))
    for (auto c : cls)
      if (scc.comp[c] != scc.comp[cls.front()]) return Reversibility::non_weakly_reversible;
  return Reversibility::weakly_reversible;
}

StructureReport analyze_structure(const ReactionNetwork& net) {
  StructureReport rep;
  rep.stoich_dim = stoich_subspace_dim(net);
  rep.linkage_count = linkage_classes(net).size();
  rep.deficiency = net.complex_count() - rep.linkage_count - rep.stoich_dim;
  rep.conservation = conservation_vector(net);
  rep.reversibility = reversibility_class(net);
  return rep;
}

}  // namespace pfcrn
