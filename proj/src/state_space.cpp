#include "pfcrn/state_space.hpp"

#include "detail/graph.hpp"
#include "pfcrn/error.hpp"
#include "pfcrn/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace pfcrn {

namespace {

bool lex_greater(const State& a, const State& b) { return a > b; }

Integer binomial(std::int64_t n, std::int64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

State shifted(const State& x, const State& v) {
  State y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + v[i];
  return y;
}

std::int64_t weigh(const std::vector<std::int64_t>& w, const State& x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i];
  return s;
}

// States must already be sorted and closed under the listed transitions.
IrreducibleComponent build(const ReactionNetwork& net, std::vector<State> states,
                           std::int64_t level, bool unit_weights) {
  IrreducibleComponent comp;
  comp.level = level;
  comp.states = std::move(states);
  std::vector<bool> fired(net.reaction_count(), false);
  for (std::size_t s = 0; s < comp.states.size(); ++s) {
    for (std::size_t r = 0; r < net.reaction_count(); ++r) {
      const auto& rx = net.reactions()[r];
      Integer c = propensity(net, rx, comp.states[s]);
      if (c == 0) continue;
      std::size_t t = comp.index_of(shifted(comp.states[s], net.reaction_vector(rx)));
      if (t == std::string::npos)
        throw InvariantViolation("component is not closed under its transitions");
      comp.transitions.push_back({s, t, r, c});
      fired[r] = true;
    }
  }
  const auto n = static_cast<std::int64_t>(net.species_count());
  comp.flags.is_full_simplex =
      unit_weights && n > 0 && binomial(level + n - 1, n - 1) == comp.states.size();
  comp.flags.is_positive = std::all_of(fired.begin(), fired.end(), [](bool b) { return b; });
  comp.flags.theorem_hypothesis_met = comp.flags.is_full_simplex;
  return comp;
}

struct Closure {
  std::vector<State> states;
  detail::Adjacency out;
};

Closure explore(const ReactionNetwork& net, const State& seed) {
  Closure c;
  std::map<State, std::size_t> index;
  std::deque<std::size_t> queue;
  index[seed] = 0;
  c.states.push_back(seed);
  c.out.emplace_back();
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (const auto& r : net.reactions()) {
      if (propensity(net, r, c.states[s]) == 0) continue;
      State y = shifted(c.states[s], net.reaction_vector(r));
      auto [it, inserted] = index.emplace(y, c.states.size());
      if (inserted) {
        c.states.push_back(y);
        c.out.emplace_back();
        queue.push_back(it->second);
      }
      c.out[s].push_back(it->second);
    }
  }
  return c;
}

std::vector<IrreducibleComponent> closed_classes(const ReactionNetwork& net,
                                                 const std::vector<State>& states,
                                                 const detail::Adjacency& out,
                                                 const std::vector<std::int64_t>& w,
                                                 std::vector<State>* transient) {
  auto scc = detail::strongly_connected(out);
  auto closed = detail::closed_components(out, scc);
  std::vector<std::vector<State>> groups(scc.count);
  for (std::size_t v = 0; v < states.size(); ++v) {
    if (closed[scc.comp[v]])
      groups[scc.comp[v]].push_back(states[v]);
    else if (transient)
      transient->push_back(states[v]);
  }
  bool unit = std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 1; });
  std::vector<IrreducibleComponent> res;
  for (auto& g : groups) {
    if (g.empty()) continue;
    std::sort(g.begin(), g.end(), lex_greater);
    std::int64_t level = weigh(w, g.front());
    res.push_back(build(net, std::move(g), level, unit));
  }
  std::sort(res.begin(), res.end(),
            [](const auto& a, const auto& b) { return a.states.front() > b.states.front(); });
  if (transient) std::sort(transient->begin(), transient->end(), lex_greater);
  return res;
}

void enumerate(const std::vector<std::int64_t>& w, std::size_t i, std::int64_t left, State& x,
               std::vector<State>& out) {
  if (i + 1 == w.size()) {
    if (left % w[i] == 0) {
      x[i] = static_cast<std::int32_t>(left / w[i]);
      out.push_back(x);
    }
    return;
  }
  for (std::int64_t k = left / w[i]; k >= 0; --k) {
    x[i] = static_cast<std::int32_t>(k);
    enumerate(w, i + 1, left - k * w[i], x, out);
  }
}

}  // namespace

std::size_t IrreducibleComponent::index_of(const State& x) const {
  auto it = std::lower_bound(states.begin(), states.end(), x, lex_greater);
  if (it == states.end() || *it != x) return std::string::npos;
  return static_cast<std::size_t>(it - states.begin());
}

Integer propensity(const ReactionNetwork& net, const Reaction& r, const State& x) {
  const auto& nu = net.reactant(r).coeffs;
  Integer c = 1;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (x[i] < nu[i]) return 0;
    for (std::int32_t t = 0; t < nu[i]; ++t) c *= x[i] - t;
  }
  return c;
}

std::vector<std::int64_t> level_weights(const ReactionNetwork& net) {
  if (conserves_total_count(net)) return std::vector<std::int64_t>(net.species_count(), 1);
  auto w = conservation_vector(net);
  if (!w) throw InvalidArgument("network is not conservative; components may be infinite");
  std::vector<std::int64_t> out;
  for (const auto& q : *w) out.push_back(q.get_num().get_si());
  return out;
}

std::variant<IrreducibleComponent, NotInComponent> enumerate_component(
    const ReactionNetwork& net, const State& seed) {
  if (seed.size() != net.species_count())
    throw InvalidArgument("state has " + std::to_string(seed.size()) + " coordinates, network has " +
                          std::to_string(net.species_count()) + " species");
  if (std::any_of(seed.begin(), seed.end(), [](std::int32_t v) { return v < 0; }))
    throw InvalidArgument("state has a negative coordinate");
  auto w = level_weights(net);
  Closure c = explore(net, seed);
  auto comps = closed_classes(net, c.states, c.out, w, nullptr);
  if (comps.size() == 1 && comps.front().size() == c.states.size()) return std::move(comps.front());
  return NotInComponent{seed, std::move(comps)};
}

std::vector<State> level_states(const std::vector<std::int64_t>& weights, std::int64_t level) {
  std::vector<State> out;
  if (weights.empty() || level < 0) return out;
  State x(weights.size(), 0);
  enumerate(weights, 0, level, x, out);
  return out;
}

LevelDecomposition decompose_level(const ReactionNetwork& net, std::int64_t level) {
  auto w = level_weights(net);
  LevelDecomposition d;
  d.level = level;
  auto states = level_states(w, level);
  std::map<State, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
  detail::Adjacency out(states.size());
  for (std::size_t s = 0; s < states.size(); ++s)
    for (const auto& r : net.reactions()) {
      if (propensity(net, r, states[s]) == 0) continue;
      out[s].push_back(index.at(shifted(states[s], net.reaction_vector(r))));
    }
  d.components = closed_classes(net, states, out, w, &d.transient);
  return d;
}

IndexProfile index_profile(const ReactionNetwork& net, std::int64_t l_max) {
  if (!conserves_total_count(net))
    throw InvalidArgument("index profile needs total-count conservation w = (1,...,1)");
  if (l_max < 2) throw InvalidArgument("l_max must be at least 2");
  IndexProfile prof;
  for (std::int64_t l = 1; l <= l_max; ++l) {
    auto d = decompose_level(net, l);
    LevelProfile lp;
    lp.level = l;
    lp.component_count = d.components.size();
    lp.transient_count = d.transient.size();
    if (d.components.size() == 1) lp.flags = d.components.front().flags;
    prof.per_level.push_back(lp);
  }
  for (auto it = prof.per_level.rbegin(); it != prof.per_level.rend(); ++it) {
    if (!it->flags.is_full_simplex) break;
    prof.q = it->level;
  }
  for (const auto& lp : prof.per_level) {
    if (prof.q && lp.level >= *prof.q) break;
    if (lp.flags.is_full_simplex) continue;
    prof.caveats.push_back("level " + std::to_string(lp.level) + " is not one irreducible simplex: " +
                           std::to_string(lp.component_count) + " closed class(es), " +
                           std::to_string(lp.transient_count) + " state(s) outside them");
  }
  if (!prof.q)
    prof.caveats.push_back("level " + std::to_string(l_max) +
                           " is not a full-simplex component; index set undefined");
  return prof;
}

}  // namespace pfcrn
