#pragma once

#include "pfcrn/network.hpp"
#include "pfcrn/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pfcrn {

// One mass-action transition: intensity = coeff * rate of `reaction`.
struct TransitionEvent {
  std::size_t from = 0;  // state index within the component
  std::size_t to = 0;
  std::size_t reaction = 0;
  Integer coeff;  // x!/(x - nu)!, always positive here
};

struct ComponentStructureFlags {
  bool is_full_simplex = false;  // states are exactly {x : sum x = level}
  bool is_positive = false;      // every reaction fires somewhere in it
  bool theorem_hypothesis_met = false;
};

struct IrreducibleComponent {
  std::int64_t level = 0;  // w.x for the canonical conservation vector w
  std::vector<State> states;  // lexicographically descending
  std::vector<TransitionEvent> transitions;
  ComponentStructureFlags flags;

  std::size_t size() const { return states.size(); }
  // Position of x in states, npos when absent.
  std::size_t index_of(const State& x) const;
};

struct NotInComponent {
  State seed;
  std::vector<IrreducibleComponent> absorbing;  // closed classes reachable from seed
};

// Falling factorial prod_i x_i (x_i - 1) ... (x_i - nu_i + 1), zero when x < nu.
Integer propensity(const ReactionNetwork& net, const Reaction& r, const State& x);

// Forward closure of seed. Throws InvalidArgument for a non-conservative
// network or a seed of the wrong dimension.
std::variant<IrreducibleComponent, NotInComponent> enumerate_component(
    const ReactionNetwork& net, const State& seed);

// All states x >= 0 with w.x = level, lexicographically descending.
std::vector<State> level_states(const std::vector<std::int64_t>& weights, std::int64_t level);

// Every closed communicating class among the states of one level, plus the
// states that belong to none of them.
struct LevelDecomposition {
  std::int64_t level = 0;
  std::vector<IrreducibleComponent> components;
  std::vector<State> transient;
};

LevelDecomposition decompose_level(const ReactionNetwork& net, std::int64_t level);

// Integer weights of the canonical conservation vector; throws InvalidArgument
// when the network is not conservative.
std::vector<std::int64_t> level_weights(const ReactionNetwork& net);

struct LevelProfile {
  std::int64_t level = 0;
  ComponentStructureFlags flags;
  std::size_t component_count = 0;
  std::size_t transient_count = 0;
};

struct IndexProfile {
  std::optional<std::int64_t> q;  // least l with a full-simplex component at every l..l_max
  std::vector<LevelProfile> per_level;
  std::vector<std::string> caveats;
};

// Requires total-count conservation (throws InvalidArgument otherwise) and
// l_max >= 2.
IndexProfile index_profile(const ReactionNetwork& net, std::int64_t l_max = 6);

}  // namespace pfcrn
