#pragma once

#include "pfcrn/network.hpp"
#include "pfcrn/rational.hpp"

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace pfcrn {

// Positive rational value for every rate symbol, in declaration order.
struct RateAssignment {
  std::vector<Rational> values;

  const Rational& operator[](std::size_t i) const { return values[i]; }
  bool operator==(const RateAssignment&) const = default;
};

// "a=1,b=3/2": every symbol exactly once, values positive. Throws
// InvalidArgument naming the offending symbol.
RateAssignment parse_rates(const ReactionNetwork& net, std::string_view text);

std::string format_rates(const ReactionNetwork& net, const RateAssignment& a);

// Rates p/q with 1 <= p, q <= height.
RateAssignment random_rates(const ReactionNetwork& net, std::mt19937_64& rng, int height = 20);

}  // namespace pfcrn
