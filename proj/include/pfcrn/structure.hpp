#pragma once

#include "pfcrn/network.hpp"
#include "pfcrn/rational.hpp"

#include <optional>
#include <vector>

namespace pfcrn {

enum class Reversibility { reversible, weakly_reversible, non_weakly_reversible };

const char* to_string(Reversibility r);

struct StructureReport {
  std::size_t stoich_dim = 0;
  std::size_t linkage_count = 0;
  std::size_t deficiency = 0;
  std::optional<std::vector<Rational>> conservation;
  Reversibility reversibility = Reversibility::reversible;
};

// dim span{nu' - nu}.
std::size_t stoich_subspace_dim(const ReactionNetwork& net);

// Connected components of the undirected reaction graph. Each class lists
// complex indices in increasing order; classes are ordered by first member.
std::vector<std::vector<std::size_t>> linkage_classes(const ReactionNetwork& net);

std::size_t deficiency(const ReactionNetwork& net);

// A strictly positive w with (nu' - nu).w = 0 for every reaction, or nullopt
// when none exists. The vector returned is the sum of the primitive integer
// extreme rays of the cone of nonnegative conservation laws, so it is
// canonical and integral: (1,...,1) for networks that conserve total count,
// (1,1,2,1) for S+E <-> ES <-> P+E.
std::optional<std::vector<Rational>> conservation_vector(const ReactionNetwork& net);

// Extreme rays of {w >= 0 : (nu' - nu).w = 0}, primitive integer vectors.
std::vector<std::vector<Rational>> conservation_rays(const ReactionNetwork& net);

// True when every reaction preserves the total molecule count.
bool conserves_total_count(const ReactionNetwork& net);

Reversibility reversibility_class(const ReactionNetwork& net);

StructureReport analyze_structure(const ReactionNetwork& net);

}  // namespace pfcrn
