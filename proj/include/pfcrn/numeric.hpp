#pragma once

// Exact stationary distributions at concrete rates, computed straight from the
// reactions and never from the symbolic kernels, plus the checks built on
// them: relation residuals, the level-by-level product-form fit and shape
// labels for the fitted one-species factors.

#include "pfcrn/network.hpp"
#include "pfcrn/product_ideal.hpp"
#include "pfcrn/rates.hpp"
#include "pfcrn/state_space.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pfcrn {

// Probability vector on comp.states, exact. Throws InvariantViolation if the
// solve does not give a one-dimensional positive kernel.
std::vector<Rational> exact_stationary(const ReactionNetwork& net, const RateAssignment& a,
                                       const IrreducibleComponent& comp);

struct LevelDistribution {
  IrreducibleComponent component;
  std::vector<Rational> pi;

  // Probability of x, zero for states outside the component.
  Rational at(const State& x) const;
};

// The unique closed class of the level. Throws InvalidArgument when the level
// has none or several.
LevelDistribution exact_stationary(const ReactionNetwork& net, const RateAssignment& a,
                                   std::int64_t level);

struct Violation {
  RelationInstance instance;
  Rational residual;  // lhs - rhs on probabilities
};

struct ResidualLevel {
  std::int64_t level = 0;  // top level of the relations counted here
  std::size_t checked = 0;
  std::size_t nonzero = 0;
};

struct ResidualReport {
  std::int64_t q = 1;
  std::int64_t through = 0;
  std::vector<ResidualLevel> levels;
  std::optional<Violation> first_violation;

  bool all_zero() const { return !first_violation; }
};

// Every kind-a relation, and every kind-b relation pairing a triple with the
// first triple of its level, whose top level lies in q+1..j and whose base
// level is at least q. The kind-b relations of a
// level all vanish exactly when these do, since the stationary values are
// positive. Levels q..j must be full simplices.
ResidualReport relation_residuals(const ReactionNetwork& net, const RateAssignment& a,
                                  std::int64_t q, std::int64_t j, bool stop_at_first = false);

// Same with q taken from the index profile.
ResidualReport relation_residuals(const ReactionNetwork& net, const RateAssignment& a,
                                  std::int64_t j);

struct FitFailure {
  std::int64_t level = 0;
  State first;   // states compared
  State second;
  Rational residual;
};

struct FitResult {
  RateAssignment rates;
  std::vector<std::vector<Rational>> f_tables;  // [species][m], m = 0..l_max
  std::vector<Rational> z_values;               // [l - 1], l = 1..l_max
  std::int64_t consistent_through = 0;
  std::optional<FitFailure> first_failure;
};

// Builds f_i level by level from f_i(0) = 1, f_i(1) = pi_1(e_i), Z_1 = 1 and
// checks that every choice defining Z_l agrees and that prod f_i / Z_l
// reproduces pi_l. Requires index q = 1.
FitResult product_form_fit(const ReactionNetwork& net, const RateAssignment& a,
                           std::int64_t l_max);

enum class Shape { g1, g2, g3, g4, unknown };

const char* to_string(Shape s);

// rho(m) = m f(m) / f(m - 1) = (a + b (m - 1)) / (c + d (m - 1)).
struct ShapeLabel {
  Shape shape = Shape::unknown;
  std::array<Rational, 4> params;  // a, b, c, d; g1 keeps rho in a with c = 1
};

// f(m) = f(0) / m! * prod_{l=1..m} rho(l) for the labeled parameters.
std::vector<Rational> shape_table(const ShapeLabel& label, const Rational& f0, std::size_t count);

// Label per species. Needs consistent_through >= 4.
std::vector<ShapeLabel> shape_classify(const FitResult& fit);

}  // namespace pfcrn
