#pragma once

#include "pfcrn/kernel.hpp"
#include "pfcrn/network.hpp"
#include "pfcrn/poly.hpp"
#include "pfcrn/state_space.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace pfcrn {

// pi_level(state)
struct PiRef {
  std::int64_t level = 0;
  State state;

  auto operator<=>(const PiRef&) const = default;
};

// One compatibility relation lhs - rhs between stationary values on
// consecutive simplex levels.
//
//   kind a: pi_i(x + e_j - e_k) pi_{i+1}(y) - pi_{i+1}(y + e_j - e_k) pi_i(x)
//           with x_j = y_j, x_k = y_k
//   kind b: pi_{i+1}(x + e_j) pi_{i+1}(y) pi_{i+2}(w + e_k) pi_i(z)
//         - pi_{i+1}(z + e_k) pi_{i+1}(w) pi_{i+2}(y + e_j) pi_i(x)
//           with x_j = y_j, z_k = w_k
struct RelationInstance {
  enum class Kind { a, b };

  Kind kind = Kind::a;
  std::int64_t base_level = 0;
  State x, y, z, w;  // z and w unused for kind a
  std::size_t j = 0, k = 0;

  std::vector<PiRef> lhs() const;
  std::vector<PiRef> rhs() const;
  // Highest level touched: base + 1 (kind a) or base + 2 (kind b).
  std::int64_t top_level() const { return base_level + (kind == Kind::a ? 1 : 2); }
  bool operator==(const RelationInstance&) const = default;
};

// Instances for n species at base level i, deduplicated up to swapping the
// two sides, degenerate ones (both sides the same multiset) dropped. Order is
// deterministic.
std::vector<RelationInstance> enumerate_relations_a(std::size_t n, std::int64_t i);
std::vector<RelationInstance> enumerate_relations_b(std::size_t n, std::int64_t i);

// Symbolic stationary vectors h_l on full-simplex levels.
class KernelTable {
 public:
  struct Level {
    IrreducibleComponent component;
    MasterMatrix matrix;
    KernelVector kernel;
    bool has_transients = false;
  };

  KernelTable() = default;
  // Computes levels from..to; every level must be a single full-simplex
  // component. Throws InvalidArgument otherwise, BudgetExceeded when a
  // kernel is too expensive.
  KernelTable(const ReactionNetwork& net, std::int64_t from, std::int64_t to,
              const KernelBudget& budget = {});

  void add(const ReactionNetwork& net, std::int64_t level, const KernelBudget& budget = {});
  // Accepts a level with one closed class plus transient states; pi() is zero
  // on the transient states. Used below the index set, where the stationary
  // distribution of the level is still unique.
  void add_with_transients(const ReactionNetwork& net, std::int64_t level,
                           const KernelBudget& budget = {});
  bool has(std::int64_t level) const { return levels_.count(level) != 0; }
  const Level& at(std::int64_t level) const;
  const RatePoly& pi(const PiRef& ref) const;
  std::int64_t max_level() const { return levels_.empty() ? 0 : levels_.rbegin()->first; }
  std::int64_t min_level() const { return levels_.empty() ? 0 : levels_.begin()->first; }
  std::size_t nvars() const { return nvars_; }
  // Distinct nonconstant kernel entries over all levels held.
  std::vector<const RatePoly*> positive_factors() const;

 private:
  std::map<std::int64_t, Level> levels_;
  std::size_t nvars_ = 0;
  RatePoly zero_;
};

struct RelationPolynomial {
  RatePoly value;                         // lhs - rhs after substitution
  std::optional<PrimitivePart> normal;    // absent when value is zero
};

RatePoly relation_value(const RelationInstance& rel, const KernelTable& kernels);
RelationPolynomial relation_to_rate_poly(const RelationInstance& rel, const KernelTable& kernels);

// lhs - rhs with the stationary values common to both sides cancelled. Equal
// to relation_value divided by a product of positive kernel entries, so both
// vanish at the same positive rates.
RatePoly reduced_relation_value(const RelationInstance& rel, const KernelTable& kernels);

// How one relation produced a generator:
//   relation_value = (flipped ? -1 : 1) * content * content_monomial * primitive
//   primitive      = generator * positive_cofactor (up to sign)
struct Provenance {
  RelationInstance instance;
  Rational content;
  Monomial content_monomial;
  bool flipped = false;
  RatePoly primitive;
  RatePoly positive_cofactor;  // product of factors of kernel entries
};

// A relation with every factor that cannot vanish at positive rates removed:
// monomials and common divisors with the (positive) kernel entries it was
// built from. A nonzero constant means the relation has no positive root.
struct Generator {
  RatePoly poly;  // primitive canonical form
  SignSummary sign = SignSummary::zero;
  std::vector<Provenance> provenance;
};

struct PositiveSplit {
  RatePoly kept;     // canonical; constant 1 when nothing can vanish
  RatePoly removed;  // product of the dropped factors, canonical
};

// Splits p into factors by variable contents and by gcds with the given
// polynomials, then drops every factor whose coefficients all share one sign
// (such a factor has no root in the positive orthant).
PositiveSplit strip_positive_factors(const RatePoly& p,
                                     const std::vector<const RatePoly*>& splitters);

struct IdealOptions {
  // Extra polynomials tried as divisors when splitting generators, such as
  // binomials known to cut out the same positive locus.
  std::vector<RatePoly> split_hints;
};

struct GeneratorSet {
  std::int64_t level = 0;
  std::size_t relation_count = 0;
  std::size_t zero_relation_count = 0;
  std::vector<Generator> generators;  // in order of first appearance

  const Generator* find(const RatePoly& canonical_poly) const;
};

// Relations whose top level is at most j and whose base level is at least q.
// `kernels` must cover q..j.
GeneratorSet ideal_level(const ReactionNetwork& net, const KernelTable& kernels, std::int64_t q,
                         std::int64_t j, const IdealOptions& options = {});

// Convenience form computing q and the kernels itself.
GeneratorSet ideal_level(const ReactionNetwork& net, std::int64_t j, const KernelBudget& budget = {});

struct ScanReport {
  std::int64_t q = 1;
  std::vector<std::int64_t> levels;
  std::vector<std::size_t> new_generator_counts;  // parallel to levels
  std::optional<std::int64_t> first_nonzero_level;
  std::size_t stable_suffix_length = 0;
  std::vector<GeneratorSet> sets;  // parallel to levels
};

// Generator sets for j = q..j_max, with novelty counted by canonical form.
ScanReport stabilization_scan(const ReactionNetwork& net, const KernelTable& kernels,
                              std::int64_t q, std::int64_t j_max, const IdealOptions& options = {});

}  // namespace pfcrn
