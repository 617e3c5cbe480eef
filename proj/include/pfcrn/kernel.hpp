#pragma once

#include "pfcrn/network.hpp"
#include "pfcrn/poly.hpp"
#include "pfcrn/state_space.hpp"

#include <span>
#include <vector>

namespace pfcrn {

// A(kappa) on one component, in the component's state order. Entry (k, j)
// with k != j is the total intensity of the jump c_j -> c_k; the diagonal
// makes every column sum vanish.
struct MasterMatrix {
  std::int64_t level = 0;
  std::size_t m = 0;
  std::vector<RatePoly> entries;  // row-major m x m

  const RatePoly& at(std::size_t k, std::size_t j) const { return entries[k * m + j]; }
  RatePoly& at(std::size_t k, std::size_t j) { return entries[k * m + j]; }
};

MasterMatrix master_matrix(const ReactionNetwork& net, const IrreducibleComponent& comp);

// Limits on one kernel computation: the number of terms any entry may reach,
// and the arithmetic work (term products during exact elimination, modular
// multiply-adds during interpolation). Zero disables a limit.
struct KernelBudget {
  std::size_t max_terms = 200000;
  std::uint64_t max_work = 0;
};

// Normalized generator h of ker A(kappa): entries homogeneous of one degree,
// with positive integer coefficients and no common factor.
struct KernelVector {
  std::int64_t level = 0;
  std::uint32_t degree = 0;
  std::vector<RatePoly> entries;
  std::uint64_t work = 0;  // arithmetic work spent, as counted by KernelBudget
};

// Small chains go through fraction-free Gauss-Jordan elimination. When that
// grows past a fixed size, the vector is instead interpolated from null
// vectors of A at points modulo word-size primes and lifted to the rationals.
// Either way the result is normalized and checked against A exactly.
// Throws InvariantViolation when rank A != m-1 or a normalized entry is not
// positive, BudgetExceeded when a limit is hit.
KernelVector kernel_vector(const MasterMatrix& a, const KernelBudget& budget = {});

// Exact probability vector h(a) / sum h(a).
std::vector<Rational> stationary_eval(const KernelVector& h, std::span<const Rational> rates);

bool column_sums_vanish(const MasterMatrix& a);

// A h == 0 as polynomials.
bool annihilates(const MasterMatrix& a, const KernelVector& h);

}  // namespace pfcrn
