#pragma once

// Kernel generator by evaluation and sparse interpolation. Null vectors of
// A(kappa) are computed modulo word-size primes; the polynomial vector is
// recovered variable by variable (Zippel), lifted by Chinese remaindering and
// rational reconstruction, and returned unnormalized. The caller verifies.

#include "pfcrn/kernel.hpp"

#include <cstdint>
#include <vector>

namespace pfcrn::detail {

struct InterpolationLimits {
  std::size_t max_terms = 0;    // per entry; 0 = unlimited
  std::uint64_t max_work = 0;   // modular multiply-adds; 0 = unlimited
  unsigned max_primes = 12;
};

struct InterpolationResult {
  std::vector<RatePoly> entries;  // integer coefficients, common content removed
  std::uint64_t work = 0;
  unsigned primes = 0;
};

// Throws BudgetExceeded when a limit is reached and InvariantViolation when
// the generic rank of A is not m - 1 or every attempt degenerates.
InterpolationResult interpolate_kernel(const MasterMatrix& a, const InterpolationLimits& limits);

}  // namespace pfcrn::detail
