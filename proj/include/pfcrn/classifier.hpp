#pragma once

// Type I / N / E classification: product form for all rates, for none, or
// for some but not all. Every verdict carries the certificates it rests on.

#include "pfcrn/kernel.hpp"
#include "pfcrn/network.hpp"
#include "pfcrn/numeric.hpp"
#include "pfcrn/poly.hpp"
#include "pfcrn/product_ideal.hpp"
#include "pfcrn/rates.hpp"
#include "pfcrn/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pfcrn {

struct Certificate {
  enum class Kind {
    deficiency_zero_wr,          // deficiency 0 and weakly reversible
    no_positive_root,            // single-sign generator, or single-sign resultant of two
    complex_balance_witness,     // rates at which the network is complex balanced
    relation_violation_witness,  // rates with a nonzero relation
    bounded_evidence,            // relations vanish through `level` (at `rates` if given)
  };

  Kind kind = Kind::deficiency_zero_wr;
  std::int64_t level = 0;
  std::optional<RatePoly> polynomial;
  std::vector<RatePoly> inputs;           // resultant: linear generator, other generator
  std::optional<std::size_t> eliminated;  // resultant: symbol solved for
  std::optional<RateAssignment> rates;
  std::optional<RelationInstance> relation;
  std::optional<Rational> residual;
};

const char* to_string(Certificate::Kind k);

// Certificate when p has coefficients of one sign; nullopt otherwise.
// Throws InvalidArgument for p = 0.
std::optional<Certificate> no_positive_root_certificate(const RatePoly& p);

// Solves the generator `linear` (degree one in `var`, with a single-sign
// coefficient) for var and substitutes into `other`. Certificate when the
// resultant, stripped of single-sign factors, has no positive root.
std::optional<Certificate> composite_certificate(const RatePoly& linear, const RatePoly& other,
                                                 std::size_t var);

// Tries every usable (generator, symbol, generator) triple.
std::optional<Certificate> find_composite_certificate(const std::vector<Generator>& gens);

struct ComplexBalanceResult {
  bool balanced = false;
  std::optional<std::vector<Rational>> point_c;  // existence only: always empty
  std::vector<Rational> tree_constants;          // per complex
  std::vector<std::string> caveats;
};

// Per linkage class, K_eta = sum over spanning trees directed into eta of the
// product of their rates (a principal minor of the class Laplacian).
std::vector<Rational> tree_constants(const ReactionNetwork& net, const RateAssignment& a);
std::vector<RatePoly> tree_constants(const ReactionNetwork& net);

// Integer basis of {v : sum_eta v_eta y_eta = 0, sum over each linkage class = 0}.
std::vector<std::vector<Integer>> balance_lattice(const ReactionNetwork& net);

ComplexBalanceResult complex_balance(const ReactionNetwork& net, const RateAssignment& a);

// prod K^{v+} - prod K^{v-} for each lattice vector, common factors removed.
// Their common positive zeros are the complex-balanced rates. Empty unless
// weakly reversible.
std::vector<RatePoly> complex_balance_conditions(const ReactionNetwork& net);

// Integer rates forming a circulation on every linkage class, which balances
// the network at c = (1, ..., 1). Nullopt unless weakly reversible.
std::optional<RateAssignment> complex_balanced_rates(const ReactionNetwork& net);

struct WitnessReport {
  bool product_form_consistent = false;
  std::int64_t q = 1;
  std::int64_t through = 0;
  std::optional<Violation> violation;
};

// All relation residuals at a through l_max (requires a full-simplex index set).
WitnessReport witness_check(const ReactionNetwork& net, const RateAssignment& a,
                            std::int64_t l_max);

enum class Verdict { I, N, E, inconclusive };

const char* to_string(Verdict v);

struct Certainty {
  bool certified = false;
  std::int64_t level = 0;  // meaningful when not certified

  std::string str() const;
};

struct ClassifyOptions {
  std::int64_t j_max = 6;
  std::vector<RateAssignment> witness_rates;
  std::uint64_t seed = 1;
  KernelBudget budget{200000, 500'000'000};
  int violation_attempts = 20;
  int numeric_points = 3;
  // Levels whose largest kernel entry has more terms stay out of the
  // symbolic relation scan.
  std::size_t scan_term_limit = 24;
};

struct ClassificationReport {
  Verdict verdict = Verdict::inconclusive;
  Certainty certainty;
  std::vector<Certificate> certificates;
  std::vector<std::string> caveats;
  StructureReport structure;
  std::optional<std::int64_t> q;
  std::int64_t levels_computed = 0;  // highest level scanned symbolically
  std::vector<std::pair<std::int64_t, std::size_t>> generator_counts;  // (level, count)
  std::map<std::string, double> timings;  // seconds
};

ClassificationReport classify(const ReactionNetwork& net, const ClassifyOptions& options = {});

// Independent re-check of one certificate.
bool verify_certificate(const ReactionNetwork& net, const Certificate& cert);

}  // namespace pfcrn
