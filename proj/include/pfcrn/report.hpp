#pragma once

// JSON and text renderings of every analysis, and the command runner shared by
// the C API and the command-line tool.

#include "pfcrn/classifier.hpp"
#include "pfcrn/kernel.hpp"
#include "pfcrn/network.hpp"
#include "pfcrn/numeric.hpp"
#include "pfcrn/product_ideal.hpp"
#include "pfcrn/rates.hpp"
#include "pfcrn/state_space.hpp"
#include "pfcrn/structure.hpp"

#include "json.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pfcrn {

using Json = nlohmann::ordered_json;

// "lambda1" -> "λ₁", "alpha" -> "α"; other names unchanged.
std::string display_symbol(std::string_view name);

// Factored display: content, monomial, then the primitive part in
// parentheses, e.g. "3α(2α+β)". Symbols are ordered by name.
std::string display(const RatePoly& p, std::span<const std::string> symbols);

std::string format_state(const State& x);

Json structure_json(const StructureReport& s);
Json instance_json(const ReactionNetwork& net, const RelationInstance& r);
Json component_json(const ReactionNetwork& net, const IrreducibleComponent& c);
Json kernel_json(const ReactionNetwork& net, const IrreducibleComponent& c, const KernelVector& h);
Json ideal_json(const ReactionNetwork& net, const GeneratorSet& g);
Json certificate_json(const ReactionNetwork& net, const Certificate& c);
Json classification_json(const ReactionNetwork& net, const ClassificationReport& r,
                         bool with_timings);
Json fit_json(const ReactionNetwork& net, const FitResult& fit,
              const std::optional<std::vector<ShapeLabel>>& shapes);

enum class Command { info, components, kernel, ideal, classify, verify, fit };
enum class Format { text, json };

struct RunConfig {
  Command command = Command::info;
  std::int64_t levels = 6;
  std::optional<std::int64_t> level;  // kernel and ideal: a single level
  std::optional<RateAssignment> rates;
  std::vector<RateAssignment> witness_rates;
  std::uint64_t seed = 1;
  Format format = Format::text;
  bool timings = false;
};

// Output of one command, newline-terminated. Throws InvalidArgument for
// unusable options, plus whatever the analysis throws.
std::string run(const ReactionNetwork& net, const RunConfig& config);

}  // namespace pfcrn
