#pragma once

// Text format for reaction networks (.crn):
//
//   network    := statement ((";" | newline) statement)*
//   statement  := complex ("->" | "<->") complex "[" rate ("," rate)? "]"
//   complex    := "0" | term ("+" term)*
//   term       := [positive-integer] identifier
//
// "->" takes exactly one rate symbol, "<->" exactly two (forward, backward).
// "#" starts a comment running to the end of the line. Species are numbered
// in order of first appearance.

#include "pfcrn/network.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pfcrn {

struct ParseDiagnostic {
  enum class Severity { error, warning };

  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, counted in code points
  std::string message;
  Severity severity = Severity::error;

  // "origin:line:col: severity: message"
  std::string format(std::string_view origin) const;
};

struct NetworkSource {
  std::string text;
  std::string origin = "<inline>";
};

struct ParseResult {
  std::optional<ReactionNetwork> network;  // empty iff some error was reported
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return network.has_value(); }
};

ParseResult parse_network(const NetworkSource& src);

// Canonical text: one "->" reaction per line in reaction order, complex terms
// in species order, no trailing newline.
std::string render_network(const ReactionNetwork& net);

// Same species order, same reactions in the same order with the same rate
// symbols.
bool structurally_identical(const ReactionNetwork& a, const ReactionNetwork& b);

}  // namespace pfcrn
