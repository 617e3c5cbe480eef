#include "pfcrn/pfcrn.h"

#include "pfcrn/error.hpp"
#include "pfcrn/parser.hpp"
#include "pfcrn/report.hpp"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct pfcrn_network {
  pfcrn::ReactionNetwork net;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

pfcrn_status fail(pfcrn_status st, std::string message) {
  last_error = std::move(message);
  return st;
}

template <class F>
pfcrn_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const pfcrn::InvalidArgument& e) {
    return fail(PFCRN_ERR_INVALID, e.what());
  } catch (const pfcrn::BudgetExceeded& e) {
    return fail(PFCRN_ERR_BUDGET, e.what());
  } catch (const pfcrn::InvariantViolation& e) {
    return fail(PFCRN_ERR_INVARIANT, e.what());
  } catch (const std::exception& e) {
    return fail(PFCRN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PFCRN_ERR_INTERNAL, "unknown error");
  }
}

pfcrn_status parse_into(const std::string& text, const std::string& origin,
                        pfcrn_network** network, char** diagnostics) {
  *network = nullptr;
  if (diagnostics) *diagnostics = nullptr;
  auto res = pfcrn::parse_network({text, origin});
  std::string diag;
  for (const auto& d : res.diagnostics) diag += d.format(origin) + "\n";
  if (diagnostics && !diag.empty()) *diagnostics = copy_out(diag);
  if (!res.ok()) {
    auto first = res.diagnostics.empty() ? std::string("parse failed")
                                         : res.diagnostics.front().format(origin);
    for (const auto& d : res.diagnostics)
      if (d.severity == pfcrn::ParseDiagnostic::Severity::error) {
        first = d.format(origin);
        break;
      }
    return fail(PFCRN_ERR_PARSE, first);
  }
  *network = new pfcrn_network{std::move(*res.network)};
  return PFCRN_OK;
}

std::vector<pfcrn::RateAssignment> parse_witnesses(const pfcrn::ReactionNetwork& net,
                                                   std::string_view text) {
  std::vector<pfcrn::RateAssignment> out;
  while (!text.empty()) {
    auto cut = text.find(';');
    auto part = text.substr(0, cut);
    if (!part.empty()) out.push_back(pfcrn::parse_rates(net, part));
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

}  // namespace

extern "C" {

const char* pfcrn_version(void) { return "1.0.0"; }

const char* pfcrn_status_string(pfcrn_status status) {
  switch (status) {
    case PFCRN_OK: return "ok";
    case PFCRN_ERR_PARSE: return "parse error";
    case PFCRN_ERR_IO: return "i/o error";
    case PFCRN_ERR_INVALID: return "invalid argument";
    case PFCRN_ERR_BUDGET: return "work budget exceeded";
    case PFCRN_ERR_INVARIANT: return "invariant violation";
    case PFCRN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pfcrn_last_error(void) { return last_error.c_str(); }

void pfcrn_options_init(pfcrn_options* options) {
  if (!options) return;
  *options = pfcrn_options{};
  options->levels = 6;
  options->seed = 1;
  options->format = PFCRN_FORMAT_TEXT;
}

pfcrn_status pfcrn_network_parse(const char* text, const char* origin, pfcrn_network** network,
                                 char** diagnostics) {
  if (!text || !network) return fail(PFCRN_ERR_INVALID, "null argument");
  return guarded([&] { return parse_into(text, origin ? origin : "<inline>", network, diagnostics); });
}

pfcrn_status pfcrn_network_load(const char* path, pfcrn_network** network, char** diagnostics) {
  if (!path || !network) return fail(PFCRN_ERR_INVALID, "null argument");
  *network = nullptr;
  if (diagnostics) *diagnostics = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(PFCRN_ERR_IO, std::string(path) + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return fail(PFCRN_ERR_IO, std::string(path) + ": read failed");
  return guarded([&] { return parse_into(ss.str(), path, network, diagnostics); });
}

void pfcrn_network_free(pfcrn_network* network) { delete network; }

size_t pfcrn_species_count(const pfcrn_network* network) {
  return network ? network->net.species_count() : 0;
}

size_t pfcrn_reaction_count(const pfcrn_network* network) {
  return network ? network->net.reaction_count() : 0;
}

pfcrn_status pfcrn_network_render(const pfcrn_network* network, char** out) {
  if (!network || !out) return fail(PFCRN_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(pfcrn::render_network(network->net) + "\n");
    return PFCRN_OK;
  });
}

pfcrn_status pfcrn_run(const pfcrn_network* network, pfcrn_command command,
                       const pfcrn_options* options, char** out) {
  if (!network || !out) return fail(PFCRN_ERR_INVALID, "null argument");
  *out = nullptr;
  pfcrn_options defaults;
  pfcrn_options_init(&defaults);
  const auto& o = options ? *options : defaults;
  return guarded([&] {
    if (command < PFCRN_CMD_INFO || command > PFCRN_CMD_FIT)
      return fail(PFCRN_ERR_INVALID, "unknown command");
    pfcrn::RunConfig cfg;
    cfg.command = static_cast<pfcrn::Command>(command);
    cfg.levels = o.levels;
    if (o.level) cfg.level = o.level;
    if (o.rates) cfg.rates = pfcrn::parse_rates(network->net, o.rates);
    if (o.witness_rates) cfg.witness_rates = parse_witnesses(network->net, o.witness_rates);
    cfg.seed = o.seed;
    cfg.format = o.format == PFCRN_FORMAT_JSON ? pfcrn::Format::json : pfcrn::Format::text;
    cfg.timings = o.timings != 0;
    *out = copy_out(pfcrn::run(network->net, cfg));
    return PFCRN_OK;
  });
}

void pfcrn_string_free(char* s) { std::free(s); }

}  // extern "C"
