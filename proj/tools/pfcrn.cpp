#include "pfcrn/pfcrn.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

struct Args {
  std::string input;
  std::int64_t levels = 6;
  std::int64_t level = 0;
  std::string rates;
  std::string witness;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string output;
  bool timings = false;
};

int exit_code(pfcrn_status st) {
  switch (st) {
    case PFCRN_OK: return 0;
    case PFCRN_ERR_INVARIANT:
    case PFCRN_ERR_INTERNAL: return 2;
    default: return 1;
  }
}

int execute(pfcrn_command command, const Args& args) {
  pfcrn_network* net = nullptr;
  char* diagnostics = nullptr;
  auto st = pfcrn_network_load(args.input.c_str(), &net, &diagnostics);
  if (diagnostics) {
    std::cerr << diagnostics;
    pfcrn_string_free(diagnostics);
  }
  if (st != PFCRN_OK) {
    if (st != PFCRN_ERR_PARSE) std::cerr << "error: " << pfcrn_last_error() << "\n";
    return exit_code(st);
  }

  pfcrn_options opt;
  pfcrn_options_init(&opt);
  opt.levels = args.levels;
  opt.level = args.level;
  opt.rates = args.rates.empty() ? nullptr : args.rates.c_str();
  opt.witness_rates = args.witness.empty() ? nullptr : args.witness.c_str();
  opt.seed = args.seed;
  opt.format = args.format == "json" ? PFCRN_FORMAT_JSON : PFCRN_FORMAT_TEXT;
  opt.timings = args.timings ? 1 : 0;

  char* out = nullptr;
  st = pfcrn_run(net, command, &opt, &out);
  pfcrn_network_free(net);
  if (st != PFCRN_OK) {
    std::cerr << "error: " << pfcrn_status_string(st) << ": " << pfcrn_last_error() << "\n";
    return exit_code(st);
  }
  std::string text(out);
  pfcrn_string_free(out);

  if (args.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? 0 : 1;
  }
  std::ofstream file(args.output, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "error: " << args.output << ": cannot write file\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product-form analysis of stochastic reaction networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pfcrn_version());

  Args args;
  const std::map<std::string, std::pair<pfcrn_command, std::string>> commands{
      {"info", {PFCRN_CMD_INFO, "Structure: deficiency, conservation, reversibility, index set"}},
      {"components", {PFCRN_CMD_COMPONENTS, "Closed classes and transient states per level"}},
      {"kernel", {PFCRN_CMD_KERNEL, "Symbolic stationary vector of a level"}},
      {"ideal", {PFCRN_CMD_IDEAL, "Product-form relations as polynomials in the rates"}},
      {"classify", {PFCRN_CMD_CLASSIFY, "Type I, N or E with certificates"}},
      {"verify", {PFCRN_CMD_VERIFY, "Check relations and complex balance at given rates"}},
      {"fit", {PFCRN_CMD_FIT, "Fit one-species factors at given rates and label their shapes"}},
  };
  std::map<CLI::App*, pfcrn_command> lookup;
  for (const auto& [name, entry] : commands) {
    auto* sub = app.add_subcommand(name, entry.second);
    sub->add_option("input", args.input, "Network file (.crn)")->required();
    sub->add_option("--levels", args.levels, "Highest level to examine")
        ->default_val(6)
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1000}));
    if (name == "kernel" || name == "ideal" || name == "components")
      sub->add_option("--level", args.level, "A single level")->check(CLI::PositiveNumber);
    if (name == "verify" || name == "fit")
      sub->add_option("--rates", args.rates, "Rates, e.g. a=1,b=3/2")->required();
    if (name == "classify") {
      sub->add_option("--rates,--witness", args.witness,
                      "Candidate product-form rates; separate several with ';'");
      sub->add_option("--seed", args.seed, "Seed for the random rate search")->default_val(1);
      sub->add_flag("--timings", args.timings, "Report wall-clock time per phase");
    }
    sub->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    sub->add_option("--output,-o", args.output, "Write the report to a file");
    lookup[sub] = entry.first;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  for (const auto& [sub, cmd] : lookup)
    if (sub->parsed()) return execute(cmd, args);
  return 1;
}
