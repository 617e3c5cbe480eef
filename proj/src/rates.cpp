#include "pfcrn/rates.hpp"

#include "pfcrn/error.hpp"

namespace pfcrn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

RateAssignment parse_rates(const ReactionNetwork& net, std::string_view text) {
  const auto& symbols = net.rate_symbols();
  std::vector<bool> seen(symbols.size(), false);
  RateAssignment a;
  a.values.assign(symbols.size(), Rational(0));
  while (!trim(text).empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw InvalidArgument("rate assignment '" + std::string(item) + "' is not of the form name=value");
    auto name = std::string(trim(item.substr(0, eq)));
    auto idx = net.rate_index(name);
    if (idx == std::string::npos) throw InvalidArgument("unknown rate symbol '" + name + "'");
    if (seen[idx]) throw InvalidArgument("rate symbol '" + name + "' assigned twice");
    seen[idx] = true;
    Rational v = parse_rational(trim(item.substr(eq + 1)));
    if (sgn(v) <= 0) throw InvalidArgument("rate '" + name + "' must be positive");
    a.values[idx] = v;
  }
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (!seen[i]) throw InvalidArgument("rate symbol '" + symbols[i] + "' has no value");
  return a;
}

std::string format_rates(const ReactionNetwork& net, const RateAssignment& a) {
  std::string out;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (i) out += ',';
    out += net.rate_symbols()[i] + "=" + to_string(a.values[i]);
  }
  return out;
}

RateAssignment random_rates(const ReactionNetwork& net, std::mt19937_64& rng, int height) {
  std::uniform_int_distribution<int> pick(1, height);
  RateAssignment a;
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    Rational v(pick(rng), pick(rng));
    v.canonicalize();
    a.values.push_back(v);
  }
  return a;
}

}  // namespace pfcrn
