#include "pfcrn/report.hpp"

#include "pfcrn/error.hpp"
#include "pfcrn/parser.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace pfcrn {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 24> kGreek{{
    {"alpha", "α"},   {"beta", "β"},    {"gamma", "γ"}, {"delta", "δ"}, {"epsilon", "ε"},
    {"zeta", "ζ"},    {"eta", "η"},     {"theta", "θ"}, {"iota", "ι"},  {"kappa", "κ"},
    {"lambda", "λ"},  {"mu", "μ"},      {"nu", "ν"},    {"xi", "ξ"},    {"omicron", "ο"},
    {"pi", "π"},      {"rho", "ρ"},     {"sigma", "σ"}, {"tau", "τ"},   {"upsilon", "υ"},
    {"phi", "φ"},     {"chi", "χ"},     {"psi", "ψ"},   {"omega", "ω"},
}};

constexpr std::array<std::string_view, 10> kSub{"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
constexpr std::array<std::string_view, 10> kSup{"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::optional<std::string> greek(std::string_view name) {
  auto digits = name.find_first_of("0123456789");
  auto stem = name.substr(0, digits);
  if (digits != std::string_view::npos &&
      name.find_first_not_of("0123456789", digits) != std::string_view::npos)
    return std::nullopt;
  for (const auto& [word, glyph] : kGreek) {
    if (stem != word) continue;
    std::string out(glyph);
    if (digits != std::string_view::npos)
      for (char c : name.substr(digits)) out += kSub[c - '0'];
    return out;
  }
  return std::nullopt;
}

std::string superscript(unsigned e) {
  std::string out;
  for (char c : std::to_string(e)) out += kSup[c - '0'];
  return out;
}

struct DisplayContext {
  std::vector<std::string> names;  // display form per symbol
  std::vector<std::size_t> order;  // symbols sorted by source name
  bool compact = true;             // every name is a single glyph
};

DisplayContext display_context(std::span<const std::string> symbols) {
  DisplayContext ctx;
  for (const auto& s : symbols) {
    auto g = greek(s);
    ctx.compact = ctx.compact && g.has_value();
    ctx.names.push_back(g ? *g : s);
  }
  ctx.order.resize(symbols.size());
  std::iota(ctx.order.begin(), ctx.order.end(), 0);
  std::sort(ctx.order.begin(), ctx.order.end(),
            [&](auto a, auto b) { return symbols[a] < symbols[b]; });
  return ctx;
}

std::string monomial_text(const Monomial& m, const DisplayContext& ctx) {
  std::string out;
  for (auto v : ctx.order) {
    if (!m.exp[v]) continue;
    if (!out.empty() && !ctx.compact) out += "·";
    out += ctx.names[v];
    if (m.exp[v] > 1) out += superscript(m.exp[v]);
  }
  return out;
}

// Coefficient (absolute value) followed by a monomial.
std::string term_text(const Rational& c, const Monomial& m, const DisplayContext& ctx) {
  auto mono = monomial_text(m, ctx);
  if (mono.empty()) return to_string(c);
  if (c == 1) return mono;
  return to_string(c) + (ctx.compact && c.get_den() == 1 ? "" : "·") + mono;
}

std::string sum_text(const RatePoly& p, const DisplayContext& ctx) {
  auto terms = p.terms();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    if (a.mono.degree != b.mono.degree) return a.mono.degree > b.mono.degree;
    for (auto v : ctx.order)
      if (a.mono.exp[v] != b.mono.exp[v]) return a.mono.exp[v] > b.mono.exp[v];
    return false;
  });
  std::string out;
  for (const auto& t : terms) {
    bool neg = sgn(t.coeff) < 0;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? "-" : "+";
    out += term_text(abs(t.coeff), t.mono, ctx);
  }
  return out;
}

Json rational_json(const Rational& q) { return to_string(q); }

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json rates_json(const ReactionNetwork& net, const RateAssignment& a) {
  Json out = Json::object();
  for (std::size_t i = 0; i < a.values.size(); ++i) out[net.rate_symbols()[i]] = to_string(a[i]);
  return out;
}

Json states_json(const std::vector<State>& states) {
  Json out = Json::array();
  for (const auto& s : states) out.push_back(s);
  return out;
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

std::string pi_text(const PiRef& r) {
  return "pi" + std::to_string(r.level) + format_state(r.state);
}

std::string render_complex(const ReactionNetwork& net, const Complex& c) {
  std::string out;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    if (!c.coeffs[i]) continue;
    if (!out.empty()) out += " + ";
    if (c.coeffs[i] != 1) out += std::to_string(c.coeffs[i]) + " ";
    out += net.species()[i];
  }
  return out.empty() ? "0" : out;
}

std::string instance_text(const RelationInstance& r) {
  std::string out;
  auto side = [](const std::vector<PiRef>& refs) {
    std::string s;
    for (const auto& p : refs) s += (s.empty() ? "" : " ") + pi_text(p);
    return s;
  };
  out = side(r.lhs()) + " = " + side(r.rhs());
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string display_symbol(std::string_view name) {
  auto g = greek(name);
  return g ? *g : std::string(name);
}

std::string display(const RatePoly& p, std::span<const std::string> symbols) {
  if (p.is_zero()) return "0";
  auto ctx = display_context(symbols);
  auto pp = primitive_part(p);
  std::string out = pp.flipped ? "-" : "";
  if (pp.primitive.is_constant()) return out + term_text(pp.content, pp.content_monomial, ctx);
  std::string head;
  if (pp.content != 1 || pp.content_monomial.degree != 0) {
    head = pp.content_monomial.degree ? term_text(pp.content, pp.content_monomial, ctx)
                                      : to_string(pp.content);
    return out + head + "(" + sum_text(pp.primitive, ctx) + ")";
  }
  return out + sum_text(pp.primitive, ctx);
}

std::string format_state(const State& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + ")";
}

Json structure_json(const StructureReport& s) {
  Json j;
  j["stoich_dim"] = s.stoich_dim;
  j["linkage_count"] = s.linkage_count;
  j["deficiency"] = s.deficiency;
  j["conservation"] = s.conservation ? rationals_json(*s.conservation) : Json(nullptr);
  j["reversibility"] = to_string(s.reversibility);
  return j;
}

Json instance_json(const ReactionNetwork& net, const RelationInstance& r) {
  Json j;
  j["kind"] = r.kind == RelationInstance::Kind::a ? "a" : "b";
  j["base_level"] = r.base_level;
  j["x"] = r.x;
  j["y"] = r.y;
  if (r.kind == RelationInstance::Kind::b) {
    j["z"] = r.z;
    j["w"] = r.w;
  }
  j["j"] = net.species()[r.j];
  j["k"] = net.species()[r.k];
  Json lhs = Json::array(), rhs = Json::array();
  for (const auto& p : r.lhs()) lhs.push_back(pi_text(p));
  for (const auto& p : r.rhs()) rhs.push_back(pi_text(p));
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  return j;
}

Json component_json(const ReactionNetwork& net, const IrreducibleComponent& c) {
  Json j;
  j["level"] = c.level;
  j["states"] = states_json(c.states);
  Json tr = Json::array();
  for (const auto& t : c.transitions) {
    Json e;
    e["from"] = t.from;
    e["to"] = t.to;
    e["rate"] = net.rate_symbols()[net.reactions()[t.reaction].rate];
    e["coeff"] = integer_json(t.coeff);
    tr.push_back(e);
  }
  j["transitions"] = tr;
  j["flags"] = {{"is_full_simplex", c.flags.is_full_simplex},
                {"is_positive", c.flags.is_positive},
                {"theorem_hypothesis_met", c.flags.theorem_hypothesis_met}};
  return j;
}

Json kernel_json(const ReactionNetwork& net, const IrreducibleComponent& c, const KernelVector& h) {
  Json j;
  j["level"] = h.level;
  j["states"] = states_json(c.states);
  j["degree"] = h.degree;
  Json entries = Json::array();
  for (const auto& e : h.entries) entries.push_back(to_string(e, net.rate_symbols()));
  j["entries"] = entries;
  return j;
}

Json ideal_json(const ReactionNetwork& net, const GeneratorSet& g) {
  Json j;
  j["level"] = g.level;
  j["relation_count"] = g.relation_count;
  j["zero_relation_count"] = g.zero_relation_count;
  Json gens = Json::array();
  for (const auto& gen : g.generators) {
    Json e;
    e["poly"] = to_string(gen.poly, net.rate_symbols());
    e["sign_summary"] = to_string(gen.sign);
    Json prov = Json::array();
    for (const auto& p : gen.provenance) prov.push_back(instance_json(net, p.instance));
    e["provenance"] = prov;
    gens.push_back(e);
  }
  j["generators"] = gens;
  return j;
}

Json certificate_json(const ReactionNetwork& net, const Certificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["level"] = c.level;
  if (c.polynomial) j["polynomial"] = to_string(*c.polynomial, net.rate_symbols());
  if (!c.inputs.empty()) {
    Json in = Json::array();
    for (const auto& p : c.inputs) in.push_back(to_string(p, net.rate_symbols()));
    j["inputs"] = in;
  }
  if (c.eliminated) j["eliminated"] = net.rate_symbols()[*c.eliminated];
  if (c.rates) j["rates"] = rates_json(net, *c.rates);
  if (c.relation) j["relation"] = instance_json(net, *c.relation);
  if (c.residual) j["residual"] = rational_json(*c.residual);
  return j;
}

Json classification_json(const ReactionNetwork& net, const ClassificationReport& r,
                         bool with_timings) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["certainty"] = r.certainty.str();
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_json(net, c));
  j["certificates"] = certs;
  j["caveats"] = r.caveats;
  j["levels_computed"] = r.levels_computed;
  j["q"] = r.q ? Json(*r.q) : Json(nullptr);
  j["structure"] = structure_json(r.structure);
  Json counts = Json::array();
  for (const auto& [level, n] : r.generator_counts) counts.push_back({{"level", level}, {"generators", n}});
  j["generator_counts"] = counts;
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [k, v] : r.timings) t[k] = v;
    j["timings"] = t;
  }
  return j;
}

Json fit_json(const ReactionNetwork& net, const FitResult& fit,
              const std::optional<std::vector<ShapeLabel>>& shapes) {
  Json j;
  j["rates"] = rates_json(net, fit.rates);
  Json f = Json::object();
  for (std::size_t s = 0; s < fit.f_tables.size(); ++s)
    f[net.species()[s]] = rationals_json(fit.f_tables[s]);
  j["f_tables"] = f;
  j["z_values"] = rationals_json(fit.z_values);
  j["consistent_through"] = fit.consistent_through;
  if (fit.first_failure) {
    const auto& ff = *fit.first_failure;
    j["first_failure"] = {{"level", ff.level},
                          {"first", ff.first},
                          {"second", ff.second},
                          {"residual", to_string(ff.residual)}};
  } else {
    j["first_failure"] = nullptr;
  }
  if (shapes) {
    Json sh = Json::object();
    for (std::size_t s = 0; s < shapes->size(); ++s) {
      const auto& l = (*shapes)[s];
      sh[net.species()[s]] = {{"shape", to_string(l.shape)},
                              {"params", rationals_json({l.params.begin(), l.params.end()})}};
    }
    j["shapes"] = sh;
  } else {
    j["shapes"] = nullptr;
  }
  return j;
}

// ---------------------------------------------------------------- commands

namespace {

const KernelBudget kCommandBudget{1'000'000, 10'000'000'000};

std::string run_info(const ReactionNetwork& net, const RunConfig& cfg) {
  auto s = analyze_structure(net);
  std::optional<IndexProfile> prof;
  if (conserves_total_count(net)) prof = index_profile(net, cfg.levels);
  std::vector<std::string> reactions, complexes;
  for (const auto& r : net.reactions())
    reactions.push_back(render_complex(net, net.reactant(r)) + " -> " +
                        render_complex(net, net.product(r)) + " [" +
                        net.rate_symbols()[r.rate] + "]");
  for (const auto& c : net.complexes()) complexes.push_back(render_complex(net, c));

  if (cfg.format == Format::json) {
    Json j;
    j["species"] = net.species();
    j["rate_symbols"] = net.rate_symbols();
    j["complexes"] = complexes;
    j["reactions"] = reactions;
    j["structure"] = structure_json(s);
    if (prof) {
      Json levels = Json::array();
      for (const auto& lp : prof->per_level)
        levels.push_back({{"level", lp.level},
                          {"components", lp.component_count},
                          {"transient", lp.transient_count},
                          {"is_full_simplex", lp.flags.is_full_simplex},
                          {"is_positive", lp.flags.is_positive}});
      j["index"] = {{"q", prof->q ? Json(*prof->q) : Json(nullptr)},
                    {"levels", levels},
                    {"caveats", prof->caveats}};
    } else {
      j["index"] = nullptr;
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "species: " << join(net.species(), ", ") << "\n";
  os << "reactions:\n";
  for (const auto& r : reactions) os << "  " << r << "\n";
  os << "complexes: " << complexes.size() << ", linkage classes: " << s.linkage_count
     << ", stoichiometric dimension: " << s.stoich_dim << "\n";
  os << "deficiency: " << s.deficiency << "\n";
  os << "reversibility: " << to_string(s.reversibility) << "\n";
  if (s.conservation) {
    std::vector<std::string> w;
    for (const auto& q : *s.conservation) w.push_back(to_string(q));
    os << "conservation: (" << join(w, ", ") << ")\n";
  } else {
    os << "conservation: none\n";
  }
  if (prof) {
    os << "index set: " << (prof->q ? "levels >= " + std::to_string(*prof->q) : "none")
       << " (checked through " << cfg.levels << ")\n";
    for (const auto& c : prof->caveats) os << "  note: " << c << "\n";
  }
  return os.str();
}

std::string run_components(const ReactionNetwork& net, const RunConfig& cfg) {
  std::int64_t from = cfg.level.value_or(1), to = cfg.level.value_or(cfg.levels);
  Json all = Json::array();
  std::ostringstream os;
  for (auto l = from; l <= to; ++l) {
    auto d = decompose_level(net, l);
    if (cfg.format == Format::json) {
      Json comps = Json::array();
      for (const auto& c : d.components) comps.push_back(component_json(net, c));
      all.push_back({{"level", l}, {"components", comps}, {"transient", states_json(d.transient)}});
      continue;
    }
    os << "level " << l << ": " << d.components.size() << " closed class(es), "
       << d.transient.size() << " transient state(s)\n";
    for (const auto& c : d.components) {
      std::vector<std::string> st;
      for (const auto& x : c.states) st.push_back(format_state(x));
      os << "  " << c.size() << " state(s)" << (c.flags.is_full_simplex ? ", full simplex" : "")
         << (c.flags.is_positive ? ", positive" : "") << ": " << join(st, " ") << "\n";
    }
  }
  return cfg.format == Format::json ? dump(all) : os.str();
}

std::string run_kernel(const ReactionNetwork& net, const RunConfig& cfg) {
  const auto l = cfg.level.value_or(cfg.levels);
  auto d = decompose_level(net, l);
  if (d.components.empty()) throw InvalidArgument("level " + std::to_string(l) + " has no states");
  Json all = Json::array();
  std::ostringstream os;
  for (const auto& c : d.components) {
    auto h = kernel_vector(master_matrix(net, c), kCommandBudget);
    if (cfg.format == Format::json) {
      all.push_back(kernel_json(net, c, h));
      continue;
    }
    std::vector<std::string> parts;
    for (const auto& e : h.entries) parts.push_back(display(e, net.rate_symbols()));
    if (d.components.size() > 1) {
      std::vector<std::string> st;
      for (const auto& x : c.states) st.push_back(format_state(x));
      os << join(st, " ") << ": ";
    }
    os << "(" << join(parts, ", ") << ")\n";
  }
  return cfg.format == Format::json ? dump(all) : os.str();
}

IdealOptions ideal_options(const ReactionNetwork& net) {
  IdealOptions o;
  if (reversibility_class(net) != Reversibility::non_weakly_reversible)
    o.split_hints = complex_balance_conditions(net);
  return o;
}

std::string run_ideal(const ReactionNetwork& net, const RunConfig& cfg) {
  const auto top = cfg.level.value_or(cfg.levels);
  auto prof = index_profile(net, top);
  if (!prof.q) throw InvalidArgument("no level range of full simplices up to " + std::to_string(top));
  const auto q = *prof.q;
  if (top <= q) throw InvalidArgument("relations need levels above " + std::to_string(q));
  KernelTable kernels(net, q, top, kCommandBudget);
  auto scan = stabilization_scan(net, kernels, q, top, ideal_options(net));
  const auto& set = scan.sets.back();
  if (cfg.format == Format::json) {
    Json j;
    j["q"] = q;
    j["levels"] = scan.levels;
    j["new_generator_counts"] = scan.new_generator_counts;
    j["stable_suffix_length"] = scan.stable_suffix_length;
    j["ideal"] = ideal_json(net, set);
    return dump(j);
  }
  std::ostringstream os;
  os << "index set starts at level " << q << "\n";
  for (std::size_t i = 0; i < scan.levels.size(); ++i)
    os << "I_" << scan.levels[i] << ": " << scan.sets[i].generators.size() << " generator(s), "
       << scan.new_generator_counts[i] << " new\n";
  for (const auto& g : set.generators)
    os << "  [" << to_string(g.sign) << "] " << display(g.poly, net.rate_symbols()) << "\n";
  return os.str();
}

std::string run_classify(const ReactionNetwork& net, const RunConfig& cfg) {
  ClassifyOptions o;
  o.j_max = cfg.levels;
  o.seed = cfg.seed;
  o.witness_rates = cfg.witness_rates;
  auto r = classify(net, o);
  if (cfg.format == Format::json) return dump(classification_json(net, r, cfg.timings));
  std::ostringstream os;
  os << "verdict: " << to_string(r.verdict) << " (" << r.certainty.str() << ")\n";
  for (const auto& c : r.certificates) {
    os << "certificate: " << to_string(c.kind);
    if (c.level) os << " at level " << c.level;
    os << "\n";
    if (c.polynomial) os << "  polynomial: " << display(*c.polynomial, net.rate_symbols()) << "\n";
    if (c.eliminated)
      os << "  eliminated " << display_symbol(net.rate_symbols()[*c.eliminated]) << " from "
         << display(c.inputs[0], net.rate_symbols()) << " and "
         << display(c.inputs[1], net.rate_symbols()) << "\n";
    if (c.rates) os << "  rates: " << format_rates(net, *c.rates) << "\n";
    if (c.relation) os << "  relation: " << instance_text(*c.relation) << "\n";
    if (c.residual) os << "  residual: " << to_string(*c.residual) << "\n";
  }
  for (const auto& c : r.caveats) os << "caveat: " << c << "\n";
  if (cfg.timings) {
    os << std::fixed << std::setprecision(3);
    for (const auto& [k, v] : r.timings) os << "time " << k << ": " << v << " s\n";
  }
  return os.str();
}

std::string run_verify(const ReactionNetwork& net, const RunConfig& cfg) {
  if (!cfg.rates) throw InvalidArgument("verify needs --rates");
  auto w = witness_check(net, *cfg.rates, cfg.levels);
  auto cb = complex_balance(net, *cfg.rates);
  if (cfg.format == Format::json) {
    Json j;
    j["rates"] = rates_json(net, *cfg.rates);
    j["q"] = w.q;
    j["through"] = w.through;
    j["product_form_consistent"] = w.product_form_consistent;
    if (w.violation)
      j["violation"] = {{"relation", instance_json(net, w.violation->instance)},
                        {"residual", to_string(w.violation->residual)}};
    else
      j["violation"] = nullptr;
    j["complex_balanced"] = cb.balanced;
    j["tree_constants"] = rationals_json(cb.tree_constants);
    j["caveats"] = cb.caveats;
    return dump(j);
  }
  std::ostringstream os;
  os << "rates: " << format_rates(net, *cfg.rates) << "\n";
  os << "relations through level " << w.through << ": "
     << (w.product_form_consistent ? "all vanish" : "violated") << "\n";
  if (w.violation)
    os << "  " << instance_text(w.violation->instance)
       << "  residual " << to_string(w.violation->residual) << "\n";
  os << "complex balanced: " << (cb.balanced ? "yes" : "no") << "\n";
  for (const auto& c : cb.caveats) os << "caveat: " << c << "\n";
  return os.str();
}

std::string run_fit(const ReactionNetwork& net, const RunConfig& cfg) {
  if (!cfg.rates) throw InvalidArgument("fit needs --rates");
  auto fit = product_form_fit(net, *cfg.rates, cfg.levels);
  std::optional<std::vector<ShapeLabel>> shapes;
  if (fit.consistent_through >= 4) shapes = shape_classify(fit);
  if (cfg.format == Format::json) return dump(fit_json(net, fit, shapes));
  std::ostringstream os;
  os << "rates: " << format_rates(net, *cfg.rates) << "\n";
  os << "product form consistent through level " << fit.consistent_through << "\n";
  if (fit.first_failure)
    os << "  first failure at level " << fit.first_failure->level << ": "
       << format_state(fit.first_failure->first) << " vs " << format_state(fit.first_failure->second)
       << ", residual " << to_string(fit.first_failure->residual) << "\n";
  for (std::size_t s = 0; s < fit.f_tables.size(); ++s) {
    std::vector<std::string> f;
    for (const auto& v : fit.f_tables[s]) f.push_back(to_string(v));
    os << net.species()[s] << ": f = " << join(f, ", ");
    if (shapes) os << "  [" << to_string((*shapes)[s].shape) << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string run(const ReactionNetwork& net, const RunConfig& cfg) {
  if (cfg.levels < 2) throw InvalidArgument("levels must be at least 2");
  if (cfg.level && *cfg.level < 1) throw InvalidArgument("level must be positive");
  if (cfg.rates && cfg.rates->values.size() != net.reaction_count())
    throw InvalidArgument("rate assignment does not match the network");
  switch (cfg.command) {
    case Command::info: return run_info(net, cfg);
    case Command::components: return run_components(net, cfg);
    case Command::kernel: return run_kernel(net, cfg);
    case Command::ideal: return run_ideal(net, cfg);
    case Command::classify: return run_classify(net, cfg);
    case Command::verify: return run_verify(net, cfg);
    case Command::fit: return run_fit(net, cfg);
  }
  throw InvalidArgument("unknown command");
}

}  // namespace pfcrn
