#include "pfcrn/classifier.hpp"

#include "pfcrn/error.hpp"
#include "detail/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <random>

namespace pfcrn {

const char* to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::deficiency_zero_wr: return "deficiency_zero_wr";
    case Certificate::Kind::no_positive_root: return "no_positive_root";
    case Certificate::Kind::complex_balance_witness: return "complex_balance_witness";
    case Certificate::Kind::relation_violation_witness: return "relation_violation_witness";
    case Certificate::Kind::bounded_evidence: return "bounded_evidence";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::I: return "I";
    case Verdict::N: return "N";
    case Verdict::E: return "E";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string Certainty::str() const {
  return certified ? "certified" : "bounded(" + std::to_string(level) + ")";
}

// ---------------------------------------------------------------- positivity

std::optional<Certificate> no_positive_root_certificate(const RatePoly& p) {
  if (p.is_zero()) throw InvalidArgument("no_positive_root_certificate: zero polynomial");
  auto s = sign_summary(p);
  if (s != SignSummary::all_positive && s != SignSummary::all_negative) return std::nullopt;
  Certificate c;
  c.kind = Certificate::Kind::no_positive_root;
  c.polynomial = p;
  return c;
}

namespace {

RatePoly resultant_linear(const RatePoly& linear, const RatePoly& other, std::size_t var) {
  auto c = coefficients_in_variable(linear, var);
  auto b = coefficients_in_variable(other, var);
  const auto d = b.size() - 1;
  RatePoly neg_c0 = -c[0];
  RatePoly r(other.nvars());
  for (std::size_t k = 0; k <= d; ++k) {
    if (b[k].is_zero()) continue;
    r += b[k] * neg_c0.pow(static_cast<unsigned>(k)) * c[1].pow(static_cast<unsigned>(d - k));
  }
  return r;
}

}  // namespace

std::optional<Certificate> composite_certificate(const RatePoly& linear, const RatePoly& other,
                                                 std::size_t var) {
  if (linear.degree_in(var) != 1 || other.degree_in(var) == 0) return std::nullopt;
  auto c1 = coefficients_in_variable(linear, var)[1];
  auto s1 = sign_summary(c1);
  if (s1 != SignSummary::all_positive && s1 != SignSummary::all_negative) return std::nullopt;
  auto r = resultant_linear(linear, other, var);
  if (r.is_zero()) return std::nullopt;
  auto split = strip_positive_factors(r, {});
  if (split.kept.total_degree() != 0) return std::nullopt;
  Certificate c;
  c.kind = Certificate::Kind::no_positive_root;
  c.polynomial = canonical(r);
  c.inputs = {linear, other};
  c.eliminated = var;
  return c;
}

std::optional<Certificate> find_composite_certificate(const std::vector<Generator>& gens) {
  constexpr std::size_t kMaxLinear = 64, kMaxOther = 512;
  for (const auto& a : gens) {
    if (a.poly.size() > kMaxLinear) continue;
    for (std::size_t v = 0; v < a.poly.nvars(); ++v) {
      if (a.poly.degree_in(v) != 1) continue;
      for (const auto& b : gens) {
        if (&a == &b || b.poly.size() > kMaxOther || b.poly.degree_in(v) == 0) continue;
        if (auto c = composite_certificate(a.poly, b.poly, v)) return c;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- complex balance

namespace {

template <class T>
T det(std::vector<std::vector<T>> m, const T& one) {
  const auto n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  T total = one - one;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == one - one) continue;
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    T term = m[0][c] * det(std::move(minor), one);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

// K_eta for every complex; rate(r) gives the value attached to reaction r.
template <class T, class Rate>
std::vector<T> tree_constants_impl(const ReactionNetwork& net, Rate rate, const T& one) {
  const T zero = one - one;
  std::vector<T> out(net.complex_count(), zero);
  for (const auto& cls : linkage_classes(net)) {
    const auto k = cls.size();
    auto pos = [&](std::size_t c) {
      return static_cast<std::size_t>(std::find(cls.begin(), cls.end(), c) - cls.begin());
    };
    std::vector<std::vector<T>> m(k, std::vector<T>(k, zero));
    for (std::size_t r = 0; r < net.reaction_count(); ++r) {
      const auto& re = net.reactions()[r];
      auto u = pos(re.reactant);
      if (u == k) continue;
      auto v = pos(re.product);
      T x = rate(r);
      m[u][u] += x;
      m[v][u] -= x;
    }
    for (std::size_t e = 0; e < k; ++e) {
      std::vector<std::vector<T>> minor;
      for (std::size_t r = 0; r < k; ++r) {
        if (r == e) continue;
        std::vector<T> row;
        for (std::size_t c = 0; c < k; ++c)
          if (c != e) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      out[cls[e]] = det(std::move(minor), one);
    }
  }
  return out;
}

Rational rational_pow(const Rational& b, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool weakly_reversible(const ReactionNetwork& net) {
  return reversibility_class(net) != Reversibility::non_weakly_reversible;
}

}  // namespace

std::vector<Rational> tree_constants(const ReactionNetwork& net, const RateAssignment& a) {
  return tree_constants_impl<Rational>(
      net, [&](std::size_t r) { return a[net.reactions()[r].rate]; }, Rational(1));
}

std::vector<RatePoly> tree_constants(const ReactionNetwork& net) {
  const auto nv = net.reaction_count();
  return tree_constants_impl<RatePoly>(
      net, [&](std::size_t r) { return RatePoly::variable(nv, net.reactions()[r].rate); },
      RatePoly::constant(nv, 1));
}

std::vector<std::vector<Integer>> balance_lattice(const ReactionNetwork& net) {
  const auto classes = linkage_classes(net);
  const auto nc = net.complex_count();
  detail::Matrix m;
  for (std::size_t s = 0; s < net.species_count(); ++s) {
    detail::RowVec row;
    for (const auto& c : net.complexes()) row.emplace_back(c.coeffs[s]);
    m.push_back(std::move(row));
  }
  for (const auto& cls : classes) {
    detail::RowVec row(nc, Rational(0));
    for (auto c : cls) row[c] = 1;
    m.push_back(std::move(row));
  }
  std::vector<std::vector<Integer>> out;
  for (auto& v : detail::nullspace(m, nc)) {
    std::vector<Integer> iv;
    for (const auto& x : detail::primitive_integer(std::move(v))) iv.push_back(x.get_num());
    out.push_back(std::move(iv));
  }
  return out;
}

ComplexBalanceResult complex_balance(const ReactionNetwork& net, const RateAssignment& a) {
  ComplexBalanceResult res;
  if (!weakly_reversible(net)) {
    res.caveats.push_back("network is not weakly reversible, so it cannot be complex balanced");
    return res;
  }
  res.tree_constants = tree_constants(net, a);
  // Tree constants balance every complex of their class.
  std::vector<Rational> in(net.complex_count(), Rational(0)), out(net.complex_count(), Rational(0));
  for (const auto& r : net.reactions()) {
    in[r.product] += a[r.rate] * res.tree_constants[r.reactant];
    out[r.reactant] += a[r.rate] * res.tree_constants[r.reactant];
  }
  for (std::size_t c = 0; c < in.size(); ++c)
    if (in[c] != out[c] || sgn(res.tree_constants[c]) <= 0)
      throw InvariantViolation("tree constants do not balance complex " + std::to_string(c));
  res.balanced = true;
  for (const auto& v : balance_lattice(net)) {
    Rational plus = 1, minus = 1;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (sgn(v[c]) > 0) plus *= rational_pow(res.tree_constants[c], v[c].get_ui());
      if (sgn(v[c]) < 0) minus *= rational_pow(res.tree_constants[c], Integer(-v[c]).get_ui());
    }
    if (plus != minus) {
      res.balanced = false;
      break;
    }
  }
  return res;
}

std::vector<RatePoly> complex_balance_conditions(const ReactionNetwork& net) {
  std::vector<RatePoly> out;
  if (!weakly_reversible(net)) return out;
  auto k = tree_constants(net);
  const auto nv = net.reaction_count();
  for (const auto& v : balance_lattice(net)) {
    auto plus = RatePoly::constant(nv, 1), minus = RatePoly::constant(nv, 1);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (sgn(v[c]) > 0) plus *= k[c].pow(static_cast<unsigned>(v[c].get_ui()));
      if (sgn(v[c]) < 0) minus *= k[c].pow(static_cast<unsigned>(Integer(-v[c]).get_ui()));
    }
    auto g = gcd(plus, minus);
    auto cond = canonical(*divide_exact(plus, g) - *divide_exact(minus, g));
    if (!cond.is_zero() &&
        std::none_of(out.begin(), out.end(), [&](const RatePoly& p) { return p == cond; }))
      out.push_back(std::move(cond));
  }
  return out;
}

std::optional<RateAssignment> complex_balanced_rates(const ReactionNetwork& net) {
  if (!weakly_reversible(net)) return std::nullopt;
  const auto nc = net.complex_count();
  std::vector<std::vector<std::size_t>> out_edges(nc);
  for (std::size_t r = 0; r < net.reaction_count(); ++r)
    out_edges[net.reactions()[r].reactant].push_back(r);
  std::vector<long> flow(net.reaction_count(), 0);
  for (std::size_t r = 0; r < net.reaction_count(); ++r) {
    const auto& re = net.reactions()[r];
    // Shortest path product -> reactant closes a cycle through r.
    std::vector<std::size_t> via(nc, net.reaction_count());
    std::vector<bool> seen(nc, false);
    std::deque<std::size_t> queue{re.product};
    seen[re.product] = true;
    while (!queue.empty() && !seen[re.reactant]) {
      auto u = queue.front();
      queue.pop_front();
      for (auto e : out_edges[u]) {
        auto v = net.reactions()[e].product;
        if (seen[v]) continue;
        seen[v] = true;
        via[v] = e;
        queue.push_back(v);
      }
    }
    if (!seen[re.reactant]) return std::nullopt;
    ++flow[r];
    for (auto v = re.reactant; v != re.product; v = net.reactions()[via[v]].reactant) ++flow[via[v]];
  }
  RateAssignment a;
  a.values.assign(net.reaction_count(), Rational(0));
  for (std::size_t r = 0; r < net.reaction_count(); ++r)
    a.values[net.reactions()[r].rate] = Rational(flow[r]);
  return a;
}

// ---------------------------------------------------------------- witnesses

WitnessReport witness_check(const ReactionNetwork& net, const RateAssignment& a,
                            std::int64_t l_max) {
  auto prof = index_profile(net, std::max<std::int64_t>(l_max, 2));
  if (!prof.q) throw InvalidArgument("no full-simplex index set through level " + std::to_string(l_max));
  auto rep = relation_residuals(net, a, *prof.q, l_max);
  WitnessReport w;
  w.q = *prof.q;
  w.through = l_max;
  w.product_form_consistent = rep.all_zero();
  w.violation = rep.first_violation;
  return w;
}

// ---------------------------------------------------------------- classify

namespace {

using Clock = std::chrono::steady_clock;

Certificate certificate(Certificate::Kind kind) {
  Certificate c;
  c.kind = kind;
  return c;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::optional<Violation> search_violation(const ReactionNetwork& net, std::int64_t q,
                                          std::int64_t j_max, std::mt19937_64& rng, int attempts,
                                          RateAssignment& at) {
  for (int t = 0; t < attempts; ++t) {
    auto a = random_rates(net, rng);
    auto rep = relation_residuals(net, a, q, j_max, true);
    if (rep.first_violation) {
      at = a;
      return rep.first_violation;
    }
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport classify(const ReactionNetwork& net, const ClassifyOptions& opt) {
  if (opt.j_max < 2) throw InvalidArgument("levels must be at least 2");
  const auto t_total = Clock::now();
  ClassificationReport rep;
  rep.structure = analyze_structure(net);
  if (!rep.structure.conservation)
    throw InvalidArgument("network is not conservative; classification needs finite components");
  const bool wr = rep.structure.reversibility != Reversibility::non_weakly_reversible;
  const bool unit = conserves_total_count(net);

  if (rep.structure.deficiency == 0 && wr) {
    rep.verdict = Verdict::I;
    rep.certainty.certified = true;
    rep.certificates.push_back(certificate(Certificate::Kind::deficiency_zero_wr));
    if (!unit)
      rep.caveats.push_back(
          "total count is not conserved; the verdict rests on the deficiency-zero theorem alone");
    rep.timings["total"] = seconds_since(t_total);
    return rep;
  }
  if (!unit) {
    rep.caveats.push_back(
        "total count is not conserved: levels are not simplices, relations are unavailable");
    rep.timings["total"] = seconds_since(t_total);
    return rep;
  }

  auto prof = index_profile(net, opt.j_max);
  rep.caveats.insert(rep.caveats.end(), prof.caveats.begin(), prof.caveats.end());
  rep.q = prof.q;
  if (!prof.q) {
    rep.timings["total"] = seconds_since(t_total);
    return rep;
  }
  const auto q = *prof.q;
  if (q > 1)
    rep.caveats.push_back("index set starts at level " + std::to_string(q) +
                          ": relations are necessary conditions only");

  // Symbolic kernels as far as the budget allows.
  auto t = Clock::now();
  KernelTable kernels;
  rep.levels_computed = q - 1;
  for (auto l = q; l <= opt.j_max; ++l) {
    try {
      kernels.add(net, l, opt.budget);
      std::size_t widest = 0;
      for (const auto& e : kernels.at(l).kernel.entries) widest = std::max(widest, e.size());
      if (widest > opt.scan_term_limit) {
        rep.caveats.push_back("kernel at level " + std::to_string(l) + " has " +
                              std::to_string(widest) +
                              "-term entries; higher levels checked numerically");
        break;
      }
      rep.levels_computed = l;
    } catch (const BudgetExceeded&) {
      rep.caveats.push_back("symbolic kernel at level " + std::to_string(l) +
                            " exceeds the work budget; higher levels checked numerically");
      break;
    }
  }
  rep.timings["kernels"] = seconds_since(t);

  t = Clock::now();
  IdealOptions iopt;
  if (wr) iopt.split_hints = complex_balance_conditions(net);
  ScanReport scan;
  if (rep.levels_computed > q) scan = stabilization_scan(net, kernels, q, rep.levels_computed, iopt);
  std::optional<Certificate> n_cert;
  for (std::size_t s = 0; s < scan.sets.size() && !n_cert; ++s) {
    const auto& set = scan.sets[s];
    rep.generator_counts.emplace_back(set.level, set.generators.size());
    for (const auto& g : set.generators)
      if ((n_cert = no_positive_root_certificate(g.poly))) {
        // The full relation before cancellation reads better than a reduced constant.
        const auto& pv = g.provenance.front();
        if (auto full = no_positive_root_certificate(pv.primitive.mul_monomial(pv.content_monomial, 1)))
          n_cert = full;
        n_cert->level = set.level;
        n_cert->relation = g.provenance.front().instance;
        break;
      }
    if (!n_cert && (n_cert = find_composite_certificate(set.generators))) n_cert->level = set.level;
  }
  rep.timings["ideal"] = seconds_since(t);
  if (n_cert) {
    rep.verdict = Verdict::N;
    rep.certainty.certified = true;
    rep.certificates.push_back(std::move(*n_cert));
    rep.timings["total"] = seconds_since(t_total);
    return rep;
  }

  t = Clock::now();
  std::mt19937_64 rng(opt.seed);
  bool has_generators = !scan.sets.empty() && !scan.sets.back().generators.empty();
  RateAssignment violation_rates;
  std::optional<Violation> violation;
  if (!has_generators) {
    // Nothing symbolic to go on: sample the remaining levels numerically.
    for (int p = 0; p < opt.numeric_points && !violation; ++p) {
      auto a = random_rates(net, rng);
      auto rr = relation_residuals(net, a, q, opt.j_max, true);
      if (rr.first_violation) {
        violation = rr.first_violation;
        violation_rates = a;
      }
    }
    if (!violation && q > 1) {
      rep.caveats.push_back("relations vanish through level " + std::to_string(opt.j_max) +
                            ", but with levels below " + std::to_string(q) +
                            " excluded they do not imply product form");
      rep.timings["numeric"] = seconds_since(t);
      rep.timings["total"] = seconds_since(t_total);
      return rep;
    }
    if (!violation) {
      rep.verdict = Verdict::I;
      rep.certainty.level = opt.j_max;
      auto ev = certificate(Certificate::Kind::bounded_evidence);
      ev.level = opt.j_max;
      rep.certificates.push_back(std::move(ev));
      if (rep.levels_computed < opt.j_max)
        rep.caveats.push_back("relations vanish identically through level " +
                              std::to_string(rep.levels_computed) + " and at " +
                              std::to_string(opt.numeric_points) +
                              " random rate points through level " + std::to_string(opt.j_max));
      else
        rep.caveats.push_back("relations vanish identically through level " +
                              std::to_string(opt.j_max) + "; stabilization is not proven");
      rep.timings["numeric"] = seconds_since(t);
      rep.timings["total"] = seconds_since(t_total);
      return rep;
    }
  }
  if (!violation) violation = search_violation(net, q, opt.j_max, rng, opt.violation_attempts, violation_rates);

  std::optional<Certificate> witness;
  if (wr) {
    if (auto a = complex_balanced_rates(net); a && complex_balance(net, *a).balanced) {
      witness = certificate(Certificate::Kind::complex_balance_witness);
      witness->rates = *a;
    }
  }
  if (!witness) {
    std::vector<RateAssignment> candidates = opt.witness_rates;
    RateAssignment ones;
    ones.values.assign(net.reaction_count(), Rational(1));
    candidates.push_back(ones);
    for (const auto& a : candidates) {
      if (witness_check(net, a, opt.j_max).product_form_consistent) {
        witness = certificate(Certificate::Kind::bounded_evidence);
        witness->rates = a;
        witness->level = opt.j_max;
        break;
      }
    }
  }
  rep.timings["numeric"] = seconds_since(t);

  if (violation) {
    auto v = certificate(Certificate::Kind::relation_violation_witness);
    v.rates = violation_rates;
    v.relation = violation->instance;
    v.residual = violation->residual;
    v.level = violation->instance.top_level();
    rep.certificates.push_back(std::move(v));
  }
  if (witness) rep.certificates.push_back(*witness);
  if (violation && witness) {
    rep.verdict = Verdict::E;
    rep.certainty.certified = witness->kind == Certificate::Kind::complex_balance_witness;
    rep.certainty.level = opt.j_max;
    if (!rep.certainty.certified)
      rep.caveats.push_back("product form at the witness rates is checked through level " +
                            std::to_string(opt.j_max) + " only");
  } else {
    rep.caveats.push_back(violation ? "no product-form witness found"
                                    : "no relation violation found at sampled rates");
  }
  rep.timings["total"] = seconds_since(t_total);
  return rep;
}

// ---------------------------------------------------------------- re-checks

bool verify_certificate(const ReactionNetwork& net, const Certificate& cert) {
  switch (cert.kind) {
    case Certificate::Kind::deficiency_zero_wr:
      return deficiency(net) == 0 && reversibility_class(net) != Reversibility::non_weakly_reversible;
    case Certificate::Kind::no_positive_root: {
      if (!cert.inputs.empty()) {
        if (cert.inputs.size() != 2 || !cert.eliminated || !cert.polynomial) return false;
        auto again = composite_certificate(cert.inputs[0], cert.inputs[1], *cert.eliminated);
        return again && again->polynomial == cert.polynomial;
      }
      if (!cert.polynomial || !no_positive_root_certificate(*cert.polynomial)) return false;
      std::mt19937_64 rng(0x5eed);
      int sign = 0;
      for (int i = 0; i < 100; ++i) {
        auto a = random_rates(net, rng);
        int s = sgn(evaluate(*cert.polynomial, a.values));
        if (s == 0 || (sign && s != sign)) return false;
        sign = s;
      }
      return true;
    }
    case Certificate::Kind::complex_balance_witness:
      return cert.rates && complex_balance(net, *cert.rates).balanced;
    case Certificate::Kind::bounded_evidence: {
      if (cert.rates) return witness_check(net, *cert.rates, cert.level).product_form_consistent;
      std::mt19937_64 rng(0x5eed);
      for (int i = 0; i < 3; ++i)
        if (!witness_check(net, random_rates(net, rng), cert.level).product_form_consistent)
          return false;
      return true;
    }
    case Certificate::Kind::relation_violation_witness: {
      if (!cert.rates || !cert.relation || !cert.residual) return false;
      Rational lhs = 1, rhs = 1;
      std::map<std::int64_t, LevelDistribution> dist;
      auto pi = [&](const PiRef& ref) {
        auto it = dist.find(ref.level);
        if (it == dist.end())
          it = dist.emplace(ref.level, exact_stationary(net, *cert.rates, ref.level)).first;
        return it->second.at(ref.state);
      };
      for (const auto& ref : cert.relation->lhs()) lhs *= pi(ref);
      for (const auto& ref : cert.relation->rhs()) rhs *= pi(ref);
      return lhs - rhs == *cert.residual && *cert.residual != 0;
    }
  }
  return false;
}

}  // namespace pfcrn
