// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
// The exit status is nonzero only when a criterion could not be evaluated at
// all; a FAIL line is a reported result, not a crash.

#include "pfcrn/classifier.hpp"
#include "pfcrn/error.hpp"
#include "pfcrn/kernel.hpp"
#include "pfcrn/numeric.hpp"
#include "pfcrn/parser.hpp"
#include "pfcrn/product_ideal.hpp"
#include "pfcrn/rates.hpp"
#include "pfcrn/state_space.hpp"
#include "pfcrn/structure.hpp"

#include "detail/linalg.hpp"
#include "support/poly_text.hpp"

#include <sys/wait.h>

#include <chrono>
#include <filesystem>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace pfcrn;
using testing_support::poly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

const std::vector<std::string> kCorpus{"w1",  "w2",  "w3",  "w4",  "w5",   "w6",   "nw1",
                                       "nw2", "nw3", "nw4", "nw5", "nw6",  "nw7",  "nw8",
                                       "nw9", "nw10", "nw11", "nw12", "ex28", "mm"};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus_path(const std::string& name) {
  return std::string(PFCRN_CORPUS_DIR) + "/" + name + ".crn";
}

ReactionNetwork load(const std::string& name) {
  auto res = parse_network({read_file(corpus_path(name)), name});
  if (!res.ok()) throw std::runtime_error("corpus file " + name + " does not parse");
  return std::move(*res.network);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const IrreducibleComponent& only_component(const LevelDecomposition& d) {
  if (d.components.size() != 1)
    throw std::runtime_error("level " + std::to_string(d.level) + " has " +
                             std::to_string(d.components.size()) + " closed classes");
  return d.components.front();
}

bool positive_multiple(const RatePoly& p, const RatePoly& target) {
  auto q = divide_exact(p, target);
  return q && q->is_constant() && sgn(q->leading().coeff) > 0;
}

// ------------------------------------------------------------------ 1

std::vector<std::vector<std::string>> nw1_kernels() {
  return {
      {"alpha", "2*alpha", "beta"},
      {"4*alpha^2", "6*alpha^2 + 3*alpha*beta", "6*alpha*beta", "beta^2"},
      {"18*alpha^3 + 3*alpha^2*beta", "24*alpha^3 + 28*alpha^2*beta",
       "36*alpha^2*beta + 6*alpha*beta^2", "12*alpha*beta^2", "beta^3"},
  };
}

Outcome criterion1() {
  Outcome o;
  auto net = load("nw1");
  const auto& sym = net.rate_symbols();
  auto t0 = std::chrono::steady_clock::now();
  auto expected = nw1_kernels();
  for (std::int64_t l = 2; l <= 4; ++l) {
    const auto dec = decompose_level(net, l);
    const auto& comp = only_component(dec);
    auto h = kernel_vector(master_matrix(net, comp));
    const auto& want = expected[l - 2];
    if (h.entries.size() != want.size()) {
      o.fail("level " + std::to_string(l) + " size");
      continue;
    }
    for (std::size_t i = 0; i < want.size(); ++i)
      if (!(h.entries[i] == poly(want[i], sym)))
        o.fail("level " + std::to_string(l) + " entry " + std::to_string(i) + " is " +
               to_string(h.entries[i], sym));
  }
  double t = seconds_since(t0);
  if (t >= 1.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "h2, h3, h4 of NW1 exact in " + std::to_string(t) + " s";
  return o;
}

// ------------------------------------------------------------------ 2

Outcome criterion2() {
  Outcome o;
  auto net = load("nw1");
  const auto& sym = net.rate_symbols();
  const std::vector<std::vector<std::vector<std::string>>> printed{
      {{"-2*beta", "0", "2*alpha"}, {"2*beta", "-beta", "0"}, {"0", "beta", "-2*alpha"}},
      {{"-3*beta", "0", "2*alpha", "0"},
       {"3*beta", "-2*beta", "0", "6*alpha"},
       {"0", "2*beta", "-2*alpha - beta", "0"},
       {"0", "0", "beta", "-6*alpha"}},
      {{"-4*beta", "0", "2*alpha", "0", "0"},
       {"4*beta", "-3*beta", "0", "6*alpha", "0"},
       {"0", "3*beta", "-2*alpha - 2*beta", "0", "12*alpha"},
       {"0", "0", "2*beta", "-6*alpha - beta", "0"},
       {"0", "0", "0", "beta", "-12*alpha"}},  // printed as -12*beta
  };
  for (std::int64_t l = 2; l <= 4; ++l) {
    const auto dec = decompose_level(net, l);
    const auto& comp = only_component(dec);
    auto a = master_matrix(net, comp);
    const auto& want = printed[l - 2];
    for (std::size_t r = 0; r < a.m; ++r)
      for (std::size_t c = 0; c < a.m; ++c)
        if (!(a.at(r, c) == poly(want[r][c], sym)))
          o.fail("Gamma" + std::to_string(l) + "[" + std::to_string(r) + "][" +
                 std::to_string(c) + "] = " + to_string(a.at(r, c), sym));
    auto h = kernel_vector(a);
    if (!annihilates(a, h)) o.fail("A h != 0 at level " + std::to_string(l));
    if (l == 4) {
      // The matrix exactly as printed does not annihilate the printed kernel.
      auto as_printed = a;
      as_printed.at(4, 4) = poly("-12*beta", sym);
      if (annihilates(as_printed, h)) o.fail("printed Gamma4 unexpectedly consistent");
    }
  }
  if (o.pass) o.detail = "Gamma2, Gamma3 entry-exact; Gamma4 exact with -12*alpha, A*h = 0";
  return o;
}

// ------------------------------------------------------------------ 3

Outcome criterion3() {
  Outcome o;
  const std::vector<std::pair<std::string, Verdict>> table{
      {"w1", Verdict::I},   {"w2", Verdict::I},   {"w3", Verdict::E},   {"w4", Verdict::E},
      {"w5", Verdict::I},   {"w6", Verdict::I},   {"nw1", Verdict::N},  {"nw2", Verdict::N},
      {"nw3", Verdict::N},  {"nw4", Verdict::N},  {"nw5", Verdict::N},  {"nw6", Verdict::I},
      {"nw7", Verdict::I},  {"nw8", Verdict::I},  {"nw9", Verdict::I},  {"nw10", Verdict::I},
      {"nw11", Verdict::E}, {"nw12", Verdict::E},
  };
  double slowest = 0;
  std::string got;
  for (const auto& [name, want] : table) {
    auto net = load(name);
    auto t0 = std::chrono::steady_clock::now();
    auto r = classify(net, {});
    double t = seconds_since(t0);
    slowest = std::max(slowest, t);
    got += (got.empty() ? "" : " ") + std::string(to_string(r.verdict));
    if (r.verdict != want)
      o.fail(name + " is " + to_string(r.verdict) + " (" + r.certainty.str() + "), table says " +
             to_string(want));
    if (t >= 10.0) o.fail(name + " took " + std::to_string(t) + " s");
    if (name == "nw4" || name == "nw5") {
      bool caveat = false;
      for (const auto& c : r.caveats) caveat = caveat || c.find("necessary") != std::string::npos;
      if (!caveat) o.fail(name + " lacks the necessary-conditions caveat");
    }
    if ((name == "nw11" || name == "nw12") && r.verdict == Verdict::E && r.certainty.certified)
      o.fail(name + " E claimed certified without a user witness");
  }
  o.detail = (o.pass ? "" : o.detail + "; ") + "verdicts " + got + "; slowest " +
             std::to_string(slowest) + " s";
  return o;
}

// ------------------------------------------------------------------ 4

const Generator* find_generator(const GeneratorSet& set,
                                const std::function<bool(const Generator&)>& pred) {
  for (const auto& g : set.generators)
    if (pred(g)) return &g;
  return nullptr;
}

bool provenance_matches(const Generator& g, const RatePoly& target) {
  for (const auto& p : g.provenance)
    if (positive_multiple(p.primitive.mul_monomial(p.content_monomial, p.content), target))
      return true;
  return false;
}

IdealOptions hints_for(const ReactionNetwork& net) {
  IdealOptions o;
  o.split_hints = complex_balance_conditions(net);
  return o;
}

Outcome criterion4() {
  Outcome o;
  {
    auto net = load("nw2");
    const auto& s = net.rate_symbols();
    KernelTable kt(net, 1, 3);
    auto set = ideal_level(net, kt, 1, 3);
    auto target = poly("beta^5*lambda1^2*alpha + beta^5*lambda1^3", s);
    if (!find_generator(set, [&](const Generator& g) { return provenance_matches(g, target); }))
      o.fail("NW2 I3 lacks beta^5*lambda1^2*(alpha+lambda1)");
  }
  {
    auto net = load("nw3");
    const auto& s = net.rate_symbols();
    KernelTable kt;
    kt.add_with_transients(net, 1);
    kt.add(net, 2);
    kt.add(net, 3);
    auto set = ideal_level(net, kt, 1, 3);
    auto target = poly("lambda2^3*alpha + 2*lambda2^3*lambda1", s);
    if (!find_generator(set, [&](const Generator& g) { return provenance_matches(g, target); }))
      o.fail("NW3 I3 lacks lambda2^3*(alpha+2*lambda1)");
  }
  {
    auto net = load("w4");
    const auto& s = net.rate_symbols();
    KernelTable kt(net, 2, 4);
    auto set = ideal_level(net, kt, 2, 4);
    auto target = canonical(poly("lambda1*lambda5^2 - lambda2*lambda3^2", s));
    if (!set.find(target)) o.fail("W4 I4 lacks lambda1*lambda5^2 - lambda2*lambda3^2");
  }
  {
    auto net = load("w3");
    const auto& s = net.rate_symbols();
    KernelTable kt(net, 1, 3);
    auto set = ideal_level(net, kt, 1, 3, hints_for(net));
    auto target = poly("alpha^2*lambda2 - beta^2*lambda1", s);
    auto hit = find_generator(set, [&](const Generator& g) {
      auto q = divide_exact(g.poly, target);
      return q && q->size() == 1;
    });
    if (!hit) o.fail("W3 I3 lacks monomial*(alpha^2*lambda2 - beta^2*lambda1)");
  }
  {
    auto net = load("nw4");
    const auto& s = net.rate_symbols();
    KernelTable kt(net, 3, 5);
    auto set = ideal_level(net, kt, 3, 5);
    auto linear = canonical(poly("6*lambda1 - 6*lambda2 + 7*lambda3", s));
    auto quadratic =
        canonical(poly("lambda3^2 + 2*lambda1*lambda3 - 6*lambda2*lambda3 + lambda1^2 - 5*lambda1*lambda2", s));
    if (!set.find(linear)) o.fail("NW4 I5 lacks 6*lambda1 - 6*lambda2 + 7*lambda3");
    if (!set.find(quadratic)) o.fail("NW4 I5 lacks the quadratic generator");
    auto cert = find_composite_certificate(set.generators);
    auto target = poly("24*lambda1^2 + 59*lambda1*lambda3 + 36*lambda3^2", s);
    if (!cert || !cert->polynomial || !positive_multiple(*cert->polynomial, target))
      o.fail("NW4 composite elimination does not give 24*lambda1^2 + 59*lambda1 + 36");
  }
  if (o.pass) o.detail = "NW2, NW3, W4, W3 elements and the NW4 resultant found by exact division";
  return o;
}

// ------------------------------------------------------------------ 5

Outcome criterion5() {
  Outcome o;
  auto net = load("nw1");
  const auto& s = net.rate_symbols();
  KernelTable kt(net, 2, 4);
  RelationInstance rel;
  rel.kind = RelationInstance::Kind::b;
  rel.base_level = 2;
  rel.x = {0, 2};
  rel.j = 0;
  rel.y = {0, 3};
  rel.z = {1, 1};
  rel.k = 0;
  rel.w = {1, 2};
  auto v = relation_value(rel, kt);
  if (!(v == poly("-144*alpha^3*beta^5", s))) o.fail("value is " + to_string(v, s));
  std::vector<Rational> ones(net.reaction_count(), Rational(1));
  auto at_one = evaluate(v, ones);
  if (at_one != -144) o.fail("residual at alpha=beta=1 is " + to_string(at_one));

  // Same residual from probabilities, rescaled by the normalizing sums of the
  // printed kernels.
  RateAssignment a{ones};
  std::map<std::int64_t, LevelDistribution> dist;
  for (std::int64_t l = 2; l <= 4; ++l) dist.emplace(l, exact_stationary(net, a, l));
  Rational lhs = 1, rhs = 1;
  for (const auto& p : rel.lhs()) lhs *= dist.at(p.level).at(p.state);
  for (const auto& p : rel.rhs()) rhs *= dist.at(p.level).at(p.state);
  std::map<std::int64_t, Rational> z;
  auto printed = nw1_kernels();
  for (std::int64_t l = 2; l <= 4; ++l) {
    z[l] = 0;
    for (const auto& e : printed[l - 2]) z[l] += evaluate(poly(e, s), ones);
  }
  Rational scale = 1;
  for (const auto& p : rel.lhs()) scale *= z[p.level];
  const Rational oracle = (lhs - rhs) * scale;
  if (oracle != -144) o.fail("probability residual rescales to " + to_string(oracle));
  if (o.pass) o.detail = "-144*alpha^3*beta^5, residual -144 (also from exact probabilities)";
  return o;
}

// ------------------------------------------------------------------ 6, 7

struct ComputedKernel {
  std::string network;
  IrreducibleComponent component;
  MasterMatrix matrix;
  KernelVector kernel;
};

struct KernelSweep {
  std::vector<ComputedKernel> kernels;
  std::vector<std::string> skipped;  // "name level l: reason"
};

const KernelBudget kSweepBudget{2'000'000, 5'000'000'000};

const KernelSweep& sweep() {
  static const KernelSweep s = [] {
    KernelSweep out;
    for (const auto& name : kCorpus) {
      auto net = load(name);
      bool stop = false;
      for (std::int64_t l = 1; l <= 5 && !stop; ++l) {
        for (const auto& comp : decompose_level(net, l).components) {
          auto a = master_matrix(net, comp);
          try {
            auto h = kernel_vector(a, kSweepBudget);
            out.kernels.push_back({name, comp, std::move(a), std::move(h)});
          } catch (const BudgetExceeded&) {
            out.skipped.push_back(name + " level " + std::to_string(l));
            stop = true;
            break;
          }
        }
      }
    }
    return out;
  }();
  return s;
}

Outcome criterion6() {
  Outcome o;
  const auto& s = sweep();
  std::size_t checks = 0;
  std::map<std::string, ReactionNetwork> nets;
  for (const auto& name : kCorpus) nets.emplace(name, load(name));
  for (const auto& ck : s.kernels) {
    const auto& net = nets.at(ck.network);
    std::mt19937_64 rng(0xACCE97 + ck.component.level);
    for (int p = 0; p < 100; ++p) {
      auto a = random_rates(net, rng);
      auto lhs = stationary_eval(ck.kernel, a.values);
      auto rhs = exact_stationary(net, a, ck.component);
      ++checks;
      if (lhs != rhs) {
        o.fail(ck.network + " level " + std::to_string(ck.component.level) + " differs at " +
               format_rates(net, a));
        break;
      }
    }
  }
  for (const auto& sk : s.skipped) o.fail("no symbolic kernel for " + sk + " within the work budget");
  o.detail = (o.pass ? "" : o.detail + "; ") + std::to_string(checks) + " exact comparisons over " +
             std::to_string(s.kernels.size()) + " components agree";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto& s = sweep();
  std::map<std::string, ReactionNetwork> nets;
  for (const auto& name : kCorpus) nets.emplace(name, load(name));
  for (const auto& ck : s.kernels) {
    const auto& net = nets.at(ck.network);
    auto where = ck.network + " level " + std::to_string(ck.component.level);
    std::optional<std::uint32_t> degree;
    RatePoly g;
    for (const auto& e : ck.kernel.entries) {
      auto hd = homogeneous_degree(e);
      if (!hd.degree || (degree && *degree != *hd.degree)) o.fail(where + ": not homogeneous of one degree");
      degree = hd.degree;
      if (sign_summary(e) != SignSummary::all_positive) o.fail(where + ": coefficient not positive");
      if (g.nvars() == 0) g = e;
      else if (!g.is_constant()) g = gcd(g, e);
    }
    if (!g.is_constant()) o.fail(where + ": entries share a factor");
    if (!column_sums_vanish(ck.matrix)) o.fail(where + ": column sums");
    if (!annihilates(ck.matrix, ck.kernel)) o.fail(where + ": A h != 0");
    std::mt19937_64 rng(99);
    auto a = random_rates(net, rng);
    detail::Matrix m(ck.matrix.m, detail::RowVec(ck.matrix.m));
    for (std::size_t r = 0; r < ck.matrix.m; ++r)
      for (std::size_t c = 0; c < ck.matrix.m; ++c) m[r][c] = evaluate(ck.matrix.at(r, c), a.values);
    if (detail::rank(m, ck.matrix.m) + 1 != ck.matrix.m) o.fail(where + ": rank is not m-1");
  }
  o.detail = (o.pass ? "" : o.detail + "; ") + std::to_string(s.kernels.size()) +
             " kernels homogeneous, positive, coprime; zero column sums; rank m-1";
  return o;
}

// ------------------------------------------------------------------ 8

Outcome criterion8() {
  Outcome o;
  std::size_t points = 0, agree_pf = 0;
  std::string used;
  for (const auto& name : kCorpus) {
    auto net = load(name);
    if (!conserves_total_count(net) || index_profile(net, 6).q != 1) continue;
    used += (used.empty() ? "" : " ") + name;
    std::mt19937_64 rng(0xF17 + points);
    for (int p = 0; p < 20; ++p) {
      auto a = random_rates(net, rng);
      auto fit = product_form_fit(net, a, 6);
      bool fits = fit.consistent_through >= 6;
      bool vanish = relation_residuals(net, a, 1, 6).all_zero();
      ++points;
      if (fits != vanish) {
        o.fail(name + " at " + format_rates(net, a) + ": fit " + (fits ? "ok" : "fails") +
               ", relations " + (vanish ? "vanish" : "violated"));
        break;
      }
      if (fits) ++agree_pf;
    }
  }
  o.detail = (o.pass ? "" : o.detail + "; ") + std::to_string(points) + " points on " + used +
             " (" + std::to_string(agree_pf) + " product form)";
  return o;
}

// ------------------------------------------------------------------ 9

Outcome criterion9() {
  Outcome o;
  auto ex = load("ex28");
  const auto alpha = ex.rate_index("alpha"), beta = ex.rate_index("beta"),
             gamma = ex.rate_index("gamma");
  std::mt19937_64 rng(28);
  std::uniform_int_distribution<int> d(1, 20);
  auto rational = [&] { return Rational(d(rng), d(rng)); };
  int on = 0, off = 0;
  while (on < 50) {
    RateAssignment a;
    a.values.assign(3, Rational(0));
    a.values[alpha] = rational();
    a.values[gamma] = rational();
    a.values[alpha].canonicalize();
    a.values[gamma].canonicalize();
    a.values[beta] = a.values[gamma] * a.values[gamma] / a.values[alpha];
    if (!complex_balance(ex, a).balanced) o.fail("on gamma^2 = alpha*beta but unbalanced: " + format_rates(ex, a));
    ++on;
  }
  while (off < 50) {
    auto a = random_rates(ex, rng);
    if (a[gamma] * a[gamma] == a[alpha] * a[beta]) continue;
    if (complex_balance(ex, a).balanced) o.fail("off gamma^2 = alpha*beta but balanced: " + format_rates(ex, a));
    ++off;
  }
  auto w1 = load("w1");
  for (int p = 0; p < 100; ++p) {
    auto a = random_rates(w1, rng);
    if (!complex_balance(w1, a).balanced) o.fail("W1 unbalanced at " + format_rates(w1, a));
  }
  if (o.pass) o.detail = "50 on-variety balanced, 50 off-variety unbalanced, W1 balanced at 100 points";
  return o;
}

// ------------------------------------------------------------------ 10

Outcome criterion10() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<Shape>>> table{
      {"w1", {Shape::g1, Shape::g1}},
      {"w2", {Shape::g2, Shape::g1}},
      {"w5", {Shape::g2, Shape::g1, Shape::g2}},
      {"w6", {Shape::g2, Shape::g1, Shape::g2, Shape::g1}},
      {"nw6", {Shape::g3, Shape::g1}},
      {"nw7", {Shape::g4, Shape::g1}},
      {"nw8", {Shape::g4, Shape::g4}},
      {"nw9", {Shape::g4, Shape::g3}},
      {"nw10", {Shape::g3, Shape::g3}},
  };
  std::size_t matched = 0;
  for (const auto& [name, want] : table) {
    auto net = load(name);
    std::mt19937_64 rng(7);
    auto a = random_rates(net, rng);
    auto fit = product_form_fit(net, a, 6);
    if (fit.consistent_through < 6) {
      o.fail(name + ": no product form at " + format_rates(net, a) + " (fit stops at level " +
             std::to_string(fit.consistent_through) + ")");
      continue;
    }
    auto labels = shape_classify(fit);
    std::string got;
    bool same = labels.size() == want.size();
    for (std::size_t s = 0; s < labels.size(); ++s) {
      got += (s ? "," : "") + std::string(to_string(labels[s].shape));
      same = same && labels[s].shape == want[s];
      auto rebuilt = shape_table(labels[s], fit.f_tables[s][0], fit.f_tables[s].size());
      if (rebuilt != fit.f_tables[s]) o.fail(name + ": f-table of species " + std::to_string(s) + " not reproduced");
    }
    if (same) {
      ++matched;
    } else {
      std::string exp;
      for (std::size_t s = 0; s < want.size(); ++s) exp += (s ? "," : "") + std::string(to_string(want[s]));
      o.fail(name + " fitted (" + got + "), table (" + exp + ")");
    }
  }
  o.detail = (o.pass ? "" : o.detail + "; ") + std::to_string(matched) + "/" +
             std::to_string(table.size()) + " rows match";
  return o;
}

// ------------------------------------------------------------------ 11

struct Malformed {
  std::string text;
  std::size_t line, column;
};

int run_cli(const std::string& args, std::string& output) {
  std::string cmd = std::string(PFCRN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start the command-line tool");
  char buf[4096];
  output.clear();
  while (auto n = fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion11() {
  Outcome o;
  for (const auto& name : kCorpus) {
    auto net = load(name);
    auto text = render_network(net);
    auto again = parse_network({text, name + " (rendered)"});
    if (!again.ok() || !structurally_identical(net, *again.network) ||
        render_network(*again.network) != text)
      o.fail(name + " does not round-trip");
  }
  const std::vector<Malformed> cases{
      {"S1 -> S2\n", 1, 9},
      {"S1 -> S2 [k1\n", 1, 13},
      {"S1 <-> S2 [k1]\n", 1, 4},
      {"S1 -> S1 [k]\n", 1, 4},
      {"0 S1 -> S2 [k]\n", 1, 1},
      {"S1 -> S2 [k]\nS2 -> S3 [k]\n", 2, 11},
      {"S1 => S2 [k]\n", 1, 4},
      {"S1 + -> S2 [k]\n", 1, 6},
      {"S1 -> S2 [k1, k2]\n", 1, 15},
      {"S1 \xe2\x86\x92 S2 [k]\n", 1, 4},
      {"S1 -> S2 [k] extra\n", 1, 14},
      {"# comment\n\nS1 -> 2 [k]\n", 3, 9},
  };
  auto dir = std::string(PFCRN_SCRATCH_DIR);
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    auto res = parse_network({c.text, "case"});
    bool located = false;
    for (const auto& d : res.diagnostics)
      located = located || (d.severity == ParseDiagnostic::Severity::error && d.line == c.line &&
                            d.column == c.column);
    if (res.ok() || !located) {
      std::string got = res.diagnostics.empty() ? "none" : res.diagnostics.front().format("case");
      o.fail("case " + std::to_string(i) + " expected error at " + std::to_string(c.line) + ":" +
             std::to_string(c.column) + ", got " + got);
      continue;
    }
    auto path = dir + "/malformed_" + std::to_string(i) + ".crn";
    std::ofstream(path) << c.text;
    std::string out;
    int code = run_cli("info " + path, out);
    auto want = path + ":" + std::to_string(c.line) + ":" + std::to_string(c.column) + ": error:";
    if (code != 1 || out.find(want) == std::string::npos)
      o.fail("case " + std::to_string(i) + ": tool exited " + std::to_string(code) + " with '" + out + "'");
  }
  if (o.pass)
    o.detail = std::to_string(kCorpus.size()) + " corpus files round-trip; " +
               std::to_string(cases.size()) + " malformed inputs located, exit code 1";
  return o;
}

}  // namespace

// With arguments, only the listed criterion numbers run.
int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"kernel golden values", criterion1},
      {"master matrices", criterion2},
      {"classification table", criterion3},
      {"ideal elements", criterion4},
      {"worked relation", criterion5},
      {"kernel vs exact stationary", criterion6},
      {"kernel properties", criterion7},
      {"fit iff relations vanish", criterion8},
      {"complex balance", criterion9},
      {"shape table", criterion10},
      {"parser", criterion11},
  };
  std::vector<bool> selected(criteria.size(), argc == 1);
  for (int k = 1; k < argc; ++k) {
    auto n = std::strtoul(argv[k], nullptr, 10);
    if (n >= 1 && n <= criteria.size()) selected[n - 1] = true;
  }
  int passed = 0, crashed = 0, ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i]) continue;
    ++ran;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("could not evaluate: ") + e.what());
      ++crashed;
    }
    passed += o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << ", " << std::fixed;
    std::cout.precision(2);
    std::cout << seconds_since(t0) << " s): " << o.detail << std::endl;
  }
  std::cout << passed << "/" << ran << " criteria pass" << std::endl;
  return crashed ? 1 : 0;
}
