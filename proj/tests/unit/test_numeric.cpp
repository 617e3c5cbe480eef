#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcrn/classifier.hpp"
#include "pfcrn/error.hpp"
#include "pfcrn/numeric.hpp"
#include "support/corpus.hpp"

#include <random>

using namespace pfcrn;
using testing_support::load_corpus;

namespace {

Rational factorial(std::int64_t k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f);
}

Rational power(const Rational& c, std::int64_t k) {
  Rational r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= c;
  return r;
}

// Product of Poisson weights c^x / x!, normalized over the states given.
std::vector<Rational> poisson_product(const std::vector<State>& states,
                                      const std::vector<Rational>& c) {
  std::vector<Rational> w;
  Rational sum = 0;
  for (const auto& x : states) {
    Rational v = 1;
    for (std::size_t i = 0; i < x.size(); ++i) v *= power(c[i], x[i]) / factorial(x[i]);
    w.push_back(v);
    sum += v;
  }
  for (auto& v : w) v /= sum;
  return w;
}

}  // namespace

TEST_CASE("independent particles give a product of Poisson weights") {
  auto net = load_corpus("w1");
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_rates(net, rng);
    // alpha c1 = beta c2
    std::vector<Rational> c{a[1], a[0]};
    for (std::int64_t l = 1; l <= 6; ++l) {
      auto d = exact_stationary(net, a, l);
      CHECK(d.pi == poisson_product(d.component.states, c));
    }
  }
}

TEST_CASE("complex-balanced rates give Poisson weights on every closed class") {
  for (const std::string name : testing_support::kCorpus) {
    auto net = load_corpus(name);
    auto cb = complex_balanced_rates(net);
    if (!cb) continue;
    CAPTURE(name);
    std::vector<Rational> ones(net.species_count(), 1);
    for (std::int64_t l = 1; l <= 4; ++l)
      for (const auto& comp : decompose_level(net, l).components)
        CHECK(exact_stationary(net, *cb, comp) == poisson_product(comp.states, ones));
  }
}

TEST_CASE("stationary vectors balance probability flow") {
  std::mt19937_64 rng(8);
  for (const std::string name : {"nw1", "nw9", "ex28", "nw12"}) {
    CAPTURE(name);
    auto net = load_corpus(name);
    auto a = random_rates(net, rng);
    auto comp = decompose_level(net, 3).components.at(0);
    auto pi = exact_stationary(net, a, comp);
    std::vector<Rational> net_flow(comp.size(), 0);
    for (const auto& t : comp.transitions) {
      const Rational flow = pi[t.from] * Rational(t.coeff) * a[t.reaction];
      net_flow[t.from] -= flow;
      net_flow[t.to] += flow;
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      CHECK(net_flow[i] == 0);
      CHECK(pi[i] > 0);
      sum += pi[i];
    }
    CHECK(sum == 1);
  }
}

TEST_CASE("level distributions") {
  auto net = load_corpus("nw1");
  std::mt19937_64 rng(2);
  auto a = random_rates(net, rng);
  auto d = exact_stationary(net, a, 1);
  CHECK(d.at({0, 1}) == 1);
  CHECK(d.at({1, 0}) == 0);
  CHECK(d.at({5, 5}) == 0);
  auto multi = testing_support::network("A -> B [k]\nC -> D [j]");
  CHECK_THROWS_AS(exact_stationary(multi, parse_rates(multi, "k=1,j=1"), 2), InvalidArgument);
}

TEST_CASE("product-form fit of independent particles") {
  auto net = load_corpus("w1");
  auto a = parse_rates(net, "alpha=2,beta=3");
  auto fit = product_form_fit(net, a, 6);
  CHECK(fit.consistent_through == 6);
  CHECK_FALSE(fit.first_failure.has_value());
  // f_i(m) = f_i(1)^m / m! with f_1(1) = 3/5, f_2(1) = 2/5
  const Rational f1[] = {Rational(3, 5), Rational(2, 5)};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::int64_t m = 0; m <= 6; ++m)
      CHECK(fit.f_tables[i][static_cast<std::size_t>(m)] == power(f1[i], m) / factorial(m));
  auto shapes = shape_classify(fit);
  REQUIRE(shapes.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(shapes[i].shape == Shape::g1);
    auto table = shape_table(shapes[i], 1, 7);
    CHECK(table == fit.f_tables[i]);
  }
}

TEST_CASE("product-form fit reports the first inconsistency") {
  auto net = load_corpus("nw9");
  auto fit = product_form_fit(net, parse_rates(net, "alpha=1,beta=2,lambda5=3,lambda4=5"), 5);
  REQUIRE(fit.first_failure.has_value());
  CHECK(fit.consistent_through < 5);
  CHECK(fit.first_failure->residual != 0);
  CHECK_THROWS_AS(product_form_fit(load_corpus("nw1"), parse_rates(load_corpus("nw1"), "beta=1,alpha=1"), 4),
                  InvalidArgument);
}

TEST_CASE("relation residuals") {
  std::mt19937_64 rng(6);
  auto w1 = load_corpus("w1");
  auto rep = relation_residuals(w1, random_rates(w1, rng), 5);
  CHECK(rep.all_zero());
  CHECK(rep.q == 1);
  REQUIRE(rep.levels.size() == 4);
  CHECK(rep.levels.front().level == 2);
  CHECK(rep.levels.back().level == 5);
  // two species: kind a needs x = y across levels, kind b needs base >= q
  CHECK(rep.levels.front().checked == 0);
  for (std::size_t i = 1; i < rep.levels.size(); ++i) CHECK(rep.levels[i].checked > 0);

  auto nw1 = load_corpus("nw1");
  auto bad = relation_residuals(nw1, random_rates(nw1, rng), 5);
  CHECK(bad.q == 2);
  REQUIRE_FALSE(bad.all_zero());
  CHECK(bad.first_violation->residual != 0);
  CHECK(bad.first_violation->instance.base_level >= 2);
}
