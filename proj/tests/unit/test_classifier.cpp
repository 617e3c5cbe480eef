#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcrn/classifier.hpp"
#include "pfcrn/error.hpp"
#include "support/corpus.hpp"
#include "support/poly_text.hpp"

#include <random>

using namespace pfcrn;
using testing_support::load_corpus;
using testing_support::poly;

namespace {

bool has_kind(const ClassificationReport& r, Certificate::Kind k) {
  for (const auto& c : r.certificates)
    if (c.kind == k) return true;
  return false;
}

}  // namespace

TEST_CASE("deficiency zero and weak reversibility certify type I") {
  for (const std::string name : {"w1", "mm"}) {
    CAPTURE(name);
    auto net = load_corpus(name);
    auto r = classify(net);
    CHECK(r.verdict == Verdict::I);
    CHECK(r.certainty.certified);
    CHECK(has_kind(r, Certificate::Kind::deficiency_zero_wr));
    for (const auto& c : r.certificates) CHECK(verify_certificate(net, c));
  }
}

TEST_CASE("two-species examples with some but not all product-form rates") {
  for (const std::string name : {"w3", "w4"}) {
    CAPTURE(name);
    auto net = load_corpus(name);
    auto r = classify(net);
    CHECK(r.verdict == Verdict::E);
    CHECK(r.certainty.certified);
    CHECK(has_kind(r, Certificate::Kind::complex_balance_witness));
    CHECK(has_kind(r, Certificate::Kind::relation_violation_witness));
    for (const auto& c : r.certificates) CHECK(verify_certificate(net, c));
  }
}

TEST_CASE("type N certificates, independently re-checked") {
  for (const std::string name : {"nw1", "nw2", "nw3"}) {
    CAPTURE(name);
    auto net = load_corpus(name);
    auto r = classify(net);
    CHECK(r.verdict == Verdict::N);
    CHECK(r.certainty.certified);
    REQUIRE(has_kind(r, Certificate::Kind::no_positive_root));
    for (const auto& c : r.certificates) {
      CHECK(verify_certificate(net, c));
      if (c.kind != Certificate::Kind::no_positive_root || !c.polynomial) continue;
      auto s = sign_summary(*c.polynomial);
      CHECK((s == SignSummary::all_positive || s == SignSummary::all_negative));
      auto tampered = c;
      const Rational push = s == SignSummary::all_positive ? -1000000 : 1000000;
      tampered.polynomial = *c.polynomial + RatePoly::variable(c.polynomial->nvars(), 0) * push;
      CHECK_FALSE(verify_certificate(net, tampered));
    }
  }
}

TEST_CASE("type N holds at every sampled rate") {
  std::mt19937_64 rng(31);
  for (const std::string name : {"nw1", "nw2", "nw4", "nw5"}) {
    CAPTURE(name);
    auto net = load_corpus(name);
    for (int trial = 0; trial < 8; ++trial) {
      auto a = random_rates(net, rng, 15);
      auto w = witness_check(net, a, 5);
      CHECK_FALSE(w.product_form_consistent);
      CHECK(w.violation.has_value());
    }
  }
}

TEST_CASE("relation consistency coincides with complex balance") {
  std::mt19937_64 rng(41);
  for (const std::string name : {"w3", "w4"}) {
    CAPTURE(name);
    auto net = load_corpus(name);
    std::vector<RateAssignment> points;
    points.push_back(*complex_balanced_rates(net));
    for (int t = 0; t < 6; ++t) points.push_back(random_rates(net, rng, 10));
    // a second balanced point: scale one linkage class
    auto scaled = *complex_balanced_rates(net);
    scaled.values[0] *= 3;
    scaled.values[1] *= 3;
    points.push_back(scaled);
    for (const auto& a : points) {
      CAPTURE(format_rates(net, a));
      const bool balanced = complex_balance(net, a).balanced;
      CHECK(witness_check(net, a, 5).product_form_consistent == balanced);
    }
    CHECK(complex_balance(net, points[0]).balanced);
    CHECK(complex_balance(net, scaled).balanced);
  }
}

TEST_CASE("tree constants") {
  auto net = load_corpus("w1");
  auto sym = tree_constants(net);
  REQUIRE(sym.size() == 2);
  CHECK(sym[0] == RatePoly::variable(2, 1));
  CHECK(sym[1] == RatePoly::variable(2, 0));

  std::mt19937_64 rng(12);
  for (const std::string name : {"w3", "w5", "ex28", "mm"}) {
    auto n = load_corpus(name);
    auto symbolic = tree_constants(n);
    auto a = random_rates(n, rng);
    auto numeric = tree_constants(n, a);
    REQUIRE(symbolic.size() == numeric.size());
    for (std::size_t i = 0; i < numeric.size(); ++i) CHECK(evaluate(symbolic[i], a.values) == numeric[i]);
  }
  // three-cycle: trees into A are B->C->A and B->A<-C
  auto cyc = testing_support::network("A -> B [a]\nB -> C [b]\nC -> A [c]");
  auto k = tree_constants(cyc, parse_rates(cyc, "a=2,b=3,c=5"));
  CHECK(k[0] == 3 * 5);
  CHECK(k[1] == 5 * 2);
  CHECK(k[2] == 2 * 3);
}

TEST_CASE("balance lattice vectors satisfy both constraints") {
  for (const std::string name : {"w3", "w4", "w5", "w6", "ex28"}) {
    CAPTURE(name);
    auto net = load_corpus(name);
    auto classes = linkage_classes(net);
    for (const auto& v : balance_lattice(net)) {
      REQUIRE(v.size() == net.complex_count());
      for (std::size_t s = 0; s < net.species_count(); ++s) {
        Integer sum = 0;
        for (std::size_t e = 0; e < v.size(); ++e) sum += v[e] * net.complexes()[e].coeffs[s];
        CHECK(sum == 0);
      }
      for (const auto& cls : classes) {
        Integer sum = 0;
        for (auto e : cls) sum += v[e];
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("single-sign and composite certificates") {
  const std::vector<std::string> s{"a", "b"};
  CHECK(no_positive_root_certificate(poly("a + 2*b", s)).has_value());
  CHECK(no_positive_root_certificate(poly("-a*b - 1", s)).has_value());
  CHECK_FALSE(no_positive_root_certificate(poly("a - b", s)).has_value());
  CHECK_THROWS_AS(no_positive_root_certificate(RatePoly(2)), InvalidArgument);

  // a = b on the first; the second becomes 2b
  CHECK(composite_certificate(poly("a - b", s), poly("a + b", s), 0).has_value());
  // a = b; b - b^2 has the root b = 1
  CHECK_FALSE(composite_certificate(poly("a - b", s), poly("a - b^2", s), 0).has_value());
  auto cert = composite_certificate(poly("a - 2*b", s), poly("a^2 - 3*b^2", s), 0);
  REQUIRE(cert.has_value());
  CHECK(cert->kind == Certificate::Kind::no_positive_root);
}

TEST_CASE("classification is deterministic for a seed") {
  auto net = load_corpus("w3");
  ClassifyOptions opt;
  opt.seed = 9;
  auto r1 = classify(net, opt), r2 = classify(net, opt);
  CHECK(r1.verdict == r2.verdict);
  REQUIRE(r1.certificates.size() == r2.certificates.size());
  for (std::size_t i = 0; i < r1.certificates.size(); ++i) {
    CHECK(r1.certificates[i].kind == r2.certificates[i].kind);
    CHECK(r1.certificates[i].rates == r2.certificates[i].rates);
  }
}

TEST_CASE("user-supplied witness rates") {
  auto net = load_corpus("w3");
  ClassifyOptions opt;
  opt.witness_rates.push_back(*complex_balanced_rates(net));
  auto r = classify(net, opt);
  CHECK(r.verdict == Verdict::E);
  bool used = false;
  for (const auto& c : r.certificates)
    if (c.kind == Certificate::Kind::complex_balance_witness && c.rates == opt.witness_rates[0])
      used = true;
  CHECK(used);
}
