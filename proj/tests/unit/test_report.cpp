#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcrn/error.hpp"
#include "pfcrn/report.hpp"
#include "support/corpus.hpp"
#include "support/poly_text.hpp"

using namespace pfcrn;
using testing_support::load_corpus;
using testing_support::poly;

TEST_CASE("symbol display") {
  CHECK(display_symbol("alpha") == "α");
  CHECK(display_symbol("beta") == "β");
  CHECK(display_symbol("lambda1") == "λ₁");
  CHECK(display_symbol("lambda12") == "λ₁₂");
  CHECK(display_symbol("k1") == "k1");
  CHECK(display_symbol("rate") == "rate");
}

TEST_CASE("factored polynomial display") {
  const std::vector<std::string> s{"alpha", "beta"};
  CHECK(display(poly("6*alpha^2 + 3*alpha*beta", s), s) == "3α(2α+β)");
  CHECK(display(poly("4*alpha^2", s), s) == "4α²");
  CHECK(display(poly("6*alpha*beta", s), s) == "6αβ");
  CHECK(display(poly("alpha + beta", s), s) == "α+β");
  CHECK(display(RatePoly::constant(2, 1), s) == "1");
}

TEST_CASE("state formatting") {
  CHECK(format_state({1, 2}) == "(1,2)");
  CHECK(format_state({0, 0, 3}) == "(0,0,3)");
}

TEST_CASE("kernel command output") {
  auto net = load_corpus("nw1");
  RunConfig cfg;
  cfg.command = Command::kernel;
  cfg.level = 3;
  CHECK(run(net, cfg) == "(4α², 3α(2α+β), 6αβ, β²)\n");

  cfg.format = Format::json;
  auto j = Json::parse(run(net, cfg));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["level"] == 3);
  CHECK(j[0]["degree"] == 2);
  CHECK(j[0]["entries"][1] == "3*beta*alpha + 6*alpha^2");
  CHECK(j[0]["states"][0] == Json::array({3, 0}));
}

TEST_CASE("classification JSON") {
  auto net = load_corpus("nw2");
  RunConfig cfg;
  cfg.command = Command::classify;
  cfg.format = Format::json;
  const auto text = run(net, cfg);
  CHECK(text == run(net, cfg));
  auto j = Json::parse(text);
  CHECK(j["verdict"] == "N");
  CHECK(j["certainty"] == "certified");
  REQUIRE(j["certificates"].size() >= 1);
  CHECK(j["certificates"][0]["kind"] == "no_positive_root");
  CHECK(j["certificates"][0]["level"] == 3);
  CHECK(text.find("timings") == std::string::npos);
  cfg.timings = true;
  CHECK(Json::parse(run(net, cfg)).contains("timings"));
}

TEST_CASE("info text") {
  RunConfig cfg;
  auto text = run(load_corpus("mm"), cfg);
  CHECK(text.find("deficiency: 0\n") != std::string::npos);
  CHECK(text.find("conservation: (1, 1, 2, 1)\n") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("options the command cannot use") {
  auto net = load_corpus("w1");
  RunConfig cfg;
  cfg.command = Command::verify;
  CHECK_THROWS_AS(run(net, cfg), InvalidArgument);
  cfg.command = Command::fit;
  CHECK_THROWS_AS(run(net, cfg), InvalidArgument);
  cfg.command = Command::kernel;
  cfg.levels = 1;
  CHECK_THROWS_AS(run(net, cfg), InvalidArgument);
}

TEST_CASE("verify and fit reports") {
  auto net = load_corpus("w1");
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.levels = 3;
  cfg.rates = parse_rates(net, "alpha=1,beta=2");
  auto text = run(net, cfg);
  CHECK(text.find("all vanish") != std::string::npos);
  CHECK(text.find("complex balanced: yes") != std::string::npos);

  cfg.command = Command::fit;
  cfg.levels = 4;
  text = run(net, cfg);
  CHECK(text.find("S1: f = 1, 2/3, 2/9, 4/81, 2/243  [g1]") != std::string::npos);
}
