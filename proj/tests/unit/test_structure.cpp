#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pfcrn/structure.hpp"
#include "support/corpus.hpp"

using namespace pfcrn;
using testing_support::load_corpus;
using testing_support::network;

namespace {

std::vector<Rational> ints(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("deficiency counts") {
  struct Row {
    const char* name;
    std::size_t complexes, linkage, s, delta;
    Reversibility rev;
  };
  const Row rows[] = {
      {"w1", 2, 1, 1, 0, Reversibility::reversible},
      {"w3", 4, 2, 1, 1, Reversibility::reversible},
      {"w4", 3, 1, 1, 1, Reversibility::reversible},
      {"nw1", 4, 2, 1, 1, Reversibility::non_weakly_reversible},
      {"nw2", 4, 2, 1, 1, Reversibility::non_weakly_reversible},
      {"mm", 3, 1, 2, 0, Reversibility::reversible},
      {"ex28", 3, 1, 1, 1, Reversibility::weakly_reversible},
      {"w5", 7, 3, 2, 2, Reversibility::reversible},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    auto net = load_corpus(r.name);
    CHECK(net.complex_count() == r.complexes);
    CHECK(linkage_classes(net).size() == r.linkage);
    CHECK(stoich_subspace_dim(net) == r.s);
    CHECK(deficiency(net) == r.delta);
    CHECK(reversibility_class(net) == r.rev);
    auto rep = analyze_structure(net);
    CHECK(rep.deficiency == r.delta);
    CHECK(rep.linkage_count == r.linkage);
  }
}

TEST_CASE("linkage classes list complexes by first appearance") {
  auto lc = linkage_classes(load_corpus("nw1"));
  REQUIRE(lc.size() == 2);
  CHECK(lc[0] == std::vector<std::size_t>{0, 1});
  CHECK(lc[1] == std::vector<std::size_t>{2, 3});
  auto cyc = network("A -> B [a]\nC -> D [c]\nB -> C [b]");
  auto lc2 = linkage_classes(cyc);
  REQUIRE(lc2.size() == 1);
  CHECK(lc2[0] == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("weak reversibility of a cycle") {
  auto net = network("A -> B [a]\nB -> C [b]\nC -> A [c]");
  CHECK(reversibility_class(net) == Reversibility::weakly_reversible);
  CHECK(deficiency(net) == 0);
}

TEST_CASE("conservation vectors are positive and orthogonal to every reaction") {
  for (const std::string name : testing_support::kCorpus) {
    CAPTURE(name);
    auto net = load_corpus(name);
    auto w = conservation_vector(net);
    REQUIRE(w.has_value());
    REQUIRE(w->size() == net.species_count());
    for (const auto& x : *w) CHECK(x > 0);
    for (const auto& r : net.reactions()) {
      auto v = net.reaction_vector(r);
      Rational dot = 0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += (*w)[i] * v[i];
      CHECK(dot == 0);
    }
  }
}

TEST_CASE("canonical conservation vectors") {
  CHECK(*conservation_vector(load_corpus("mm")) == ints({1, 1, 2, 1}));
  CHECK(*conservation_vector(load_corpus("w6")) == ints({1, 1, 1, 1}));
  CHECK(conserves_total_count(load_corpus("w6")));
  CHECK_FALSE(conserves_total_count(load_corpus("mm")));
  auto rays = conservation_rays(load_corpus("mm"));
  CHECK(rays.size() == 2);
  for (const auto& r : rays)
    for (const auto& x : r) CHECK(x >= 0);
}

TEST_CASE("open networks have no conservation vector") {
  auto net = network("0 -> A [k]\nA -> 0 [g]");
  CHECK_FALSE(conservation_vector(net).has_value());
  CHECK_FALSE(analyze_structure(net).conservation.has_value());
  CHECK_FALSE(conservation_vector(network("S1 -> 2 S1 [k]")).has_value());
  auto partial = network("A -> B [k]\nB -> 0 [g]");
  CHECK_FALSE(conservation_vector(partial).has_value());
}
