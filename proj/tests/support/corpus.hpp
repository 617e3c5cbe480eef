#pragma once

#include "pfcrn/parser.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testing_support {

inline pfcrn::ReactionNetwork network(const std::string& text) {
  auto res = pfcrn::parse_network({text, "<test>"});
  if (!res.ok()) throw std::runtime_error("test network does not parse: " + text);
  return *res.network;
}

inline pfcrn::ReactionNetwork load_corpus(const std::string& name) {
  std::ifstream in(std::string(PFCRN_CORPUS_DIR) + "/" + name + ".crn");
  if (!in) throw std::runtime_error("missing corpus file " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return network(ss.str());
}

inline const char* const kCorpus[] = {"w1",  "w2",  "w3",  "w4",  "w5",  "w6",  "mm",
                                      "ex28", "nw1", "nw2", "nw3", "nw4", "nw5", "nw6",
                                      "nw7", "nw8", "nw9", "nw10", "nw11", "nw12"};

}  // namespace testing_support
