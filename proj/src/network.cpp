#include "pfcrn/network.hpp"

#include "pfcrn/error.hpp"

#include <algorithm>
#include <numeric>

namespace pfcrn {

std::int32_t Complex::molecularity() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), std::int32_t{0});
}

std::size_t ReactionNetwork::intern_species(const std::string& name) {
  auto idx = species_index(name);
  if (idx != std::string::npos) return idx;
  species_.push_back(name);
  for (auto& c : complexes_) c.coeffs.push_back(0);
  return species_.size() - 1;
}

std::size_t ReactionNetwork::intern_complex(
    const std::vector<std::pair<std::string, std::int32_t>>& terms) {
  for (const auto& [name, coeff] : terms) {
    if (coeff <= 0) throw InvalidArgument("stoichiometric coefficient must be positive");
    intern_species(name);
  }
  Complex c;
  c.coeffs.assign(species_.size(), 0);
  for (const auto& [name, coeff] : terms) c.coeffs[species_index(name)] += coeff;
  auto it = std::find(complexes_.begin(), complexes_.end(), c);
  if (it != complexes_.end()) return static_cast<std::size_t>(it - complexes_.begin());
  complexes_.push_back(std::move(c));
  return complexes_.size() - 1;
}

void ReactionNetwork::add_reaction(
    const std::vector<std::pair<std::string, std::int32_t>>& reactant,
    const std::vector<std::pair<std::string, std::int32_t>>& product,
    const std::string& rate_symbol, std::size_t line) {
  if (rate_index(rate_symbol) != std::string::npos)
    throw InvalidArgument("rate symbol '" + rate_symbol + "' is already bound to another reaction");
  // Validate on a copy so a rejected reaction leaves the network untouched.
  ReactionNetwork next = *this;
  Reaction r;
  r.reactant = next.intern_complex(reactant);
  r.product = next.intern_complex(product);
  if (r.reactant == r.product) throw InvalidArgument("reactant equals product");
  for (const auto& other : next.reactions_)
    if (other.reactant == r.reactant && other.product == r.product)
      throw InvalidArgument("duplicate reaction");
  next.rate_symbols_.push_back(rate_symbol);
  r.rate = next.rate_symbols_.size() - 1;
  r.line = line;
  next.reactions_.push_back(r);
  *this = std::move(next);
}

State ReactionNetwork::reaction_vector(const Reaction& r) const {
  State v(species_.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = complexes_[r.product].coeffs[i] - complexes_[r.reactant].coeffs[i];
  return v;
}

std::size_t ReactionNetwork::species_index(const std::string& name) const {
  auto it = std::find(species_.begin(), species_.end(), name);
  return it == species_.end() ? std::string::npos : static_cast<std::size_t>(it - species_.begin());
}

std::size_t ReactionNetwork::rate_index(const std::string& name) const {
  auto it = std::find(rate_symbols_.begin(), rate_symbols_.end(), name);
  return it == rate_symbols_.end() ? std::string::npos
                                   : static_cast<std::size_t>(it - rate_symbols_.begin());
}

}  // namespace pfcrn
