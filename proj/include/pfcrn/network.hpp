#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pfcrn {

// A point of Z^n_{>=0}: molecule counts, or the stoichiometric coefficients of
// a complex.
using State = std::vector<std::int32_t>;

struct Complex {
  State coeffs;

  std::int32_t molecularity() const;
  bool operator==(const Complex&) const = default;
  auto operator<=>(const Complex&) const = default;
};

struct Reaction {
  std::size_t reactant = 0;  // index into ReactionNetwork::complexes()
  std::size_t product = 0;
  std::size_t rate = 0;      // index into ReactionNetwork::rate_symbols()
  std::size_t line = 0;      // source line, 0 when built programmatically

  // Source lines do not take part in equality.
  bool operator==(const Reaction& o) const {
    return reactant == o.reactant && product == o.product && rate == o.rate;
  }
};

// Species, complexes and reactions. Species order is the coordinate order of
// every state vector; rate symbols are in bijection with reactions.
class ReactionNetwork {
 public:
  ReactionNetwork() = default;

  // Appends a reaction, registering species, complexes and the rate symbol.
  // Throws InvalidArgument for reactant == product, a duplicate reaction or
  // a reused rate symbol.
  void add_reaction(const std::vector<std::pair<std::string, std::int32_t>>& reactant,
                    const std::vector<std::pair<std::string, std::int32_t>>& product,
                    const std::string& rate_symbol, std::size_t line = 0);

  std::size_t species_count() const { return species_.size(); }
  std::size_t complex_count() const { return complexes_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }

  const std::vector<std::string>& species() const { return species_; }
  const std::vector<Complex>& complexes() const { return complexes_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  const std::vector<std::string>& rate_symbols() const { return rate_symbols_; }

  const Complex& reactant(const Reaction& r) const { return complexes_[r.reactant]; }
  const Complex& product(const Reaction& r) const { return complexes_[r.product]; }
  // nu' - nu.
  State reaction_vector(const Reaction& r) const;

  std::size_t species_index(const std::string& name) const;  // npos if absent
  std::size_t rate_index(const std::string& name) const;     // npos if absent

  bool operator==(const ReactionNetwork&) const = default;

 private:
  std::size_t intern_species(const std::string& name);
  std::size_t intern_complex(const std::vector<std::pair<std::string, std::int32_t>>& terms);

  std::vector<std::string> species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
  std::vector<std::string> rate_symbols_;
};

}  // namespace pfcrn
