#include "pfcrn/product_ideal.hpp"

#include "pfcrn/error.hpp"
#include "pfcrn/structure.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace pfcrn {

namespace {

State plus(State x, std::size_t j, std::int32_t d = 1) {
  x[j] += d;
  return x;
}

std::vector<State> simplex(std::size_t n, std::int64_t level) {
  return level_states(std::vector<std::int64_t>(n, 1), level);
}

using Side = std::vector<PiRef>;
using Key = std::pair<Side, Side>;

std::vector<PiRef> sorted(std::vector<PiRef> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Same key for a relation and its negation; nullopt when degenerate.
std::optional<Key> relation_key(const RelationInstance& r) {
  auto l = sorted(r.lhs());
  auto s = sorted(r.rhs());
  if (l == s) return std::nullopt;
  if (s < l) std::swap(l, s);
  return Key{std::move(l), std::move(s)};
}

void push_unique(std::vector<RelationInstance>& out, std::set<Key>& seen, RelationInstance r) {
  auto key = relation_key(r);
  if (!key || !seen.insert(*key).second) return;
  out.push_back(std::move(r));
}

struct PolyHash {
  std::size_t operator()(const RatePoly& p) const noexcept {
    std::size_t h = p.size();
    MonomialHash mh;
    for (const auto& t : p.terms()) {
      h = h * 1000003u ^ mh(t.mono);
      h = h * 1000003u ^ mpz_get_ui(t.coeff.get_num_mpz_t());
    }
    return h;
  }
};

class GeneratorCollector {
 public:
  GeneratorCollector(GeneratorSet& set, const KernelTable& kernels, const IdealOptions& options)
      : set_(set), splitters_(kernels.positive_factors()) {
    for (const auto& h : options.split_hints) splitters_.push_back(&h);
    for (std::size_t g = 0; g < set_.generators.size(); ++g) index_[set_.generators[g].poly] = g;
  }

  // Returns true when the relation produced a generator not seen before.
  bool add(const RelationInstance& rel, const KernelTable& kernels) {
    ++set_.relation_count;
    auto value = reduced_relation_value(rel, kernels);
    if (value.is_zero()) {
      ++set_.zero_relation_count;
      return false;
    }
    auto pp = primitive_part(relation_value(rel, kernels));
    auto split = strip_positive_factors(value, splitters_);
    auto reduced = std::move(split.kept);
    auto quotient = divide_exact(pp.primitive, reduced);
    if (!quotient) throw InvariantViolation("reduced generator does not divide its relation");
    Provenance prov{rel, pp.content, pp.content_monomial, pp.flipped, pp.primitive,
                    canonical(*quotient)};
    auto it = index_.find(reduced);
    if (it != index_.end()) {
      set_.generators[it->second].provenance.push_back(std::move(prov));
      return false;
    }
    Generator g;
    g.sign = sign_summary(reduced);
    g.poly = std::move(reduced);
    g.provenance.push_back(std::move(prov));
    index_.emplace(g.poly, set_.generators.size());
    set_.generators.push_back(std::move(g));
    return true;
  }

 private:
  GeneratorSet& set_;
  std::vector<const RatePoly*> splitters_;
  std::unordered_map<RatePoly, std::size_t, PolyHash> index_;
};

// Relations whose top level is exactly j, base level at least q.
std::vector<RelationInstance> relations_topping_at(std::size_t n, std::int64_t q, std::int64_t j) {
  std::vector<RelationInstance> out;
  if (j - 1 >= q) out = enumerate_relations_a(n, j - 1);
  if (j - 2 >= q) {
    auto b = enumerate_relations_b(n, j - 2);
    out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  }
  return out;
}

}  // namespace

PositiveSplit strip_positive_factors(const RatePoly& p,
                                     const std::vector<const RatePoly*>& splitters) {
  if (p.is_zero()) throw InvalidArgument("cannot split the zero polynomial");
  const auto n = p.nvars();
  PositiveSplit out{RatePoly::constant(n, 1), RatePoly::constant(n, 1)};
  std::vector<RatePoly> work{canonical(p)};
  auto split_by = [&](const RatePoly& f, const RatePoly& d) {
    auto g = canonical(d);
    if (g.total_degree() == 0 || g.total_degree() >= f.total_degree()) return false;
    auto rest = divide_exact(f, g);
    if (!rest) return false;
    work.push_back(std::move(g));
    work.push_back(canonical(*rest));
    return true;
  };
  while (!work.empty()) {
    auto f = std::move(work.back());
    work.pop_back();
    if (f.total_degree() == 0) continue;
    auto sign = sign_summary(f);
    if (sign == SignSummary::all_positive || sign == SignSummary::all_negative) {
      out.removed *= f;
      continue;
    }
    bool split = false;
    for (std::size_t v = 0; v < n && !split; ++v)
      if (f.degree_in(v) > 0) split = split_by(f, content_in_variable(f, v));
    for (std::size_t s = 0; s < splitters.size() && !split; ++s)
      if (!splitters[s]->is_constant()) split = split_by(f, gcd(f, *splitters[s]));
    if (!split) out.kept *= f;
  }
  out.kept = canonical(out.kept);
  out.removed = canonical(out.removed);
  return out;
}

std::vector<PiRef> RelationInstance::lhs() const {
  const auto i = base_level;
  if (kind == Kind::a) return {{i, plus(plus(x, j), k, -1)}, {i + 1, y}};
  return {{i + 1, plus(x, j)}, {i + 1, y}, {i + 2, plus(w, k)}, {i, z}};
}

std::vector<PiRef> RelationInstance::rhs() const {
  const auto i = base_level;
  if (kind == Kind::a) return {{i + 1, plus(plus(y, j), k, -1)}, {i, x}};
  return {{i + 1, plus(z, k)}, {i + 1, w}, {i + 2, plus(y, j)}, {i, x}};
}

std::vector<RelationInstance> enumerate_relations_a(std::size_t n, std::int64_t i) {
  std::vector<RelationInstance> out;
  if (n < 2 || i < 1) return out;
  std::set<Key> seen;
  auto upper = simplex(n, i + 1);
  for (const auto& x : simplex(n, i))
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (j == k || x[k] < 1) continue;
        for (const auto& y : upper) {
          if (y[j] != x[j] || y[k] != x[k]) continue;
          RelationInstance r;
          r.kind = RelationInstance::Kind::a;
          r.base_level = i;
          r.x = x;
          r.y = y;
          r.j = j;
          r.k = k;
          push_unique(out, seen, std::move(r));
        }
      }
  return out;
}

std::vector<RelationInstance> enumerate_relations_b(std::size_t n, std::int64_t i) {
  std::vector<RelationInstance> out;
  if (n < 1 || i < 1) return out;
  struct Triple {
    State x;
    std::size_t j;
    State y;
  };
  std::vector<Triple> triples;
  auto upper = simplex(n, i + 1);
  for (const auto& x : simplex(n, i))
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& y : upper)
        if (y[j] == x[j]) triples.push_back({x, j, y});
  std::set<Key> seen;
  for (std::size_t a = 0; a < triples.size(); ++a)
    for (std::size_t b = a + 1; b < triples.size(); ++b) {
      RelationInstance r;
      r.kind = RelationInstance::Kind::b;
      r.base_level = i;
      r.x = triples[a].x;
      r.j = triples[a].j;
      r.y = triples[a].y;
      r.z = triples[b].x;
      r.k = triples[b].j;
      r.w = triples[b].y;
      push_unique(out, seen, std::move(r));
    }
  return out;
}

KernelTable::KernelTable(const ReactionNetwork& net, std::int64_t from, std::int64_t to,
                         const KernelBudget& budget) {
  for (auto l = from; l <= to; ++l) add(net, l, budget);
}

void KernelTable::add(const ReactionNetwork& net, std::int64_t level, const KernelBudget& budget) {
  if (has(level)) return;
  nvars_ = net.reaction_count();
  auto d = decompose_level(net, level);
  if (d.components.size() != 1 || !d.components.front().flags.is_full_simplex)
    throw InvalidArgument("level " + std::to_string(level) +
                          " is not a single full-simplex component");
  Level lv{std::move(d.components.front()), {}, {}, false};
  lv.matrix = master_matrix(net, lv.component);
  lv.kernel = kernel_vector(lv.matrix, budget);
  levels_.emplace(level, std::move(lv));
}

void KernelTable::add_with_transients(const ReactionNetwork& net, std::int64_t level,
                                      const KernelBudget& budget) {
  if (has(level)) return;
  if (!conserves_total_count(net))
    throw InvalidArgument("levels with transient states need total-count conservation");
  nvars_ = net.reaction_count();
  zero_ = RatePoly(nvars_);
  auto d = decompose_level(net, level);
  if (d.components.size() != 1)
    throw InvalidArgument("level " + std::to_string(level) + " has " +
                          std::to_string(d.components.size()) + " closed classes");
  Level lv{std::move(d.components.front()), {}, {}, !d.transient.empty()};
  lv.matrix = master_matrix(net, lv.component);
  lv.kernel = kernel_vector(lv.matrix, budget);
  levels_.emplace(level, std::move(lv));
}

const KernelTable::Level& KernelTable::at(std::int64_t level) const {
  auto it = levels_.find(level);
  if (it == levels_.end())
    throw InvalidArgument("no kernel computed for level " + std::to_string(level));
  return it->second;
}

const RatePoly& KernelTable::pi(const PiRef& ref) const {
  const auto& lv = at(ref.level);
  auto idx = lv.component.index_of(ref.state);
  if (idx == std::string::npos && lv.has_transients) return zero_;
  if (idx == std::string::npos)
    throw InvariantViolation("state outside the level " + std::to_string(ref.level) + " simplex");
  return lv.kernel.entries[idx];
}

std::vector<const RatePoly*> KernelTable::positive_factors() const {
  std::vector<const RatePoly*> out;
  for (const auto& [level, lv] : levels_)
    for (const auto& e : lv.kernel.entries) {
      if (e.is_constant()) continue;
      if (std::none_of(out.begin(), out.end(), [&](const RatePoly* p) { return *p == e; }))
        out.push_back(&e);
    }
  return out;
}

RatePoly relation_value(const RelationInstance& rel, const KernelTable& kernels) {
  auto product = [&](const std::vector<PiRef>& side) {
    RatePoly p = kernels.pi(side.front());
    for (std::size_t t = 1; t < side.size(); ++t) p *= kernels.pi(side[t]);
    return p;
  };
  return product(rel.lhs()) - product(rel.rhs());
}

RatePoly reduced_relation_value(const RelationInstance& rel, const KernelTable& kernels) {
  auto l = sorted(rel.lhs());
  auto r = sorted(rel.rhs());
  std::vector<PiRef> ls, rs;
  std::set_difference(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(ls));
  std::set_difference(r.begin(), r.end(), l.begin(), l.end(), std::back_inserter(rs));
  auto product = [&](const std::vector<PiRef>& side) {
    auto p = RatePoly::constant(kernels.nvars(), 1);
    for (const auto& ref : side) p *= kernels.pi(ref);
    return p;
  };
  return product(ls) - product(rs);
}

RelationPolynomial relation_to_rate_poly(const RelationInstance& rel, const KernelTable& kernels) {
  RelationPolynomial out;
  out.value = relation_value(rel, kernels);
  if (!out.value.is_zero()) out.normal = primitive_part(out.value);
  return out;
}

const Generator* GeneratorSet::find(const RatePoly& canonical_poly) const {
  for (const auto& g : generators)
    if (g.poly == canonical_poly) return &g;
  return nullptr;
}

GeneratorSet ideal_level(const ReactionNetwork& net, const KernelTable& kernels, std::int64_t q,
                         std::int64_t j, const IdealOptions& options) {
  GeneratorSet set;
  set.level = j;
  GeneratorCollector collect(set, kernels, options);
  for (auto top = q + 1; top <= j; ++top)
    for (const auto& rel : relations_topping_at(net.species_count(), q, top))
      collect.add(rel, kernels);
  return set;
}

GeneratorSet ideal_level(const ReactionNetwork& net, std::int64_t j, const KernelBudget& budget) {
  auto prof = index_profile(net, std::max<std::int64_t>(j, 2));
  if (!prof.q) throw InvalidArgument("level " + std::to_string(j) + " is not a full simplex");
  KernelTable kernels(net, *prof.q, j, budget);
  return ideal_level(net, kernels, *prof.q, j);
}

ScanReport stabilization_scan(const ReactionNetwork& net, const KernelTable& kernels,
                              std::int64_t q, std::int64_t j_max, const IdealOptions& options) {
  ScanReport rep;
  rep.q = q;
  GeneratorSet running;
  for (auto j = q + 1; j <= j_max; ++j) {
    GeneratorCollector collect(running, kernels, options);
    std::size_t fresh = 0;
    for (const auto& rel : relations_topping_at(net.species_count(), q, j))
      fresh += collect.add(rel, kernels) ? 1 : 0;
    running.level = j;
    rep.levels.push_back(j);
    rep.new_generator_counts.push_back(fresh);
    if (!rep.first_nonzero_level && !running.generators.empty()) rep.first_nonzero_level = j;
    rep.sets.push_back(running);
  }
  for (auto it = rep.new_generator_counts.rbegin(); it != rep.new_generator_counts.rend(); ++it) {
    if (*it != 0) break;
    ++rep.stable_suffix_length;
  }
  return rep;
}

}  // namespace pfcrn
