#include "pfcrn/numeric.hpp"

#include "pfcrn/error.hpp"
#include "detail/linalg.hpp"

#include <algorithm>

namespace pfcrn {

std::vector<Rational> exact_stationary(const ReactionNetwork& net, const RateAssignment& a,
                                       const IrreducibleComponent& comp) {
  if (a.values.size() != net.reaction_count())
    throw InvalidArgument("rate assignment does not match the network");
  const auto m = comp.size();
  detail::Matrix q(m, detail::RowVec(m, Rational(0)));
  for (std::size_t s = 0; s < m; ++s) {
    const auto& x = comp.states[s];
    for (const auto& r : net.reactions()) {
      Integer c = propensity(net, r, x);
      if (c == 0) continue;
      State y = x;
      auto v = net.reaction_vector(r);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += v[i];
      auto t = comp.index_of(y);
      if (t == std::string::npos) throw InvariantViolation("component is not closed");
      Rational rate = Rational(c) * a[r.rate];
      q[t][s] += rate;
      q[s][s] -= rate;
    }
  }
  auto basis = detail::nullspace(q, m);
  if (basis.size() != 1)
    throw InvariantViolation("stationary solve: kernel dimension " + std::to_string(basis.size()));
  auto pi = std::move(basis.front());
  Rational total = 0;
  for (const auto& v : pi) total += v;
  for (auto& v : pi) {
    v /= total;
    if (sgn(v) <= 0) throw InvariantViolation("stationary solve: non-positive probability");
  }
  return pi;
}

Rational LevelDistribution::at(const State& x) const {
  auto idx = component.index_of(x);
  return idx == std::string::npos ? Rational(0) : pi[idx];
}

LevelDistribution exact_stationary(const ReactionNetwork& net, const RateAssignment& a,
                                   std::int64_t level) {
  auto d = decompose_level(net, level);
  if (d.components.size() != 1)
    throw InvalidArgument("level " + std::to_string(level) + " has " +
                          std::to_string(d.components.size()) + " closed classes");
  LevelDistribution out{std::move(d.components.front()), {}};
  out.pi = exact_stationary(net, a, out.component);
  return out;
}

namespace {

class Distributions {
 public:
  Distributions(const ReactionNetwork& net, const RateAssignment& a) : net_(net), a_(a) {}

  const LevelDistribution& level(std::int64_t l) {
    auto it = cache_.find(l);
    if (it != cache_.end()) return it->second;
    auto d = exact_stationary(net_, a_, l);
    if (!d.component.flags.is_full_simplex)
      throw InvalidArgument("level " + std::to_string(l) + " is not a full simplex");
    return cache_.emplace(l, std::move(d)).first->second;
  }

  Rational pi(const PiRef& ref) { return level(ref.level).at(ref.state); }

  Rational residual(const RelationInstance& rel) {
    auto product = [&](const std::vector<PiRef>& side) {
      Rational p = 1;
      for (const auto& ref : side) p *= pi(ref);
      return p;
    };
    return product(rel.lhs()) - product(rel.rhs());
  }

 private:
  const ReactionNetwork& net_;
  const RateAssignment& a_;
  std::map<std::int64_t, LevelDistribution> cache_;
};

struct Triple {
  State x;
  std::size_t j;
  State y;
};

std::vector<Triple> triples(std::size_t n, std::int64_t i) {
  std::vector<Triple> out;
  std::vector<std::int64_t> unit(n, 1);
  auto upper = level_states(unit, i + 1);
  for (const auto& x : level_states(unit, i))
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& y : upper)
        if (y[j] == x[j]) out.push_back({x, j, y});
  return out;
}

}  // namespace

ResidualReport relation_residuals(const ReactionNetwork& net, const RateAssignment& a,
                                  std::int64_t q, std::int64_t j, bool stop_at_first) {
  if (q < 1) throw InvalidArgument("index q must be at least 1");
  Distributions dist(net, a);
  ResidualReport rep;
  rep.q = q;
  rep.through = j;
  const auto n = net.species_count();
  auto check = [&](ResidualLevel& lv, const RelationInstance& rel) {
    ++lv.checked;
    auto r = dist.residual(rel);
    if (r == 0) return;
    ++lv.nonzero;
    if (!rep.first_violation) rep.first_violation = Violation{rel, r};
  };
  for (auto top = q + 1; top <= j; ++top) {
    ResidualLevel lv;
    lv.level = top;
    for (const auto& rel : enumerate_relations_a(n, top - 1)) check(lv, rel);
    if (top - 2 >= q) {
      auto ts = triples(n, top - 2);
      for (std::size_t t = 1; t < ts.size(); ++t) {
        RelationInstance rel;
        rel.kind = RelationInstance::Kind::b;
        rel.base_level = top - 2;
        rel.x = ts[0].x;
        rel.j = ts[0].j;
        rel.y = ts[0].y;
        rel.z = ts[t].x;
        rel.k = ts[t].j;
        rel.w = ts[t].y;
        check(lv, rel);
      }
    }
    rep.levels.push_back(lv);
    if (stop_at_first && rep.first_violation) {
      rep.through = top;
      break;
    }
  }
  return rep;
}

ResidualReport relation_residuals(const ReactionNetwork& net, const RateAssignment& a,
                                  std::int64_t j) {
  auto prof = index_profile(net, std::max<std::int64_t>(j, 2));
  if (!prof.q) throw InvalidArgument("no full-simplex index set up to level " + std::to_string(j));
  return relation_residuals(net, a, *prof.q, j);
}

FitResult product_form_fit(const ReactionNetwork& net, const RateAssignment& a,
                           std::int64_t l_max) {
  const auto n = net.species_count();
  if (n < 2) throw InvalidArgument("product-form fit needs at least two species");
  if (l_max < 1) throw InvalidArgument("l_max must be positive");
  auto prof = index_profile(net, std::max<std::int64_t>(l_max, 2));
  if (prof.q != 1)
    throw InvalidArgument("product-form fit needs index set starting at level 1; "
                          "use relation residuals instead");
  Distributions dist(net, a);
  FitResult fit;
  fit.rates = a;
  auto unit = [&](std::size_t i, std::int32_t m) {
    State x(n, 0);
    x[i] = m;
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto p = dist.pi({1, unit(i, 1)});
    if (sgn(p) <= 0) throw InvalidArgument("degenerate level 1");
    fit.f_tables.push_back({Rational(1), p});
  }
  fit.z_values.push_back(Rational(1));
  fit.consistent_through = 1;
  std::vector<std::int64_t> ones(n, 1);

  for (std::int64_t l = 2; l <= l_max; ++l) {
    const Rational& z_prev = fit.z_values.back();
    std::optional<Rational> z;
    State z_state;
    for (const auto& x : level_states(ones, l - 1)) {
      for (std::size_t k = 0; k < n; ++k) {
        if (x[k] + 1 > l - 1) continue;
        State up = x;
        ++up[k];
        const auto& fk = fit.f_tables[k];
        Rational cand = z_prev * dist.pi({l - 1, x}) / dist.pi({l, up}) * fk[x[k] + 1] / fk[x[k]];
        if (!z) {
          z = cand;
          z_state = up;
        } else if (cand != *z) {
          fit.first_failure = FitFailure{l, z_state, up, cand - *z};
          return fit;
        }
      }
    }
    fit.z_values.push_back(*z);
    for (std::size_t i = 0; i < n; ++i)
      fit.f_tables[i].push_back(*z * dist.pi({l, unit(i, static_cast<std::int32_t>(l))}));
    for (const auto& x : level_states(ones, l)) {
      Rational rebuilt = 1;
      for (std::size_t i = 0; i < n; ++i) rebuilt *= fit.f_tables[i][x[i]];
      rebuilt /= *z;
      Rational actual = dist.pi({l, x});
      if (rebuilt != actual) {
        fit.first_failure = FitFailure{l, x, x, rebuilt - actual};
        return fit;
      }
    }
    fit.consistent_through = l;
  }
  return fit;
}

const char* to_string(Shape s) {
  switch (s) {
    case Shape::g1: return "g1";
    case Shape::g2: return "g2";
    case Shape::g3: return "g3";
    case Shape::g4: return "g4";
    case Shape::unknown: return "unknown";
  }
  return "?";
}

std::vector<Rational> shape_table(const ShapeLabel& label, const Rational& f0, std::size_t count) {
  std::vector<Rational> f{f0};
  const auto& [a, b, c, d] = label.params;
  for (std::size_t m = 1; m < count; ++m) {
    Rational t(static_cast<long>(m - 1));
    f.push_back(f.back() * (a + b * t) / (c + d * t) / Rational(static_cast<long>(m)));
  }
  return f;
}

namespace {

ShapeLabel label_species(const std::vector<Rational>& f, std::size_t levels) {
  std::vector<Rational> rho;  // rho[t] = rho(t + 1)
  for (std::size_t m = 1; m <= levels; ++m) rho.push_back(Rational(static_cast<long>(m)) * f[m] / f[m - 1]);
  ShapeLabel out;
  if (std::all_of(rho.begin(), rho.end(), [&](const Rational& r) { return r == rho.front(); })) {
    out.shape = Shape::g1;
    out.params = {rho.front(), Rational(0), Rational(1), Rational(0)};
    return out;
  }
  detail::Matrix eqs;
  for (long t = 0; t < 3; ++t)
    eqs.push_back({Rational(1), Rational(t), -rho[t], -rho[t] * Rational(t)});
  auto basis = detail::nullspace(eqs, 4);
  if (basis.size() != 1) return out;
  auto p = basis.front();
  const Rational scale = p[2] != 0 ? p[2] : p[3];
  if (scale == 0) return out;
  for (auto& v : p) v /= scale;
  for (std::size_t t = 0; t < rho.size(); ++t) {
    Rational tt(static_cast<long>(t));
    Rational den = p[2] + p[3] * tt;
    if (den == 0 || (p[0] + p[1] * tt) / den != rho[t]) return out;
  }
  out.params = {p[0], p[1], p[2], p[3]};
  if (p[1] != 0 && p[3] != 0)
    out.shape = Shape::g2;
  else if (p[1] == 0 && p[3] != 0)
    out.shape = Shape::g3;
  else if (p[1] != 0 && p[3] == 0)
    out.shape = Shape::g4;
  else
    out.shape = Shape::g1;
  return out;
}

}  // namespace

std::vector<ShapeLabel> shape_classify(const FitResult& fit) {
  if (fit.consistent_through < 4)
    throw InvalidArgument("shape classification needs a fit consistent through level 4");
  std::vector<ShapeLabel> out;
  for (const auto& f : fit.f_tables)
    out.push_back(label_species(f, static_cast<std::size_t>(fit.consistent_through)));
  return out;
}

}  // namespace pfcrn
