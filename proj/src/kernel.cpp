#include "pfcrn/kernel.hpp"

#include "pfcrn/error.hpp"

#include "detail/interp.hpp"

#include <algorithm>
#include <numeric>

namespace pfcrn {

MasterMatrix master_matrix(const ReactionNetwork& net, const IrreducibleComponent& comp) {
  const std::size_t nv = net.reaction_count();
  MasterMatrix a;
  a.level = comp.level;
  a.m = comp.size();
  a.entries.assign(a.m * a.m, RatePoly(nv));
  for (const auto& t : comp.transitions) {
    RatePoly rate = RatePoly::term(nv, Monomial::unit(net.reactions()[t.reaction].rate), Rational(t.coeff));
    a.at(t.to, t.from) += rate;
    a.at(t.from, t.from) -= rate;
  }
  return a;
}

namespace {

struct Work {
  const KernelBudget& budget;
  std::uint64_t spent = 0;

  void charge(std::uint64_t ops) {
    spent += ops;
    if (budget.max_work && spent > budget.max_work)
      throw BudgetExceeded("kernel elimination exceeded its work limit of " +
                           std::to_string(budget.max_work) + " term products");
  }
  void check(const RatePoly& p) const {
    if (budget.max_terms && p.size() > budget.max_terms)
      throw BudgetExceeded("kernel elimination exceeded " + std::to_string(budget.max_terms) +
                           " terms in one entry");
  }
};

RatePoly exact_quotient(const RatePoly& p, const RatePoly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw InvariantViolation("fraction-free elimination produced an inexact division");
  return std::move(*q);
}

// Exact elimination is the quicker route for small chains; past this many
// term products the evaluation route takes over.
constexpr std::uint64_t kEliminationWork = 250'000;

// Fraction-free Gauss-Jordan elimination on the first m-1 rows; returns the
// kernel with its common polynomial factor removed.
std::vector<RatePoly> eliminate(const MasterMatrix& a, Work& work) {
  const std::size_t m = a.m;
  const std::size_t nv = a.entries.front().nvars();
  // Rows 0..m-2 suffice: the last row is minus the sum of the others.
  const std::size_t rows = m - 1;
  std::vector<std::vector<RatePoly>> w(rows, std::vector<RatePoly>(m));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < m; ++j) w[i][j] = a.at(i, j);
  std::vector<std::size_t> col(m);
  std::iota(col.begin(), col.end(), std::size_t{0});

  RatePoly prev = RatePoly::constant(nv, Rational(1));
  for (std::size_t k = 0; k < rows; ++k) {
    std::size_t pr = rows, pc = m;
    for (std::size_t c = k; c < m && pr == rows; ++c) {
      for (std::size_t i = k; i < rows; ++i) {
        if (w[i][c].is_zero()) continue;
        if (pr == rows || w[i][c].size() < w[pr][c].size()) pr = i;
      }
      if (pr != rows) pc = c;
    }
    if (pr == rows)
      throw InvariantViolation("master matrix has rank " + std::to_string(k) + ", expected " +
                               std::to_string(rows));
    std::swap(w[pr], w[k]);
    if (pc != k) {
      for (auto& row : w) std::swap(row[pc], row[k]);
      std::swap(col[pc], col[k]);
    }
    const RatePoly piv = w[k][k];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == k) continue;
      const RatePoly lead = w[i][k];
      for (std::size_t j = k + 1; j < m; ++j) {
        work.charge(std::uint64_t{piv.size()} * w[i][j].size() +
                    std::uint64_t{lead.size()} * w[k][j].size());
        RatePoly v = piv * w[i][j];
        if (!lead.is_zero() && !w[k][j].is_zero()) v -= lead * w[k][j];
        if (!v.is_zero()) {
          work.charge(std::uint64_t{v.size()} * 2);
          v = exact_quotient(v, prev);
          work.charge(std::uint64_t{v.size()} * prev.size());
        }
        work.check(v);
        w[i][j] = std::move(v);
      }
      w[i][k] = RatePoly(nv);
    }
    prev = piv;
  }

  std::vector<RatePoly> x(m);
  for (std::size_t i = 0; i < rows; ++i) x[col[i]] = -w[i][m - 1];
  x[col[m - 1]] = prev;

  // Strip the common polynomial factor, smallest entries first.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t p, std::size_t q) { return x[p].size() < x[q].size(); });
  RatePoly g = x[order.front()];
  for (std::size_t idx = 1; idx < m && !g.is_constant(); ++idx) {
    const RatePoly& e = x[order[idx]];
    if (!divide_exact(e, g)) g = gcd(g, e);
  }
  for (auto& e : x) e = exact_quotient(e, g);
  return x;
}

}  // namespace

KernelVector kernel_vector(const MasterMatrix& a, const KernelBudget& budget) {
  const std::size_t m = a.m;
  if (m == 0) throw InvalidArgument("empty master matrix");
  const std::size_t nv = a.entries.front().nvars();
  KernelVector h;
  h.level = a.level;
  if (m == 1) {
    h.entries.push_back(RatePoly::constant(nv, Rational(1)));
    return h;
  }

  std::vector<RatePoly> x;
  const KernelBudget capped{budget.max_terms, kEliminationWork};
  Work work{capped};
  try {
    x = eliminate(a, work);
    h.work = work.spent;
  } catch (const BudgetExceeded&) {
    detail::InterpolationLimits lim;
    lim.max_terms = budget.max_terms;
    lim.max_work = budget.max_work;
    auto r = detail::interpolate_kernel(a, lim);
    x = std::move(r.entries);
    h.work = work.spent + r.work;
  }

  // Joint rational content and sign.
  Integer num = 0, den = 1;
  for (const auto& e : x)
    for (const auto& t : e.terms()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  Rational scale(den, num);
  scale.canonicalize();
  if (x.front().leading().coeff < 0) scale = -scale;
  for (auto& e : x) e *= scale;

  h.entries = std::move(x);
  auto deg = homogeneous_degree(h.entries.front());
  if (!deg.degree) throw InvariantViolation("kernel entry is not homogeneous");
  h.degree = *deg.degree;
  for (const auto& e : h.entries) {
    if (sign_summary(e) != SignSummary::all_positive)
      throw InvariantViolation("kernel entry has a non-positive coefficient");
    auto d = homogeneous_degree(e);
    if (!d.degree || *d.degree != h.degree)
      throw InvariantViolation("kernel entries differ in degree");
  }
  if (!annihilates(a, h)) throw InvariantViolation("A h != 0 for the computed kernel");
  return h;
}

std::vector<Rational> stationary_eval(const KernelVector& h, std::span<const Rational> rates) {
  std::vector<Rational> p;
  Rational z = 0;
  for (const auto& e : h.entries) {
    p.push_back(evaluate(e, rates));
    z += p.back();
  }
  if (z <= 0) throw InvalidArgument("rates must be positive");
  for (auto& v : p) v /= z;
  return p;
}

bool column_sums_vanish(const MasterMatrix& a) {
  for (std::size_t j = 0; j < a.m; ++j) {
    RatePoly s(a.entries.empty() ? 0 : a.entries.front().nvars());
    for (std::size_t k = 0; k < a.m; ++k) s += a.at(k, j);
    if (!s.is_zero()) return false;
  }
  return true;
}

bool annihilates(const MasterMatrix& a, const KernelVector& h) {
  if (h.entries.size() != a.m) return false;
  for (std::size_t k = 0; k < a.m; ++k) {
    RatePoly s(h.entries.front().nvars());
    for (std::size_t j = 0; j < a.m; ++j)
      if (!a.at(k, j).is_zero()) s += a.at(k, j) * h.entries[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace pfcrn
