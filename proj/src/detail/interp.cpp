#include "detail/interp.hpp"

#include "pfcrn/error.hpp"

#include <gmp.h>

#include <algorithm>
#include <optional>
#include <random>
#include <string>

namespace pfcrn::detail {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using UPoly = std::vector<u64>;  // lowest degree first, no trailing zeros

struct Fp {
  u64 p;

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p - b); }
  u64 neg(u64 a) const { return a ? p - a : 0; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(const Integer& z) const { return mpz_fdiv_ui(z.get_mpz_t(), p); }
  u64 from(const Rational& q) const {
    u64 d = from(q.get_den());
    if (!d) throw InvariantViolation("coefficient denominator divisible by the interpolation prime");
    return mul(from(q.get_num()), inv(d));
  }
};

class Work {
 public:
  explicit Work(std::uint64_t limit) : limit_(limit) {}
  void charge(std::uint64_t ops) {
    spent_ += ops;
    if (limit_ && spent_ > limit_)
      throw BudgetExceeded("kernel interpolation exceeded its work limit of " +
                           std::to_string(limit_) + " operations");
  }
  std::uint64_t spent() const { return spent_; }

 private:
  std::uint64_t limit_;
  std::uint64_t spent_ = 0;
};

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const UPoly& f) { return static_cast<long>(f.size()) - 1; }

u64 eval(const Fp& F, const UPoly& f, u64 x) {
  u64 r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = F.add(F.mul(r, x), *it);
  return r;
}

UPoly mul(const Fp& F, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  trim(c);
  return c;
}

UPoly sub(const Fp& F, UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

// a = q b + r with deg r < deg b; b nonzero.
std::pair<UPoly, UPoly> divmod(const Fp& F, UPoly a, const UPoly& b) {
  if (a.size() < b.size()) return {{}, a};
  const u64 lead = F.inv(b.back());
  UPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 c = F.mul(a[k + b.size() - 1], lead);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = F.sub(a[k + j], F.mul(c, b[j]));
  }
  trim(q);
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

// Newton form, then expanded. The nodes are xs[s] = s + 1 and inv[k] = 1/k.
UPoly interpolate(const Fp& F, const std::vector<u64>& xs, std::vector<u64> ys,
                  const std::vector<u64>& inv) {
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) ys[i] = F.mul(F.sub(ys[i], ys[i - 1]), inv[k]);
  UPoly f(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // f = f * (t - xs[k]) + ys[k]
    for (std::size_t i = n - 1; i > 0; --i) f[i] = F.sub(f[i - 1], F.mul(f[i], xs[k]));
    f[0] = F.sub(ys[k], F.mul(f[0], xs[k]));
  }
  trim(f);
  return f;
}

// Denominator of the reduced rational function of degrees at most
// (bound, bound) through the 2 bound + 1 samples.
std::optional<UPoly> pade_denominator(const Fp& F, const std::vector<u64>& xs,
                                      const std::vector<u64>& ys, long bound,
                                      const std::vector<u64>& inv) {
  UPoly r0{1};
  for (u64 x : xs) r0 = mul(F, r0, UPoly{F.neg(x), 1});
  UPoly r1 = interpolate(F, xs, ys, inv);
  UPoly u0, u1{1};
  while (degree(r1) > bound) {
    auto [q, r] = divmod(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly u = sub(F, u0, mul(F, q, u1));
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  if (degree(u1) > bound || u1.empty()) return std::nullopt;
  for (u64 x : xs)
    if (eval(F, u1, x) == 0) return std::nullopt;
  return u1;
}

struct EntryMod {
  std::size_t row, col;
  std::vector<std::pair<Monomial, u64>> terms;
};

struct Problem {
  const MasterMatrix& a;
  std::size_t m;
  std::size_t nv;
  std::vector<std::size_t> vars;  // interpolated variables
  std::size_t hom;                // dehomogenizing variable, fixed to 1
  std::vector<u64> mix;           // random combination of coordinates
};

class Prime {
 public:
  Prime(const Problem& pb, u64 p, Work& work) : F{p}, pb_(pb), work_(work) {
    for (std::size_t k = 0; k < pb.m; ++k)
      for (std::size_t j = 0; j < pb.m; ++j) {
        const auto& e = pb.a.at(k, j);
        if (e.is_zero()) continue;
        EntryMod em{k, j, {}};
        for (const auto& t : e.terms()) em.terms.emplace_back(t.mono, F.from(t.coeff));
        entries_.push_back(std::move(em));
      }
  }

  Fp F;

  // Null vector of A(point), or nullopt when the rank drops there.
  std::optional<std::vector<u64>> null_vector(const std::vector<u64>& point) {
    const std::size_t m = pb_.m;
    std::vector<u64> w(m * m, 0);
    for (const auto& e : entries_) {
      u64 v = 0;
      for (const auto& [mono, c] : e.terms) {
        u64 t = c;
        for (std::size_t x = 0; x < pb_.nv; ++x)
          if (mono.exp[x]) t = F.mul(t, F.pow(point[x], mono.exp[x]));
        v = F.add(v, t);
      }
      w[e.row * m + e.col] = v;
    }
    work_.charge(std::uint64_t{m} * m * m / 3);
    // Row echelon form, then back substitution from the single free column.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0, free_col = m;
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (w[i * m + c]) {
          piv = i;
          break;
        }
      if (piv == m) {
        if (free_col != m) return std::nullopt;
        free_col = c;
        continue;
      }
      if (piv != r)
        for (std::size_t j = c; j < m; ++j) std::swap(w[piv * m + j], w[r * m + j]);
      const u64 s = F.inv(w[r * m + c]);
      for (std::size_t j = c; j < m; ++j) w[r * m + j] = F.mul(w[r * m + j], s);
      for (std::size_t i = r + 1; i < m; ++i) {
        if (!w[i * m + c]) continue;
        const u64 f = w[i * m + c];
        for (std::size_t j = c; j < m; ++j)
          if (w[r * m + j]) w[i * m + j] = F.sub(w[i * m + j], F.mul(f, w[r * m + j]));
      }
      pivot_col.push_back(c);
      ++r;
    }
    if (free_col == m) return std::nullopt;
    std::vector<u64> x(m, 0);
    x[free_col] = 1;
    for (std::size_t i = r; i-- > 0;) {
      const std::size_t c = pivot_col[i];
      u64 acc = 0;
      for (std::size_t j = c + 1; j < m; ++j)
        if (w[i * m + j] && x[j]) acc = F.add(acc, F.mul(w[i * m + j], x[j]));
      x[c] = F.neg(acc);
    }
    return x;
  }

  // The kernel curve along base + t dir, up to one common scalar, with every
  // coordinate of degree at most bound in t.
  std::optional<std::vector<UPoly>> curve(const std::vector<u64>& base, const std::vector<u64>& dir,
                                          long bound) {
    const std::size_t m = pb_.m;
    const std::size_t n = static_cast<std::size_t>(2 * bound + 1);
    std::vector<u64> xs(n), mixed(n);
    std::vector<std::vector<u64>> ratios(n);
    std::vector<u64> point(pb_.nv);
    for (std::size_t s = 0; s < n; ++s) {
      xs[s] = s + 1;
      for (std::size_t v = 0; v < pb_.nv; ++v) point[v] = F.add(base[v], F.mul(xs[s], dir[v]));
      auto v = null_vector(point);
      if (!v || (*v)[0] == 0) return std::nullopt;
      const u64 s0 = F.inv((*v)[0]);
      u64 acc = 0;
      for (std::size_t i = 0; i < m; ++i) {
        (*v)[i] = F.mul((*v)[i], s0);
        acc = F.add(acc, F.mul(pb_.mix[i], (*v)[i]));
      }
      mixed[s] = acc;
      ratios[s] = std::move(*v);
    }
    auto den = pade_denominator(F, xs, mixed, bound, inverses(n));
    if (!den) return std::nullopt;
    std::vector<u64> dv(n);
    for (std::size_t s = 0; s < n; ++s) dv[s] = eval(F, *den, xs[s]);
    std::vector<UPoly> out(m);
    std::vector<u64> ys(n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t s = 0; s < n; ++s) ys[s] = F.mul(ratios[s][i], dv[s]);
      out[i] = interpolate(F, xs, ys, inverses(n));
      if (degree(out[i]) > bound) return std::nullopt;
    }
    work_.charge(std::uint64_t{m + 4} * n * n);
    return out;
  }

 private:
  const std::vector<u64>& inverses(std::size_t n) {
    while (inv_.size() < n) inv_.push_back(inv_.empty() ? 0 : F.inv(inv_.size()));
    return inv_;
  }

  const Problem& pb_;
  Work& work_;
  std::vector<EntryMod> entries_;
  std::vector<u64> inv_;
};

struct SparsePoly {
  std::vector<Monomial> mono;
  std::vector<u64> coef;
};

using SparseVec = std::vector<SparsePoly>;

u64 mono_eval(const Fp& F, const Monomial& mono, const std::vector<u64>& point) {
  u64 v = 1;
  for (std::size_t x = 0; x < point.size(); ++x)
    if (mono.exp[x]) v = F.mul(v, F.pow(point[x], mono.exp[x]));
  return v;
}

class Interpolator {
 public:
  Interpolator(const Problem& pb, Prime& pr, std::mt19937_64& rng, const InterpolationLimits& lim,
               Work& work)
      : pb_(pb), pr_(pr), F(pr.F), rng_(rng), lim_(lim), work_(work) {}

  u64 random() { return std::uniform_int_distribution<u64>(1, F.p - 1)(rng_); }

  // Total degree of the kernel along a generic line.
  std::optional<long> total_degree() {
    std::vector<u64> base(pb_.nv, 1), dir(pb_.nv, 0);
    for (std::size_t v : pb_.vars) base[v] = random(), dir[v] = random();
    base[pb_.hom] = random();
    dir[pb_.hom] = random();
    auto c = pr_.curve(base, dir, static_cast<long>(pb_.m - 1));
    if (!c) return std::nullopt;
    long d = 0;
    for (const auto& f : *c) d = std::max(d, degree(f));
    return d;
  }

  std::optional<SparseVec> run(long total) {
    const std::size_t m = pb_.m;
    const std::size_t s = pb_.vars.size();
    std::vector<u64> beta(pb_.nv, 1);
    for (std::size_t v : pb_.vars) beta[v] = random();

    SparseVec cur(m);
    if (s == 0) {
      auto v = pr_.null_vector(beta);
      if (!v) return std::nullopt;
      for (std::size_t i = 0; i < m; ++i)
        if ((*v)[i]) {
          cur[i].mono.push_back(Monomial{});
          cur[i].coef.push_back((*v)[i]);
        }
      return cur;
    }

    {
      const std::size_t x = pb_.vars[0];
      auto base = beta;
      base[x] = 0;
      std::vector<u64> dir(pb_.nv, 0);
      dir[x] = 1;
      auto c = pr_.curve(base, dir, total);
      if (!c) return std::nullopt;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t e = 0; e < (*c)[i].size(); ++e)
          if ((*c)[i][e]) {
            cur[i].mono.push_back(Monomial::unit(x, static_cast<std::uint16_t>(e)));
            cur[i].coef.push_back((*c)[i][e]);
          }
    }

    for (std::size_t k = 1; k < s; ++k) {
      auto next = stage(cur, k, beta, total);
      if (!next) return std::nullopt;
      cur = std::move(*next);
    }
    return cur;
  }

 private:
  std::optional<long> variable_degree(std::size_t x, long total) {
    std::vector<u64> base(pb_.nv, 1), dir(pb_.nv, 0);
    for (std::size_t v : pb_.vars) base[v] = random();
    base[x] = 0;
    dir[x] = 1;
    auto c = pr_.curve(base, dir, total);
    if (!c) return std::nullopt;
    long d = 0;
    for (const auto& f : *c) d = std::max(d, degree(f));
    return d;
  }

  // Adds variable vars[k] to the skeleton of cur.
  std::optional<SparseVec> stage(const SparseVec& cur, std::size_t k, const std::vector<u64>& beta,
                                 long total) {
    const std::size_t m = pb_.m;
    const std::size_t x = pb_.vars[k];
    std::size_t T = 0;
    for (const auto& f : cur) T = std::max(T, f.mono.size());
    if (lim_.max_terms && T > lim_.max_terms)
      throw BudgetExceeded("kernel entry exceeds " + std::to_string(lim_.max_terms) + " terms");

    auto dx = variable_degree(x, total);
    if (!dx) return std::nullopt;
    const long bound = *dx;

    // Anchor j sits at alpha^j in the variables already interpolated.
    std::vector<u64> alpha(pb_.nv, 1);
    std::vector<std::vector<u64>> nodes(m);
    bool distinct = false;
    for (int attempt = 0; attempt < 3 && !distinct; ++attempt) {
      for (std::size_t q = 0; q < k; ++q) alpha[pb_.vars[q]] = random();
      distinct = true;
      for (std::size_t i = 0; i < m && distinct; ++i) {
        nodes[i].clear();
        for (const auto& mono : cur[i].mono) nodes[i].push_back(mono_eval(F, mono, alpha));
        auto sorted = nodes[i];
        std::sort(sorted.begin(), sorted.end());
        distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      }
    }
    if (!distinct) return std::nullopt;

    const std::size_t width = static_cast<std::size_t>(bound) + 1;
    // images[i][j * width + e]: coefficient of x^e on anchor line j.
    std::vector<std::vector<u64>> images(m);
    for (std::size_t i = 0; i < m; ++i) images[i].assign(cur[i].mono.size() * width, 0);

    // Lines are scaled through the entry with the smallest skeleton.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < m; ++i)
      if (!cur[i].mono.empty()) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return cur[a].mono.size() < cur[b].mono.size();
    });
    if (order.empty()) return std::nullopt;

    std::vector<u64> base = beta, dir(pb_.nv, 0);
    base[x] = 0;
    dir[x] = 1;
    std::vector<u64> anchor(pb_.nv, 1);

    for (std::size_t j = 0; j < T; ++j) {
      for (std::size_t q = 0; q < k; ++q) {
        const std::size_t v = pb_.vars[q];
        base[v] = anchor[v];
        anchor[v] = F.mul(anchor[v], alpha[v]);
      }
      auto c = pr_.curve(base, dir, bound);
      if (!c) return std::nullopt;

      // Scale from the value where the line meets the previous stage.
      std::optional<u64> scale;
      for (std::size_t i : order) {
        u64 expect = 0;
        for (std::size_t l = 0; l < nodes[i].size(); ++l)
          expect = F.add(expect, F.mul(cur[i].coef[l], F.pow(nodes[i][l], j)));
        const u64 at = eval(F, (*c)[i], beta[x]);
        if ((at == 0) != (expect == 0)) return std::nullopt;
        if (at) {
          scale = F.mul(expect, F.inv(at));
          break;
        }
      }
      if (!scale) return std::nullopt;
      for (std::size_t i = 0; i < m; ++i) {
        if (j >= cur[i].mono.size()) continue;
        const auto& f = (*c)[i];
        for (std::size_t e = 0; e < f.size(); ++e)
          images[i][j * width + e] = F.mul(f[e], *scale);
      }
    }

    SparseVec next(m);
    for (std::size_t i = 0; i < m; ++i) solve_stage(cur[i], nodes[i], images[i], width, x, next[i]);
    return next;
  }

  // Transposed Vandermonde systems sum_l c_l v_l^j = b_j, one per power of x.
  void solve_stage(const SparsePoly& prev, const std::vector<u64>& v, const std::vector<u64>& images,
                   std::size_t width, std::size_t x, SparsePoly& out) {
    const std::size_t n = v.size();
    if (n == 0) return;
    UPoly master{1};
    master.reserve(n + 1);
    for (u64 node : v) {
      master.push_back(0);
      for (std::size_t i = master.size() - 1; i > 0; --i)
        master[i] = F.sub(master[i - 1], F.mul(master[i], node));
      master[0] = F.neg(F.mul(master[0], node));
    }
    work_.charge(std::uint64_t{n} * n * (width / 4 + 3));
    std::vector<u64> q(n);
    std::vector<u128> acc(width);
    for (std::size_t l = 0; l < n; ++l) {
      q[n - 1] = 1;
      for (std::size_t j = n - 1; j > 0; --j) q[j - 1] = F.add(master[j], F.mul(v[l], q[j]));
      const u64 dinv = F.inv(eval(F, q, v[l]));
      // Products stay below 2^124; reduce every eight of them.
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        const u128 qj = q[j];
        const u64* img = &images[j * width];
        for (std::size_t e = 0; e < width; ++e) acc[e] += qj * img[e];
        if ((j & 7) == 7)
          for (auto& a : acc) a %= F.p;
      }
      for (std::size_t e = 0; e < width; ++e) {
        const u64 c = F.mul(static_cast<u64>(acc[e] % F.p), dinv);
        if (!c) continue;
        out.mono.push_back(prev.mono[l] * Monomial::unit(x, static_cast<std::uint16_t>(e)));
        out.coef.push_back(c);
      }
    }
  }

  const Problem& pb_;
  Prime& pr_;
  const Fp F;
  std::mt19937_64& rng_;
  const InterpolationLimits& lim_;
  Work& work_;
};

std::optional<Rational> reconstruct(const Integer& a, const Integer& modulus) {
  Integer bound = sqrt(modulus / 2);
  Integer r0 = modulus, r1 = a, s0 = 0, s1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r = r0 - q * r1;
    r0 = r1;
    r1 = r;
    Integer s = s0 - q * s1;
    s0 = s1;
    s1 = s;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, s1);
  out.canonicalize();
  return out;
}

// Homogenized, sorted highest first, scaled so that the first term of the
// first entry is 1.
std::optional<SparseVec> finish(const Fp& F, SparseVec v, std::size_t hom, long total) {
  for (auto& f : v) {
    std::vector<std::size_t> order(f.mono.size());
    for (std::size_t l = 0; l < order.size(); ++l) {
      if (static_cast<long>(f.mono[l].degree) > total) return std::nullopt;
      f.mono[l] = f.mono[l] * Monomial::unit(hom, static_cast<std::uint16_t>(total - f.mono[l].degree));
      order[l] = l;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return grlex_greater(f.mono[a], f.mono[b]); });
    SparsePoly g;
    for (std::size_t l : order) {
      g.mono.push_back(f.mono[l]);
      g.coef.push_back(f.coef[l]);
    }
    f = std::move(g);
  }
  if (v.empty() || v[0].coef.empty()) return std::nullopt;
  const u64 s = F.inv(v[0].coef[0]);
  for (auto& f : v)
    for (auto& c : f.coef) c = F.mul(c, s);
  return v;
}

bool same_support(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].mono != b[i].mono) return false;
  return true;
}

}  // namespace

InterpolationResult interpolate_kernel(const MasterMatrix& a, const InterpolationLimits& limits) {
  const std::size_t m = a.m;
  if (m == 0) throw InvalidArgument("empty master matrix");
  const std::size_t nv = a.entries.front().nvars();
  InterpolationResult result;
  if (m == 1) {
    result.entries.push_back(RatePoly::constant(nv, Rational(1)));
    return result;
  }

  std::vector<bool> used(nv, false);
  for (const auto& e : a.entries)
    for (const auto& t : e.terms())
      for (std::size_t v = 0; v < nv; ++v)
        if (t.mono.exp[v]) used[v] = true;
  Problem pb{a, m, nv, {}, 0, {}};
  for (std::size_t v = 0; v < nv; ++v)
    if (used[v]) pb.vars.push_back(v);
  if (pb.vars.empty()) throw InvariantViolation("master matrix has no rate symbols");
  pb.hom = pb.vars.back();
  pb.vars.pop_back();

  std::mt19937_64 rng(0x243f6a8885a308d3ULL);
  for (std::size_t i = 0; i < m; ++i) pb.mix.push_back(rng() >> 2);

  Work work(limits.max_work);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, 62);

  std::optional<long> total;
  std::optional<SparseVec> first;
  std::vector<std::vector<Integer>> residues;
  Integer modulus = 1;
  unsigned degenerate = 0;

  while (result.primes < limits.max_primes) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    Prime prime(pb, p.get_ui(), work);
    for (std::size_t i = 0; i < m; ++i) pb.mix[i] %= prime.F.p;
    Interpolator in(pb, prime, rng, limits, work);
    if (!total) {
      total = in.total_degree();
      if (!total) {
        if (++degenerate > 4) break;
        continue;
      }
    }
    auto raw = in.run(*total);
    std::optional<SparseVec> image = raw ? finish(prime.F, std::move(*raw), pb.hom, *total) : std::nullopt;
    if (!image) {
      if (++degenerate > 4) break;
      continue;
    }
    ++result.primes;
    if (!first || !same_support(*first, *image)) {
      first = *image;
      residues.assign(m, {});
      for (std::size_t i = 0; i < m; ++i)
        for (u64 c : (*image)[i].coef) residues[i].emplace_back(static_cast<unsigned long>(c));
      modulus = Integer(static_cast<unsigned long>(prime.F.p));
    } else {
      const Fp& F = prime.F;
      const u64 minv = F.inv(F.from(modulus));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < residues[i].size(); ++l) {
          u64 old = F.from(residues[i][l]);
          u64 t = F.mul(F.sub((*image)[i].coef[l], old), minv);
          residues[i][l] += modulus * Integer(static_cast<unsigned long>(t));
        }
      modulus *= Integer(static_cast<unsigned long>(F.p));
    }

    std::vector<std::vector<Rational>> coeffs(m);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (const auto& r : residues[i]) {
        auto q = reconstruct(r, modulus);
        if (!q || *q <= 0) {
          ok = false;
          break;
        }
        coeffs[i].push_back(*q);
      }
    if (!ok) continue;

    Integer den = 1, num = 0;
    for (const auto& row : coeffs)
      for (const auto& q : row) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
      }
    Rational scale(den, num);
    scale.canonicalize();
    KernelVector cand;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Term> terms;
      for (std::size_t l = 0; l < coeffs[i].size(); ++l)
        terms.push_back(Term{(*first)[i].mono[l], coeffs[i][l] * scale});
      cand.entries.push_back(RatePoly::from_terms(nv, std::move(terms)));
    }
    work.charge(std::uint64_t{m} * 64);
    if (annihilates(a, cand)) {
      result.entries = std::move(cand.entries);
      result.work = work.spent();
      return result;
    }
  }
  throw InvariantViolation("kernel interpolation did not converge after " +
                           std::to_string(result.primes) + " primes");
}

}  // namespace pfcrn::detail
