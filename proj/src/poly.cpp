#include "pfcrn/poly.hpp"

#include "pfcrn/error.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace pfcrn {

// ---------------------------------------------------------------- monomials

Monomial Monomial::unit(std::size_t var, std::uint16_t power) {
  Monomial m;
  m.exp[var] = power;
  m.degree = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    unsigned e = unsigned(exp[i]) + other.exp[i];
    if (e > 0xFFFFu) throw InvalidArgument("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = degree + other.degree;
  return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    m.exp[i] = static_cast<std::uint16_t>(exp[i] - divisor.exp[i]);
  m.degree = degree - divisor.degree;
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    m.exp[i] = std::min(exp[i], other.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

void check_vars(std::size_t nvars) {
  if (nvars > kMaxSymbols)
    throw InvalidArgument("at most " + std::to_string(kMaxSymbols) +
                          " rate symbols are supported");
}

void require_same_ring(const RatePoly& a, const RatePoly& b) {
  if (a.nvars() != b.nvars())
    throw InvalidArgument("polynomials over different symbol sets");
}

}  // namespace

// ---------------------------------------------------------------- RatePoly

RatePoly::RatePoly(std::size_t nvars) : nvars_(nvars) { check_vars(nvars); }

RatePoly RatePoly::constant(std::size_t nvars, const Rational& c) {
  RatePoly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

RatePoly RatePoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidArgument("symbol index out of range");
  return term(nvars, Monomial::unit(index), Rational(1));
}

RatePoly RatePoly::term(std::size_t nvars, const Monomial& m, const Rational& c) {
  RatePoly p(nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

RatePoly RatePoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  RatePoly p(nvars);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool RatePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.degree == 0);
}

std::uint32_t RatePoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree;
}

std::uint32_t RatePoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.mono.exp[var]);
  return d;
}

bool RatePoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff.get_den() == 1; });
}

RatePoly RatePoly::operator-() const {
  RatePoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].mono, a[i].mono)) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RatePoly& RatePoly::operator+=(const RatePoly& rhs) {
  require_same_ring(*this, rhs);
  if (rhs.terms_.empty()) return *this;
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

RatePoly& RatePoly::operator-=(const RatePoly& rhs) {
  require_same_ring(*this, rhs);
  if (rhs.terms_.empty()) return *this;
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

RatePoly& RatePoly::operator*=(const RatePoly& rhs) {
  *this = *this * rhs;
  return *this;
}

RatePoly& RatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

RatePoly RatePoly::mul_monomial(const Monomial& m, const Rational& c) const {
  RatePoly r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves graded lexicographic order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

RatePoly operator*(const RatePoly& a, const RatePoly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return RatePoly(a.nvars());
  if (a.size() == 1) return b.mul_monomial(a.leading().mono, a.leading().coeff);
  if (b.size() == 1) return a.mul_monomial(b.leading().mono, b.leading().coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
  RatePoly r(a.nvars());
  r.terms_ = std::move(terms);
  return r;
}

bool RatePoly::operator==(const RatePoly& other) const {
  if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

RatePoly RatePoly::pow(unsigned e) const {
  RatePoly result = constant(nvars_, Rational(1));
  RatePoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- analysis

const char* to_string(SignSummary s) {
  switch (s) {
    case SignSummary::zero: return "zero";
    case SignSummary::all_positive: return "all_positive";
    case SignSummary::all_negative: return "all_negative";
    case SignSummary::mixed: return "mixed";
  }
  return "?";
}

SignSummary sign_summary(const RatePoly& p) {
  if (p.is_zero()) return SignSummary::zero;
  bool pos = false, neg = false;
  for (const auto& t : p.terms()) (sgn(t.coeff) > 0 ? pos : neg) = true;
  if (pos && neg) return SignSummary::mixed;
  return pos ? SignSummary::all_positive : SignSummary::all_negative;
}

Homogeneity homogeneous_degree(const RatePoly& p) {
  Homogeneity h;
  if (p.is_zero()) {
    h.any_degree = true;
    return h;
  }
  auto d = p.leading().mono.degree;
  for (const auto& t : p.terms())
    if (t.mono.degree != d) return h;
  h.degree = d;
  return h;
}

PrimitivePart primitive_part(const RatePoly& p) {
  if (p.is_zero()) throw InvalidArgument("primitive part of the zero polynomial");
  Integer num_gcd = 0, den_lcm = 1;
  Monomial mono = p.leading().mono;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mono = mono.gcd(t.mono);
  }
  PrimitivePart out;
  out.content = Rational(num_gcd, den_lcm);
  out.content.canonicalize();
  out.content_monomial = mono;
  out.flipped = sgn(p.leading().coeff) < 0;
  Rational scale = 1 / out.content;
  if (out.flipped) scale = -scale;
  RatePoly prim(p.nvars());
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono.quotient(mono), t.coeff * scale});
  // Dividing every term by the same monomial preserves the order.
  out.primitive = RatePoly::from_terms(p.nvars(), std::move(terms));
  return out;
}

RatePoly canonical(const RatePoly& p) {
  if (p.is_zero()) return p;
  return primitive_part(p).primitive;
}

std::optional<RatePoly> divide_exact(const RatePoly& p, const RatePoly& d) {
  require_same_ring(p, d);
  if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (p.is_zero()) return RatePoly(p.nvars());
  if (d.size() == 1) {
    const auto& lt = d.leading();
    Rational inv = 1 / lt.coeff;
    std::vector<Term> q;
    q.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      q.push_back({t.mono.quotient(lt.mono), t.coeff * inv});
    }
    return RatePoly::from_terms(p.nvars(), std::move(q));
  }
  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  const auto& lt = d.leading();
  Rational inv = 1 / lt.coeff;
  std::vector<Term> quotient;
  Rational prod;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lt.mono.divides(it->first)) return std::nullopt;
    Monomial qm = it->first.quotient(lt.mono);
    Rational qc = it->second * inv;
    for (const auto& t : d.terms()) {
      mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), t.coeff.get_mpq_t());
      auto [pos, inserted] = rem.try_emplace(t.mono * qm, -prod);
      if (!inserted) {
        pos->second -= prod;
        if (pos->second == 0) rem.erase(pos);
      }
    }
    quotient.push_back({qm, std::move(qc)});
  }
  return RatePoly::from_terms(p.nvars(), std::move(quotient));
}

// ---------------------------------------------------------------- gcd

namespace {

// Primitive over the integers with a positive leading coefficient; keeps any
// monomial factor.
RatePoly unit_normal(const RatePoly& p) {
  if (p.is_zero()) return p;
  auto pp = primitive_part(p);
  return pp.primitive.mul_monomial(pp.content_monomial, Rational(1));
}

// Coefficient of var^power, as a polynomial free of var.
RatePoly coefficient_in(const RatePoly& p, std::size_t var, std::uint32_t power) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.mono.exp[var] != power) continue;
    Monomial m = t.mono;
    m.exp[var] = 0;
    m.degree -= power;
    terms.push_back({m, t.coeff});
  }
  return RatePoly::from_terms(p.nvars(), std::move(terms));
}

std::optional<std::size_t> main_variable(const RatePoly& a, const RatePoly& b) {
  std::optional<std::size_t> v;
  for (const auto* p : {&a, &b})
    for (const auto& t : p->terms())
      for (std::size_t i = kMaxSymbols; i-- > 0;)
        if (t.mono.exp[i]) {
          if (!v || i > *v) v = i;
          break;
        }
  return v;
}

RatePoly exact_quotient(const RatePoly& p, const RatePoly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw InvariantViolation("gcd: inexact division");
  return *q;
}

// gcd of the coefficients of p viewed as a polynomial in var.
RatePoly content_in(const RatePoly& p, std::size_t var) {
  const auto deg = p.degree_in(var);
  RatePoly g(p.nvars());
  for (std::uint32_t e = 0; e <= deg; ++e) {
    RatePoly c = coefficient_in(p, var, e);
    if (c.is_zero()) continue;
    g = g.is_zero() ? unit_normal(c) : gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

RatePoly pseudo_remainder(RatePoly r, const RatePoly& b, std::size_t var) {
  const auto db = b.degree_in(var);
  const RatePoly lb = coefficient_in(b, var, db);
  while (!r.is_zero()) {
    const auto dr = r.degree_in(var);
    if (dr < db) break;
    RatePoly lr = coefficient_in(r, var, dr);
    r = lb * r - (lr * b).mul_monomial(Monomial::unit(var, static_cast<std::uint16_t>(dr - db)),
                                       Rational(1));
    r = unit_normal(r);
  }
  return r;
}

RatePoly primitive_prs(RatePoly a, RatePoly b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (true) {
    RatePoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return b;
    if (r.degree_in(var) == 0) return RatePoly::constant(a.nvars(), Rational(1));
    a = std::move(b);
    b = exact_quotient(r, content_in(r, var));
  }
}

// Arithmetic in Z/p with p = 2^61 - 1.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a))
    if (e & 1) r = mul_mod(r, a);
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

using UPoly = std::vector<std::uint64_t>;  // coefficients, lowest degree first

void trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

std::size_t upoly_gcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = inv_mod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul_mod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + kPrime - mul_mod(f, b[i])) % kPrime;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

class ModImage {
 public:
  explicit ModImage(std::uint64_t seed) : state_(seed) {}

  // Image of p in (Z/p)[x_var] with every other symbol set to point[i], or
  // nullopt when some denominator vanishes mod p.
  static std::optional<UPoly> image(const RatePoly& p, std::size_t var,
                                    const std::vector<std::uint64_t>& point) {
    UPoly u(p.degree_in(var) + 1, 0);
    for (const auto& t : p.terms()) {
      std::uint64_t num = mpz_fdiv_ui(t.coeff.get_num_mpz_t(), kPrime);
      std::uint64_t den = mpz_fdiv_ui(t.coeff.get_den_mpz_t(), kPrime);
      if (den == 0) return std::nullopt;
      std::uint64_t c = mul_mod(num, inv_mod(den));
      for (std::size_t i = 0; i < p.nvars(); ++i)
        if (i != var && t.mono.exp[i]) c = mul_mod(c, pow_mod(point[i], t.mono.exp[i]));
      auto& slot = u[t.mono.exp[var]];
      slot = (slot + c) % kPrime;
    }
    return u;
  }

  std::vector<std::uint64_t> random_point(std::size_t n) {
    std::vector<std::uint64_t> pt(n);
    for (auto& v : pt) v = next() % (kPrime - 1) + 1;
    return pt;
  }

 private:
  std::uint64_t next() {  // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t state_;
};

// Upper bound on deg_var gcd(a, b). The image of the true gcd divides both
// images and keeps its degree whenever the leading coefficients of a and b
// in var survive, so the bound is rigorous.
std::uint32_t gcd_degree_bound(const RatePoly& a, const RatePoly& b, std::size_t var) {
  const std::uint32_t da = a.degree_in(var), db = b.degree_in(var);
  if (da == 0 || db == 0) return 0;
  ModImage gen(0x5eed + var);
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto pt = gen.random_point(a.nvars());
    auto ia = ModImage::image(a, var, pt);
    auto ib = ModImage::image(b, var, pt);
    if (!ia || !ib) continue;
    trim(*ia);
    trim(*ib);
    if (ia->size() != da + 1 || ib->size() != db + 1) continue;
    return static_cast<std::uint32_t>(upoly_gcd_degree(std::move(*ia), std::move(*ib)));
  }
  return std::min(da, db);
}

// gcd of a and b when it is known not to involve var: it divides every
// coefficient of both in var.
RatePoly gcd_free_of(const RatePoly& a, const RatePoly& b, std::size_t var) {
  std::vector<RatePoly> coeffs;
  for (const auto* p : {&a, &b})
    for (std::uint32_t e = 0; e <= p->degree_in(var); ++e) {
      RatePoly c = coefficient_in(*p, var, e);
      if (!c.is_zero()) coeffs.push_back(std::move(c));
    }
  std::stable_sort(coeffs.begin(), coeffs.end(),
                   [](const RatePoly& x, const RatePoly& y) { return x.size() < y.size(); });
  RatePoly g = unit_normal(coeffs.front());
  for (std::size_t i = 1; i < coeffs.size() && !g.is_constant(); ++i)
    if (!divide_exact(coeffs[i], g)) g = gcd(g, coeffs[i]);
  return g;
}

}  // namespace

std::vector<RatePoly> coefficients_in_variable(const RatePoly& p, std::size_t var) {
  std::vector<RatePoly> out;
  for (std::uint32_t e = 0; e <= p.degree_in(var); ++e) out.push_back(coefficient_in(p, var, e));
  return out;
}

RatePoly content_in_variable(const RatePoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return content_in(p, var);
}

RatePoly gcd(const RatePoly& p, const RatePoly& q) {
  require_same_ring(p, q);
  if (p.is_zero() && q.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
  if (p.is_zero()) return unit_normal(q);
  if (q.is_zero()) return unit_normal(p);
  const std::size_t n = p.nvars();
  auto pp = primitive_part(p);
  auto qp = primitive_part(q);
  Monomial mono = pp.content_monomial.gcd(qp.content_monomial);
  const RatePoly& a = pp.primitive;
  const RatePoly& b = qp.primitive;
  RatePoly g(n);
  if (a.is_constant() || b.is_constant()) {
    g = RatePoly::constant(n, Rational(1));
  } else if (a == b) {
    g = a;
  } else {
    std::optional<std::size_t> free_var;
    bool coprime = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (gcd_degree_bound(a, b, i) == 0) {
        if (a.degree_in(i) || b.degree_in(i)) free_var = free_var.value_or(i);
      } else {
        coprime = false;
      }
    }
    if (coprime) return unit_normal(RatePoly::term(n, mono, Rational(1)));
    if (free_var) return unit_normal(gcd_free_of(a, b, *free_var).mul_monomial(mono, Rational(1)));
    std::size_t v = *main_variable(a, b);
    if (a.degree_in(v) == 0) {
      g = gcd(a, content_in(b, v));
    } else if (b.degree_in(v) == 0) {
      g = gcd(content_in(a, v), b);
    } else {
      RatePoly ca = content_in(a, v), cb = content_in(b, v);
      RatePoly c = gcd(ca, cb);
      g = c * primitive_prs(exact_quotient(a, ca), exact_quotient(b, cb), v);
    }
  }
  return unit_normal(g.mul_monomial(mono, Rational(1)));
}

// ---------------------------------------------------------------- evaluation & text

Rational evaluate(const RatePoly& p, std::span<const Rational> values) {
  if (values.size() < p.nvars()) throw InvalidArgument("evaluate: missing symbol values");
  Rational sum = 0;
  Rational term, power;
  for (const auto& t : p.terms()) {
    term = t.coeff;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (!t.mono.exp[i]) continue;
      mpz_pow_ui(power.get_num_mpz_t(), values[i].get_num_mpz_t(), t.mono.exp[i]);
      mpz_pow_ui(power.get_den_mpz_t(), values[i].get_den_mpz_t(), t.mono.exp[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

std::string to_string(const Monomial& m, std::size_t nvars, std::span<const std::string> symbols) {
  std::string out;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += '*';
    out += i < symbols.size() ? symbols[i] : "k" + std::to_string(i);
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out;
}

std::string to_string(const RatePoly& p, std::span<const std::string> symbols) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string mono = to_string(t.mono, p.nvars(), symbols);
    if (mono.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

}  // namespace pfcrn
