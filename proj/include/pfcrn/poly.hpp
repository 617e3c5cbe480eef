#pragma once

// Exact multivariate polynomials over the rationals, in a fixed set of rate
// symbols. Terms are kept sorted by graded lexicographic order (total degree
// first, then exponent of the first declared symbol, ...), highest first, and
// never hold a zero coefficient, so structural equality is polynomial equality.

#include "pfcrn/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pfcrn {

inline constexpr std::size_t kMaxSymbols = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxSymbols> exp{};
  std::uint32_t degree = 0;

  static Monomial unit(std::size_t var, std::uint16_t power = 1);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other) on the caller's side.
  Monomial quotient(const Monomial& divisor) const;
  Monomial gcd(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
};

// Graded lexicographic comparison; true when a is strictly greater than b.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

class RatePoly {
 public:
  RatePoly() = default;
  explicit RatePoly(std::size_t nvars);

  static RatePoly constant(std::size_t nvars, const Rational& c);
  static RatePoly variable(std::size_t nvars, std::size_t index);
  static RatePoly term(std::size_t nvars, const Monomial& m, const Rational& c);
  // Builds from unsorted, possibly repeated terms.
  static RatePoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool has_integer_coefficients() const;

  RatePoly operator-() const;
  RatePoly& operator+=(const RatePoly& rhs);
  RatePoly& operator-=(const RatePoly& rhs);
  RatePoly& operator*=(const RatePoly& rhs);
  RatePoly& operator*=(const Rational& c);

  friend RatePoly operator+(RatePoly a, const RatePoly& b) { return a += b; }
  friend RatePoly operator-(RatePoly a, const RatePoly& b) { return a -= b; }
  friend RatePoly operator*(const RatePoly& a, const RatePoly& b);
  friend RatePoly operator*(RatePoly a, const Rational& c) { return a *= c; }
  friend RatePoly operator*(const Rational& c, RatePoly a) { return a *= c; }

  bool operator==(const RatePoly& other) const;

  RatePoly mul_monomial(const Monomial& m, const Rational& c) const;
  RatePoly pow(unsigned e) const;

 private:
  friend class PolyBuilder;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

enum class SignSummary { zero, all_positive, all_negative, mixed };

const char* to_string(SignSummary s);

// Zero reports any_degree; a non-homogeneous polynomial reports no degree.
struct Homogeneity {
  bool any_degree = false;
  std::optional<std::uint32_t> degree;
};

struct PrimitivePart {
  Rational content;           // positive
  Monomial content_monomial;  // common monomial factor
  RatePoly primitive;         // integer coefficients, gcd 1, positive lead
  bool flipped = false;       // true when the sign was moved out of primitive
};

SignSummary sign_summary(const RatePoly& p);
Homogeneity homogeneous_degree(const RatePoly& p);

// p = (flipped ? -1 : 1) * content * content_monomial * primitive.
// Throws InvalidArgument for the zero polynomial.
PrimitivePart primitive_part(const RatePoly& p);

// Primitive part times nothing else: the canonical representative used for
// deduplication. Zero maps to zero.
RatePoly canonical(const RatePoly& p);

// Quotient when d divides p exactly, nullopt otherwise. d must be nonzero.
std::optional<RatePoly> divide_exact(const RatePoly& p, const RatePoly& d);

// Greatest common divisor, sign-normalized primitive (monomial factors kept).
// gcd(p, 0) = primitive(p) including its monomial content; gcd(0, 0) throws.
RatePoly gcd(const RatePoly& p, const RatePoly& q);

// p = sum_k c[k] var^k with every c[k] free of var.
std::vector<RatePoly> coefficients_in_variable(const RatePoly& p, std::size_t var);

// gcd of the coefficients of p viewed as a polynomial in var, over the other
// symbols.
RatePoly content_in_variable(const RatePoly& p, std::size_t var);

Rational evaluate(const RatePoly& p, std::span<const Rational> values);

// Canonical text such as "6*a^2 + 3*a*b" or "-2/3*a + 1".
std::string to_string(const RatePoly& p, std::span<const std::string> symbols);
std::string to_string(const Monomial& m, std::size_t nvars,
                      std::span<const std::string> symbols);

}  // namespace pfcrn
