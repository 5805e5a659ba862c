#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace magicfiber {

// Dense operations (Taylor shifts, variation counts, gcd) are quadratic in
// the degree; inputs past this guard are rejected with a domain error.
inline constexpr long kDegreeGuard = 8192;

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sparse integer polynomial: exponent -> nonzero coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  static IntPoly monomial(long e, const mpz_class& c);
  static IntPoly constant(const mpz_class& c) { return monomial(0, c); }

  void add_term(long e, const mpz_class& c);

  bool is_zero() const { return terms_.empty(); }
  long degree() const;  // -1 for the zero polynomial
  long low_exponent() const;
  const mpz_class& leading() const;
  mpz_class coeff(long e) const;
  size_t term_count() const { return terms_.size(); }
  const std::map<long, mpz_class>& terms() const { return terms_; }

  bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly negated() const;
  IntPoly derivative() const;
  IntPoly compose_power(long m) const;  // p(t^m), m >= 1

  mpz_class eval_int(const mpz_class& v) const;
  // Exact sign of p(num/2^level); level may be negative.
  int sign_at_dyadic(const mpz_class& num, long level) const;

  // "t^9 - t^7 - t^5 - t^4 - t^2 + 1" (descending exponents).
  std::string to_string() const;
  // Stable cache key "e:c e:c ..." ascending.
  std::string canonical_key() const;
  static std::optional<IntPoly> parse_canonical(const std::string& s);

  std::vector<mpz_class> to_dense() const;  // index = exponent
  static IntPoly from_dense(const std::vector<mpz_class>& c);

 private:
  std::map<long, mpz_class> terms_;
};

// Number of sign alternations in a coefficient list, zeros skipped.
long sign_variations(const std::vector<mpz_class>& c);

// Upper bound on the count of real roots of p in the open interval
// (a_num/2^a_lvl, b_num/2^b_lvl), with the usual guarantees: the count has
// the parity of the true number of roots (with multiplicity), and 0/1 are
// conclusive. Endpoints must be non-negative with a < b.
long interval_variation_count(const IntPoly& p, const mpz_class& a_num,
                              long a_lvl, const mpz_class& b_num, long b_lvl);

// Primitive gcd of two integer polynomials (subresultant-free primitive PRS),
// normalized to positive leading coefficient. gcd(p, 0) = primitive(p).
IntPoly poly_gcd_primitive(const IntPoly& a, const IntPoly& b);

// p with repeated roots collapsed: p / gcd(p, p').
IntPoly squarefree_part(const IntPoly& p);

// Exact quotient a / b; throws DomainError when the division is not exact.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

}  // namespace magicfiber
