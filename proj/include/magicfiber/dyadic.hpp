#pragma once

#include <gmpxx.h>

#include <string>

namespace magicfiber {

// Closed interval [lo/2^level, hi/2^level]. A negative level means the
// endpoints are scaled up (wide cells); all arithmetic stays exact.
struct DyadicInterval {
  mpz_class lo;
  mpz_class hi;
  long level = 0;
};

// 2^e for e >= 0.
mpz_class pow2(long e);

// Exact rational value num/2^level as mpq (level may be negative).
mpq_class dyadic_to_mpq(const mpz_class& num, long level);

// Exact comparison of a/2^la vs b/2^lb.
int cmp_dyadic(const mpz_class& a, long la, const mpz_class& b, long lb);

// Decimal rendering of num/2^level (num >= 0) with `digits` places after the
// point, rounded toward -inf / +inf respectively.
std::string decimal_floor(const mpz_class& num, long level, int digits);
std::string decimal_ceil(const mpz_class& num, long level, int digits);
std::string decimal_floor(const mpq_class& v, int digits);
std::string decimal_ceil(const mpq_class& v, int digits);

// Canonical digit count used when rendering a bracket of the given dyadic
// level: ceil(level * log10(2)) + 1, clamped to [6, 18].
int digits_for_level(long level);

// a.hi/2^a.level < b.lo/2^b.level, exactly.
bool interval_strictly_less(const DyadicInterval& a, const DyadicInterval& b);

// Certified natural log. Input must satisfy 1 <= lo <= hi. The result is a
// dyadic interval at `out_level` fractional bits containing [ln lo, ln hi].
// Uses the atanh series 2*sum u^(2j+1)/(2j+1), u=(x-1)/(x+1), with the exact
// tail bound 2u^(2J+3)/((2J+3)(1-u^2)); all arithmetic is exact rational.
DyadicInterval interval_ln(const DyadicInterval& x, long out_level);

// Interval scaled by a non-negative integer m.
DyadicInterval interval_scale(const DyadicInterval& x, long m);

}  // namespace magicfiber
