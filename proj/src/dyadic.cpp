#include "magicfiber/dyadic.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace magicfiber {

mpz_class pow2(long e) {
  assert(e >= 0);
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

mpq_class dyadic_to_mpq(const mpz_class& num, long level) {
  if (level >= 0) {
    mpq_class q(num, pow2(level));
    q.canonicalize();
    return q;
  }
  return mpq_class(num * pow2(-level));
}

int cmp_dyadic(const mpz_class& a, long la, const mpz_class& b, long lb) {
  // Compare a/2^la vs b/2^lb by scaling to the common (finer) level.
  long l = std::max(la, lb);
  mpz_class as = a << static_cast<unsigned long>(l - la);
  mpz_class bs = b << static_cast<unsigned long>(l - lb);
  return cmp(as, bs);
}

namespace {

std::string render_decimal(const mpz_class& scaled, int digits) {
  // scaled = floor/ceil of value*10^digits, non-negative.
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, std::string(digits + 1 - s.size(), '0'));
  }
  s.insert(s.size() - digits, ".");
  return s;
}

}  // namespace

std::string decimal_floor(const mpz_class& num, long level, int digits) {
  assert(num >= 0);
  mpz_class scaled;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  if (level >= 0) {
    mpz_fdiv_q(scaled.get_mpz_t(), mpz_class(num * p10).get_mpz_t(),
               pow2(level).get_mpz_t());
  } else {
    scaled = num * p10 * pow2(-level);
  }
  return render_decimal(scaled, digits);
}

std::string decimal_ceil(const mpz_class& num, long level, int digits) {
  assert(num >= 0);
  mpz_class scaled;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  if (level >= 0) {
    mpz_cdiv_q(scaled.get_mpz_t(), mpz_class(num * p10).get_mpz_t(),
               pow2(level).get_mpz_t());
  } else {
    scaled = num * p10 * pow2(-level);
  }
  return render_decimal(scaled, digits);
}

std::string decimal_floor(const mpq_class& v, int digits) {
  assert(v >= 0);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), mpz_class(v.get_num() * p10).get_mpz_t(),
             v.get_den().get_mpz_t());
  return render_decimal(scaled, digits);
}

std::string decimal_ceil(const mpq_class& v, int digits) {
  assert(v >= 0);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled;
  mpz_cdiv_q(scaled.get_mpz_t(), mpz_class(v.get_num() * p10).get_mpz_t(),
             v.get_den().get_mpz_t());
  return render_decimal(scaled, digits);
}

int digits_for_level(long level) {
  if (level < 0) level = 0;
  long d = (level * 30103 + 99999) / 100000 + 1;
  if (d < 6) d = 6;
  if (d > 18) d = 18;
  return static_cast<int>(d);
}

bool interval_strictly_less(const DyadicInterval& a, const DyadicInterval& b) {
  return cmp_dyadic(a.hi, a.level, b.lo, b.level) < 0;
}

namespace {

// Truncated atanh series with exact tail bound: returns [slo, shi] rationals
// with slo <= ln(x) <= shi for exact rational x >= 1.
void ln_bounds(const mpq_class& x, long out_level, mpq_class* slo,
               mpq_class* shi) {
  if (x < 1) throw std::invalid_argument("interval_ln: input below 1");
  if (x == 1) {
    *slo = 0;
    *shi = 0;
    return;
  }
  mpq_class u = (x - 1) / (x + 1);
  u.canonicalize();
  mpq_class u2 = u * u;
  mpq_class target = mpq_class(1, pow2(out_level + 2));
  mpq_class sum = 0;
  mpq_class upow = u;  // u^(2j+1)
  unsigned long j = 0;
  while (true) {
    sum += 2 * upow / mpq_class(2 * j + 1);
    // Tail after term j: 2 u^(2j+3) / ((2j+3)(1-u^2)).
    mpq_class tail = 2 * upow * u2 / (mpq_class(2 * j + 3) * (1 - u2));
    if (tail <= target) {
      *slo = sum;
      *shi = sum + tail;
      return;
    }
    upow *= u2;
    ++j;
    if (j > 100000) throw std::runtime_error("interval_ln: series stalled");
  }
}

}  // namespace

DyadicInterval interval_ln(const DyadicInterval& x, long out_level) {
  mpq_class xlo = dyadic_to_mpq(x.lo, x.level);
  mpq_class xhi = dyadic_to_mpq(x.hi, x.level);
  mpq_class lo_lo, lo_hi, hi_lo, hi_hi;
  ln_bounds(xlo, out_level, &lo_lo, &lo_hi);
  ln_bounds(xhi, out_level, &hi_lo, &hi_hi);
  DyadicInterval r;
  r.level = out_level;
  mpz_class scale = pow2(out_level);
  mpz_fdiv_q(r.lo.get_mpz_t(), mpz_class(lo_lo.get_num() * scale).get_mpz_t(),
             lo_lo.get_den().get_mpz_t());
  mpz_cdiv_q(r.hi.get_mpz_t(), mpz_class(hi_hi.get_num() * scale).get_mpz_t(),
             hi_hi.get_den().get_mpz_t());
  return r;
}

DyadicInterval interval_scale(const DyadicInterval& x, long m) {
  assert(m >= 0);
  return DyadicInterval{x.lo * m, x.hi * m, x.level};
}

}  // namespace magicfiber
