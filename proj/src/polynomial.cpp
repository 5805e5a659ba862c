#include "magicfiber/polynomial.hpp"

#include <cassert>
#include <sstream>

#include "magicfiber/dyadic.hpp"

namespace magicfiber {

IntPoly IntPoly::monomial(long e, const mpz_class& c) {
  IntPoly p;
  p.add_term(e, c);
  return p;
}

void IntPoly::add_term(long e, const mpz_class& c) {
  if (c == 0) return;
  assert(e >= 0);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long IntPoly::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

long IntPoly::low_exponent() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

const mpz_class& IntPoly::leading() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

mpz_class IntPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

IntPoly IntPoly::negated() const {
  IntPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

IntPoly IntPoly::derivative() const {
  IntPoly r;
  for (const auto& [e, c] : terms_)
    if (e > 0) r.add_term(e - 1, c * e);
  return r;
}

IntPoly IntPoly::compose_power(long m) const {
  assert(m >= 1);
  IntPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * m, c);
  return r;
}

mpz_class IntPoly::eval_int(const mpz_class& v) const {
  mpz_class acc = 0, pw;
  for (const auto& [e, c] : terms_) {
    mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e));
    acc += c * pw;
  }
  return acc;
}

int IntPoly::sign_at_dyadic(const mpz_class& num, long level) const {
  if (terms_.empty()) return 0;
  if (level <= 0) {
    mpz_class v = eval_int(num * pow2(-level));
    return sgn(v);
  }
  // sign of sum c_e num^e 2^(level*(d-e)), d = degree.
  long d = degree();
  mpz_class acc = 0, pw;
  for (const auto& [e, c] : terms_) {
    mpz_pow_ui(pw.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    acc += c * (pw << static_cast<unsigned long>(level * (d - e)));
  }
  return sgn(acc);
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) out << a.get_str();
    if (e > 0) {
      out << "t";
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

std::string IntPoly::canonical_key() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " ";
    out << e << ":" << c.get_str();
    first = false;
  }
  return out.str();
}

std::optional<IntPoly> IntPoly::parse_canonical(const std::string& s) {
  IntPoly p;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) return std::nullopt;
    try {
      long e = std::stol(tok.substr(0, colon));
      mpz_class c(tok.substr(colon + 1));
      if (e < 0 || c == 0) return std::nullopt;
      p.add_term(e, c);
    } catch (...) {
      return std::nullopt;
    }
  }
  return p;
}

std::vector<mpz_class> IntPoly::to_dense() const {
  long d = degree();
  if (d > kDegreeGuard)
    throw DomainError("polynomial degree exceeds dense-operation guard");
  std::vector<mpz_class> c(static_cast<size_t>(d + 1));
  for (const auto& [e, v] : terms_) c[static_cast<size_t>(e)] = v;
  return c;
}

IntPoly IntPoly::from_dense(const std::vector<mpz_class>& c) {
  IntPoly p;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p.add_term(static_cast<long>(i), c[i]);
  return p;
}

long sign_variations(const std::vector<mpz_class>& c) {
  long v = 0;
  int last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

long interval_variation_count(const IntPoly& p, const mpz_class& a_num,
                              long a_lvl, const mpz_class& b_num, long b_lvl) {
  assert(!p.is_zero());
  long d = p.degree();
  if (d > kDegreeGuard)
    throw DomainError("polynomial degree exceeds dense-operation guard");
  long lc = std::max({0L, a_lvl, b_lvl});
  mpz_class A = a_num << static_cast<unsigned long>(lc - a_lvl);
  mpz_class B = b_num << static_cast<unsigned long>(lc - b_lvl);
  assert(A >= 0 && A < B);

  // q(x) = sum_e c_e (A + Bx)^e (S(1+x))^(d-e), S = 2^lc; sign variations of
  // q bound the roots of p in the open interval (A/S, B/S) via the Moebius
  // map t = (A + Bx)/(S(1+x)), x in (0, inf).
  std::vector<mpz_class> q(static_cast<size_t>(d + 1));
  std::vector<mpz_class> row1;
  for (const auto& [e, c] : p.terms()) {
    // row1 = coefficients of (A + Bx)^e.
    row1.assign(static_cast<size_t>(e + 1), mpz_class(0));
    mpz_class bin = 1, apw;
    mpz_pow_ui(apw.get_mpz_t(), A.get_mpz_t(), static_cast<unsigned long>(e));
    // Incremental binomials: C(e,i+1) = C(e,i)*(e-i)/(i+1); powers tracked by
    // dividing out A and multiplying B (A — 0 handled by recomputing).
    if (A == 0) {
      mpz_class bpw;
      mpz_pow_ui(bpw.get_mpz_t(), B.get_mpz_t(),
                 static_cast<unsigned long>(e));
      row1[static_cast<size_t>(e)] = bpw;
    } else {
      mpz_class cur = apw;
      for (long i = 0; i <= e; ++i) {
        row1[static_cast<size_t>(i)] = bin * cur;
        if (i < e) {
          bin = bin * (e - i) / (i + 1);
          cur = cur / A * B;
        }
      }
    }
    // (S(1+x))^(d-e) has coefficients C(d-e,j) * 2^(lc*(d-e)).
    long m = d - e;
    mpz_class sc = pow2(lc * m);
    mpz_class bin2 = 1;
    for (long j = 0; j <= m; ++j) {
      mpz_class w = c * sc * bin2;
      for (long i = 0; i <= e; ++i)
        q[static_cast<size_t>(i + j)] += w * row1[static_cast<size_t>(i)];
      if (j < m) bin2 = bin2 * (m - j) / (j + 1);
    }
  }
  return sign_variations(q);
}

namespace {

mpz_class content(const std::vector<mpz_class>& c) {
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(std::vector<mpz_class>* c) {
  while (!c->empty() && c->back() == 0) c->pop_back();
  if (c->empty()) return;
  mpz_class g = content(*c);
  if (g > 1)
    for (auto& x : *c) x /= g;
  if (c->back() < 0)
    for (auto& x : *c) x = -x;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0): lead(b)^(da-db+1) * a
// reduced mod b.
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a,
                                  const std::vector<mpz_class>& b) {
  long da = static_cast<long>(a.size()) - 1;
  long db = static_cast<long>(b.size()) - 1;
  const mpz_class& lb = b.back();
  for (long k = da; k >= db; --k) {
    mpz_class top = a[static_cast<size_t>(k)];
    for (auto& x : a) x *= lb;
    for (long j = 0; j <= db; ++j)
      a[static_cast<size_t>(k - db + j)] -= top * b[static_cast<size_t>(j)];
    assert(a[static_cast<size_t>(k)] == 0);
  }
  a.resize(static_cast<size_t>(db));
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

IntPoly poly_gcd_primitive(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  std::vector<mpz_class> u = a.is_zero() ? b.to_dense() : a.to_dense();
  std::vector<mpz_class> v;
  if (!a.is_zero() && !b.is_zero()) v = b.to_dense();
  make_primitive(&u);
  make_primitive(&v);
  if (v.size() > u.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return IntPoly::constant(1);
    std::vector<mpz_class> r = pseudo_rem(u, v);
    make_primitive(&r);
    u = std::move(v);
    v = std::move(r);
  }
  return IntPoly::from_dense(u);
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  IntPoly g = poly_gcd_primitive(p, p.derivative());
  if (g.degree() <= 0) return p;
  return exact_divide(p, g);
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return IntPoly();
  std::vector<mpz_class> u = a.to_dense();
  std::vector<mpz_class> v = b.to_dense();
  long da = static_cast<long>(u.size()) - 1;
  long db = static_cast<long>(v.size()) - 1;
  if (da < db) throw DomainError("inexact polynomial division");
  std::vector<mpz_class> q(static_cast<size_t>(da - db + 1));
  for (long k = da - db; k >= 0; --k) {
    mpz_class top = u[static_cast<size_t>(k + db)];
    if (top == 0) continue;
    mpz_class c;
    mpz_class r;
    mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                v.back().get_mpz_t());
    if (r != 0) throw DomainError("inexact polynomial division");
    q[static_cast<size_t>(k)] = c;
    for (long j = 0; j <= db; ++j)
      u[static_cast<size_t>(k + j)] -= c * v[static_cast<size_t>(j)];
  }
  for (const auto& x : u)
    if (x != 0) throw DomainError("inexact polynomial division");
  return IntPoly::from_dense(q);
}

}  // namespace magicfiber
