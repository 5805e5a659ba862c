#include "magicfiber/homology.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace magicfiber {

namespace {

// gcd on absolute values, so gcd(0, w) = |w|; 0 only if both vanish.
long long gcd_ll(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

bool in_cone(const FiberedClass& c) {
  return c.x > 0 && c.y > 0 && c.x > c.z && c.y > c.z;
}

void require_cone(const FiberedClass& c) {
  if (!(c.x > 0)) throw DomainError("x > 0 violated");
  if (!(c.y > 0)) throw DomainError("y > 0 violated");
  if (!(c.x > c.z)) throw DomainError("x > z violated");
  if (!(c.y > c.z)) throw DomainError("y > z violated");
}

bool is_primitive(const FiberedClass& c) {
  return gcd_ll(gcd_ll(c.x, c.y), c.z) == 1;
}

void require_primitive(const FiberedClass& c) {
  if (!is_primitive(c))
    throw DomainError("class must be primitive (gcd(|x|,|y|,|z|) = 1)");
}

long long thurston_norm(const FiberedClass& c) {
  require_cone(c);
  return c.x + c.y - c.z;
}

Slope make_slope(long long num, long long den) {
  if (num == 0 && den == 0) throw DomainError("slope 0/0 is undefined");
  if (den == 0) return Slope{1, 0};
  if (num == 0) return Slope{0, 1};
  long long g = gcd_ll(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Slope{num, den};
}

std::string Slope::to_string() const {
  if (is_infinity()) return "inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

BoundaryCounts boundary_counts(const FiberedClass& c) {
  require_cone(c);
  return BoundaryCounts{gcd_ll(c.x, c.y + c.z),
                        gcd_ll(c.y, c.z + c.x),
                        gcd_ll(c.z, c.x + c.y)};
}

std::array<Slope, 3> boundary_slopes(const FiberedClass& c) {
  require_cone(c);
  return {make_slope(-(c.y + c.z), c.x), make_slope(-(c.z + c.x), c.y),
          make_slope(-(c.x + c.y), c.z)};
}

FiberType fiber_type(const FiberedClass& c) {
  require_cone(c);
  require_primitive(c);
  BoundaryCounts b = boundary_counts(c);
  long long norm = thurston_norm(c);
  long long twice_genus = 2 - b.total() + norm;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("fiber genus is not a non-negative integer");
  return FiberType{twice_genus / 2, b.alpha, b.beta, b.gamma};
}

const char* torus_name(Torus t) {
  switch (t) {
    case Torus::Alpha:
      return "alpha";
    case Torus::Beta:
      return "beta";
    default:
      return "gamma";
  }
}

namespace {

std::string grouped(const std::vector<const SingularityEntry*>& es) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const SingularityEntry* e : es) {
    if (!first) out << ", ";
    first = false;
    out << (e->prongs - 2);
    if (e->count > 1) out << "^" << e->count;
  }
  out << ")";
  return out.str();
}

}  // namespace

std::string SingularityData::data_string() const {
  std::vector<const SingularityEntry*> all;
  for (const SingularityEntry& e : entries) all.push_back(&e);
  return grouped(all);
}

std::string SingularityData::singular_string() const {
  std::vector<const SingularityEntry*> sing;
  for (const SingularityEntry& e : entries)
    if (!e.regular) sing.push_back(&e);
  return grouped(sing);
}

long long SingularityData::prong_sum() const {
  long long s = 0;
  for (const SingularityEntry& e : entries) s += e.count * e.prongs;
  return s;
}

long long SingularityData::index_sum() const {
  long long s = 0;
  for (const SingularityEntry& e : entries) s += e.count * (e.prongs - 2);
  return s;
}

bool SingularityData::has_one_prong() const {
  for (const SingularityEntry& e : entries)
    if (e.prongs == 1) return true;
  return false;
}

SingularityData singularity_data(const FiberedClass& c) {
  require_cone(c);
  require_primitive(c);
  BoundaryCounts b = boundary_counts(c);
  SingularityData d;
  auto push = [&d](Torus t, long long prong_total, long long count) {
    if (prong_total % count != 0)
      throw std::logic_error("prong total not divisible by orbit size");
    long long p = prong_total / count;
    d.entries.push_back(SingularityEntry{t, p, count, p == 2});
  };
  push(Torus::Alpha, c.x, b.alpha);
  push(Torus::Beta, c.y, b.beta);
  push(Torus::Gamma, c.x + c.y - 2 * c.z, b.gamma);
  if (d.prong_sum() != 2 * thurston_norm(c))
    throw std::logic_error("prong sum does not match the Euler count");
  return d;
}

bool orientable(const FiberedClass& c) {
  require_cone(c);
  require_primitive(c);
  return c.x % 2 == 0 && c.y % 2 == 0 && (c.z % 2 != 0);
}

namespace {

// Laurent polynomial as exponent -> coefficient (exponents may be negative).
using Laurent = std::map<long long, long long>;

void add_term(Laurent& p, long long e, long long coeff) {
  long long& slot = p[e];
  slot += coeff;
  if (slot == 0) p.erase(e);
}

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

bool orientability_identity_check(const FiberedClass& c) {
  require_cone(c);
  // P(t^x, t^y, t^z)
  Laurent lhs;
  add_term(lhs, c.x, -1);
  add_term(lhs, c.y, -1);
  add_term(lhs, c.z, 1);
  add_term(lhs, c.x + c.y, 1);
  add_term(lhs, c.x + c.z, -1);
  add_term(lhs, c.y + c.z, -1);
  // A((-t)^x, (-t)^y, (-t)^z)
  Laurent rhs;
  add_term(rhs, c.x + c.y, parity_sign(c.x + c.y));
  add_term(rhs, c.y + c.z, parity_sign(c.y + c.z));
  add_term(rhs, c.z + c.x, parity_sign(c.z + c.x));
  add_term(rhs, c.x, -parity_sign(c.x));
  add_term(rhs, c.y, -parity_sign(c.y));
  add_term(rhs, c.z, -parity_sign(c.z));
  return lhs == rhs;
}

}  // namespace magicfiber
