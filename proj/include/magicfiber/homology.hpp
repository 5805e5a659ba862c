#pragma once

#include <array>
#include <string>
#include <vector>

#include "magicfiber/polynomial.hpp"

namespace magicfiber {

// Integral second-homology class x*alpha + y*beta + z*gamma of the
// three-cusped magic manifold, restricted to the fibered cone over the face
// with vertices alpha, alpha+beta+gamma, beta, -gamma.
struct FiberedClass {
  long long x = 0;
  long long y = 0;
  long long z = 0;
  bool operator==(const FiberedClass&) const = default;
};

// Open cone test: x > 0, y > 0, x > z, y > z.
bool in_cone(const FiberedClass& c);
// Throws DomainError naming the first violated inequality, in the order
// "x > 0", "y > 0", "x > z", "y > z".
void require_cone(const FiberedClass& c);

// gcd(|x|, |y|, |z|) == 1.
bool is_primitive(const FiberedClass& c);
void require_primitive(const FiberedClass& c);

// Thurston norm on the cone: x + y - z = -chi(F).
long long thurston_norm(const FiberedClass& c);

// Reduced fraction num/den with den >= 0; infinity is 1/0.
struct Slope {
  long long num = 0;
  long long den = 1;
  bool is_infinity() const { return den == 0; }
  std::string to_string() const;  // "-3/2", "2", "1/0" -> "inf"
  bool operator==(const Slope&) const = default;
};
Slope make_slope(long long num, long long den);

// Boundary components of the fiber on each cusp torus:
// gcd(x, y+z), gcd(y, z+x), gcd(z, x+y), with gcd(0, w) = |w|.
struct BoundaryCounts {
  long long alpha = 0;
  long long beta = 0;
  long long gamma = 0;
  long long total() const { return alpha + beta + gamma; }
  bool operator==(const BoundaryCounts&) const = default;
};
BoundaryCounts boundary_counts(const FiberedClass& c);

// Boundary slopes (-(y+z)/x, -(z+x)/y, -(x+y)/z) on the three cusp tori;
// a zero denominator yields the infinite slope.
std::array<Slope, 3> boundary_slopes(const FiberedClass& c);

// Genus and per-torus boundary counts of the fiber; requires a primitive
// cone class (2 - 2g - b = -(x + y - z)).
struct FiberType {
  long long genus = 0;
  long long b_alpha = 0;
  long long b_beta = 0;
  long long b_gamma = 0;
  long long boundary_total() const { return b_alpha + b_beta + b_gamma; }
  bool operator==(const FiberType&) const = default;
};
FiberType fiber_type(const FiberedClass& c);

enum class Torus { Alpha, Beta, Gamma };
const char* torus_name(Torus t);  // "alpha" / "beta" / "gamma"

// One orbit of boundary components: `count` components on `torus`, each
// meeting `prongs` separatrices of the stable foliation. regular <=>
// prongs == 2 (no singularity after capping).
struct SingularityEntry {
  Torus torus = Torus::Alpha;
  long long prongs = 0;
  long long count = 0;
  bool regular = false;
  bool operator==(const SingularityEntry&) const = default;
};

struct SingularityData {
  // Entries in alpha, beta, gamma order; every torus contributes one entry.
  std::vector<SingularityEntry> entries;
  // All entries as (prongs - 2) values, grouped "v^count": "(2, 0, 2^3)".
  std::string data_string() const;
  // Same, but only entries with prongs != 2: "(16)"; "()" if all regular.
  std::string singular_string() const;
  long long prong_sum() const;  // sum of count * prongs
  long long index_sum() const;  // sum of count * (prongs - 2)
  bool has_one_prong() const;
};

// Per-torus prong counts of the suspension flow's stable foliation:
// x/b_alpha, y/b_beta, (x+y-2z)/b_gamma; the foliation has no interior
// singularities, so prong_sum == 2 * thurston_norm. Requires a primitive
// cone class.
SingularityData singularity_data(const FiberedClass& c);

// The invariant foliations are orientable iff x, y are even and z is odd.
// Requires a primitive cone class.
bool orientable(const FiberedClass& c);

// Independent symbolic check of the parity rule: specializing
// P(t1,t2,t3) = -t1 - t2 + t3 + t1*t2 - t1*t3 - t2*t3 at (t^x, t^y, t^z)
// must equal A(t1,t2,t3) = t1*t2 + t2*t3 + t3*t1 - t1 - t2 - t3 at
// ((-t)^x, (-t)^y, (-t)^z) as Laurent polynomials. Requires a cone class.
bool orientability_identity_check(const FiberedClass& c);

}  // namespace magicfiber
