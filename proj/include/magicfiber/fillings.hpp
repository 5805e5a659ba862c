#pragma once

#include <array>
#include <optional>
#include <string>

#include "magicfiber/homology.hpp"
#include "magicfiber/polyroot.hpp"

namespace magicfiber {

// The three one-parameter Dehn fillings of the magic manifold covered here:
// family A fills the beta cusp along -3/2, P fills beta along -1/2, and R
// fills gamma along 2.
enum class Family { A, P, R };
const char* family_name(Family f);  // "A" / "P" / "R"
std::optional<Family> family_from_string(const std::string& s);

// Slope and cusp removed by the family's filling.
Slope filled_slope(Family f);
Torus filled_torus(Family f);

// Class k*a + l*b on the fibered face of the filled manifold, pulled back to
// the magic manifold. Valid parameters: k >= 1, -k < l < k, gcd(k,|l|) = 1.
struct FamilyClass {
  Family family = Family::A;
  long long k = 0;
  long long l = 0;
  bool operator==(const FamilyClass&) const = default;
};
bool family_params_ok(const FamilyClass& fc);
void require_family(const FamilyClass& fc);

// Pullback to the magic manifold:
//   A: (2k+l, 2k+2l, k+2l)   P: (k, 2k+2l, l)   R: (k+l, k-l, -k)
FiberedClass to_fibered_class(const FamilyClass& fc);

// Boundary slopes of the pulled-back fiber; the filled cusp's entry equals
// filled_slope(family).
std::array<Slope, 3> slope_triple(const FamilyClass& fc);

// Genus of the filled manifold's fiber (capping preserves genus):
//   A: k-2 if 5 | (2k+l) or 5 | (k+2l), else k
//   P: k-1 if 3 | k or 3 | l, else k
//   R: k
long long closed_genus(const FamilyClass& fc);

// Fiber in the filled manifold before capping the remaining cusps: the
// pulled-back fiber type with the filled cusp's boundary count zeroed.
FiberType one_cusp_filled_fiber(const FamilyClass& fc);

// True iff some boundary orbit of the pulled-back fiber has one prong; the
// capped monodromy of such a class is excluded from the minimum tables.
bool has_one_prong(const FamilyClass& fc);

// Orientability of the capped invariant foliations (equals the parity rule
// for the pulled-back class).
bool capped_orientable(const FamilyClass& fc);

// Singularity data of the capped closed-surface foliation: the pulled-back
// boundary orbits become interior orbits with the same prong counts, so
// index_sum() == 4 * closed_genus - 4.
SingularityData capped_singularity_data(const FamilyClass& fc);

enum class HypStatus {
  Hyperbolic,                // filled manifold is hyperbolic (family rule)
  NonHyperbolic,             // excluded parameter pair (family rule)
  NecessaryConditionFails,   // a slope or slope pair is exceptional
  Undetermined               // necessary condition passes; no certificate
};
const char* hyp_status_name(HypStatus s);

struct HyperbolicityVerdict {
  HypStatus status = HypStatus::Undetermined;
  std::string witness;  // offending slope or slope pair, empty otherwise
};

// Full classification for family classes: non-hyperbolic exactly on
//   A: (2,+-1), (3,+-1), (4,+-3)
//   P: (1,0), (3,+-1), (3,+-2)
//   R: (2,+-1), (3,+-2), (4,+-3)
// with the exceptional slope or slope pair as witness.
HyperbolicityVerdict hyperbolicity(const FamilyClass& fc);

// Necessary-condition screen for an arbitrary filling triple: a filling is
// not hyperbolic if any slope lies in {inf, -3, -2, -1, 0} or any pair of
// slopes is {1,1}, {-4,-1/2} or {-3/2,-5/2}; otherwise Undetermined.
HyperbolicityVerdict slope_triple_check(const std::array<Slope, 3>& slopes);

// Dilatation bracket of the capped monodromy: largest root of the pair
// polynomial for (k, |l|), at the requested output level.
RootInterval dilatation(const FamilyClass& fc, RootEngine& eng, long level);

}  // namespace magicfiber
