#include "magicfiber/fillings.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace magicfiber {

const char* family_name(Family f) {
  switch (f) {
    case Family::A:
      return "A";
    case Family::P:
      return "P";
    default:
      return "R";
  }
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "P" || s == "p") return Family::P;
  if (s == "R" || s == "r") return Family::R;
  return std::nullopt;
}

Slope filled_slope(Family f) {
  switch (f) {
    case Family::A:
      return make_slope(-3, 2);
    case Family::P:
      return make_slope(-1, 2);
    default:
      return make_slope(2, 1);
  }
}

Torus filled_torus(Family f) {
  return f == Family::R ? Torus::Gamma : Torus::Beta;
}

bool family_params_ok(const FamilyClass& fc) {
  if (fc.k < 1 || fc.l <= -fc.k || fc.l >= fc.k) return false;
  long long al = fc.l < 0 ? -fc.l : fc.l;
  return std::gcd(fc.k, al) == 1;  // gcd(k, 0) = k, so l = 0 forces k = 1
}

void require_family(const FamilyClass& fc) {
  if (fc.k < 1 || fc.l <= -fc.k || fc.l >= fc.k)
    throw DomainError(
        "family parameters out of range: require k >= 1, -k < l < k");
  if (!family_params_ok(fc))
    throw DomainError("family parameters must be coprime: gcd(k,|l|) = 1");
}

FiberedClass to_fibered_class(const FamilyClass& fc) {
  require_family(fc);
  long long k = fc.k, l = fc.l;
  switch (fc.family) {
    case Family::A:
      return FiberedClass{2 * k + l, 2 * k + 2 * l, k + 2 * l};
    case Family::P:
      return FiberedClass{k, 2 * k + 2 * l, l};
    default:
      return FiberedClass{k + l, k - l, -k};
  }
}

std::array<Slope, 3> slope_triple(const FamilyClass& fc) {
  return boundary_slopes(to_fibered_class(fc));
}

long long closed_genus(const FamilyClass& fc) {
  require_family(fc);
  long long k = fc.k, l = fc.l;
  switch (fc.family) {
    case Family::A:
      return ((2 * k + l) % 5 == 0 || (k + 2 * l) % 5 == 0) ? k - 2 : k;
    case Family::P:
      return (k % 3 == 0 || l % 3 == 0) ? k - 1 : k;
    default:
      return k;
  }
}

FiberType one_cusp_filled_fiber(const FamilyClass& fc) {
  FiberType ft = fiber_type(to_fibered_class(fc));
  switch (filled_torus(fc.family)) {
    case Torus::Alpha:
      ft.b_alpha = 0;
      break;
    case Torus::Beta:
      ft.b_beta = 0;
      break;
    default:
      ft.b_gamma = 0;
      break;
  }
  return ft;
}

bool has_one_prong(const FamilyClass& fc) {
  return singularity_data(to_fibered_class(fc)).has_one_prong();
}

bool capped_orientable(const FamilyClass& fc) {
  return orientable(to_fibered_class(fc));
}

SingularityData capped_singularity_data(const FamilyClass& fc) {
  // Capping turns each boundary orbit into an interior orbit with the same
  // prong count, so the data coincides with the pulled-back boundary data.
  return singularity_data(to_fibered_class(fc));
}

const char* hyp_status_name(HypStatus s) {
  switch (s) {
    case HypStatus::Hyperbolic:
      return "hyperbolic";
    case HypStatus::NonHyperbolic:
      return "non-hyperbolic";
    case HypStatus::NecessaryConditionFails:
      return "necessary-condition-fails";
    default:
      return "undetermined";
  }
}

namespace {

const std::vector<Slope>& exceptional_slopes() {
  static const std::vector<Slope> s = {make_slope(1, 0), make_slope(-3, 1),
                                       make_slope(-2, 1), make_slope(-1, 1),
                                       make_slope(0, 1)};
  return s;
}

const std::vector<std::pair<Slope, Slope>>& exceptional_pairs() {
  static const std::vector<std::pair<Slope, Slope>> p = {
      {make_slope(1, 1), make_slope(1, 1)},
      {make_slope(-4, 1), make_slope(-1, 2)},
      {make_slope(-3, 2), make_slope(-5, 2)}};
  return p;
}

bool pair_matches(const Slope& a, const Slope& b,
                  const std::pair<Slope, Slope>& e) {
  return (a == e.first && b == e.second) || (a == e.second && b == e.first);
}

std::string pair_string(const Slope& a, const Slope& b) {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

// Non-hyperbolic parameter pairs per family (witnessed by an exceptional
// slope or slope pair in the class's filling triple).
bool family_non_hyperbolic(const FamilyClass& fc) {
  long long k = fc.k, al = fc.l < 0 ? -fc.l : fc.l;
  switch (fc.family) {
    case Family::A:
      return (k == 2 && al == 1) || (k == 3 && al == 1) || (k == 4 && al == 3);
    case Family::P:
      return (k == 1 && al == 0) || (k == 3 && al == 1) || (k == 3 && al == 2);
    default:
      return (k == 2 && al == 1) || (k == 3 && al == 2) || (k == 4 && al == 3);
  }
}

}  // namespace

HyperbolicityVerdict slope_triple_check(const std::array<Slope, 3>& slopes) {
  for (const Slope& s : slopes)
    for (const Slope& e : exceptional_slopes())
      if (s == e) return {HypStatus::NecessaryConditionFails, s.to_string()};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (const auto& e : exceptional_pairs())
        if (pair_matches(slopes[i], slopes[j], e))
          return {HypStatus::NecessaryConditionFails,
                  pair_string(slopes[i], slopes[j])};
  return {HypStatus::Undetermined, ""};
}

HyperbolicityVerdict hyperbolicity(const FamilyClass& fc) {
  require_family(fc);
  if (!family_non_hyperbolic(fc)) return {HypStatus::Hyperbolic, ""};
  HyperbolicityVerdict v = slope_triple_check(slope_triple(fc));
  if (v.status != HypStatus::NecessaryConditionFails)
    throw std::logic_error("excluded class lacks an exceptional witness");
  return {HypStatus::NonHyperbolic, v.witness};
}

RootInterval dilatation(const FamilyClass& fc, RootEngine& eng, long level) {
  require_family(fc);
  long long al = fc.l < 0 ? -fc.l : fc.l;
  return eng.largest_real_root(pair_poly(fc.k, al), level);
}

}  // namespace magicfiber
