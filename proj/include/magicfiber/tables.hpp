#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magicfiber/fillings.hpp"

namespace magicfiber {

// The three Dehn fillings whose fibered faces the minimum tables cover.
enum class Fill { MinusThreeHalves, MinusOneHalf, Two };
const char* fill_name(Fill f);  // "-3/2" / "-1/2" / "2"
std::optional<Fill> fill_from_string(const std::string& s);
Family fill_family(Fill f);  // -3/2 -> A, -1/2 -> P, 2 -> R

// Genus-g candidates on the filled face: representatives (k, l) with
// 0 <= l < k (l > 0 stands for the +-l mirror pair), gcd(k, l) = 1,
// closed_genus == g, and no 1-prong orbit; orientable_only additionally
// requires capped_orientable. Only k in {g, g+1, g+2} can reach genus g.
// Sorted by (k, l). Requires g >= 2.
std::vector<FamilyClass> candidate_set(Fill r, long long g,
                                       bool orientable_only);

struct MinTableRow {
  long long g = 0;
  Fill fill = Fill::MinusThreeHalves;
  bool orientable_only = false;
  bool empty = true;
  std::vector<FamilyClass> argmins;    // all tied minimizers, sorted by (k,l)
  std::optional<RootInterval> lambda;  // bracket at the requested level
  long candidates_examined = 0;
  // True when no congruence rule (and no parity argument) predicts this
  // row, so the result is purely computed.
  bool beyond_rule_table = false;
};

// Certified minimum dilatation over candidate_set(r, g, orientable_only).
MinTableRow min_lambda(Fill r, long long g, bool orientable_only,
                       RootEngine& eng, long level);

// What a congruence rule predicts for a (fill, genus, orientable) row.
struct RulePrediction {
  bool covered = false;        // some rule or parity argument applies
  bool expect_empty = false;   // the row must be empty
  long long k = 0, l = 0;      // expected unique argmin otherwise
  // Claimed comparison of this row's minimum against the -1/2 row of the
  // same genus and orientability: "less", "greater", "leq-equal-iff-g5",
  // or "" when nothing is claimed.
  std::string versus_one_half;
};
RulePrediction rule_prediction(Fill r, long long g, bool orientable_only);

struct DeltaBound {
  long long g = 0;
  bool orientable_only = false;
  bool empty = false;                 // no candidate under any filling
  std::optional<RootInterval> lambda;
  std::vector<std::string> sources;   // tied winners, e.g. "fill -3/2: (A,7,4)"
  std::vector<MinTableRow> rows;      // the three per-fill rows
  std::optional<FiberedClass> special_class;  // sporadic winner when set
};

// Upper bound for the minimum dilatation at genus g: the best row among the
// three fillings, also weighing the sporadic classes (18,17,7) at g = 8 and
// (27,21,8) at g = 13 (both non-orientable). Requires g >= 2.
DeltaBound delta_upper_bound(long long g, bool orientable_only,
                             RootEngine& eng, long level);

// Normalized entropy along the filled fibered face, parametrized by
// s = l/k in (-1, 1): Ent(s) = 2k * ln(lambda_(k,|l|)). The same function
// serves all three fillings.
struct EntFacePoint {
  long long k = 1;
  long long l = 0;
  DyadicInterval ent;
  bool minimum = false;
};
struct EntFaceScan {
  std::vector<EntFacePoint> points;  // sorted by s ascending
  size_t min_index = 0;              // certified strict minimum
};
// All reduced s = l/k with k <= max_denom (capped at 64).
EntFaceScan ent_face_scan(long long max_denom, RootEngine& eng, long level);

// Normalized entropy ||c|| * ln(lambda(c)) over primitive cone classes with
// coordinates bounded by max_coord (capped at 12).
struct MagicEntPoint {
  FiberedClass c;
  DyadicInterval ent;
  bool minimum = false;
};
struct MagicEntScan {
  std::vector<MagicEntPoint> points;  // lexicographic in (x, y, z)
  size_t min_index = 0;               // certified strict minimum
};
MagicEntScan ent_face_magic(long long max_coord, RootEngine& eng, long level);

struct Rational {
  long long num = 0;
  long long den = 1;
};

struct ConcavityResult {
  bool holds = false;
  long level_used = 0;
  long long k = 0, l = 0;  // the reduced interpolated parameter t*s1+(1-t)*s2
};

// Certified check of strict concavity of 1/Ent between face parameters
// s1 != s2 in (-1,1) at weight t in (0,1):
//   1/Ent(t*s1 + (1-t)*s2) > t/Ent(s1) + (1-t)/Ent(s2)
// decided with exact rational endpoint arithmetic, escalating the working
// precision until one side is certain.
ConcavityResult concavity_check(Rational s1, Rational s2, Rational t,
                                RootEngine& eng);

enum class ClaimStatus { Pass, Fail, Flag };
const char* claim_status_name(ClaimStatus s);  // "PASS" / "FAIL" / "FLAG"

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::Fail;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  int passed = 0;
  int failed = 0;
  int flagged = 0;
};

// Runs one of the recorded-claim suites: "inequalities", "equalities",
// "congruences", "smallgenus", "monotone", "asymptotic". A FAIL means a
// certified computation contradicts a recorded claim whose own data is
// consistent; a FLAG marks a recorded claim whose stated relation already
// contradicts its own recorded approximations (the certified result is
// attached either way).
VerifyReport verify_claims(const std::string& suite, long long genus_to,
                           RootEngine& eng, long level);

}  // namespace magicfiber
