#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "magicfiber/tables.hpp"

using namespace magicfiber;

namespace {

mpq_class decimal_to_mpq(const std::string& s) {
  std::string digits;
  long frac = 0;
  bool dot = false;
  for (char ch : s) {
    if (ch == '.') {
      dot = true;
      continue;
    }
    digits += ch;
    if (dot) ++frac;
  }
  mpz_class num(digits, 10), den;  // base 10: leading-zero strings must not parse as octal
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

void check_contains(const RootInterval& r, const std::string& dec) {
  mpq_class v = decimal_to_mpq(dec);
  CHECK(dyadic_to_mpq(r.lo_num, r.level) <= v);
  CHECK(dyadic_to_mpq(r.hi_num, r.level) >= v);
}

void check_contains(const DyadicInterval& r, const std::string& dec) {
  mpq_class v = decimal_to_mpq(dec);
  CHECK(dyadic_to_mpq(r.lo, r.level) <= v);
  CHECK(dyadic_to_mpq(r.hi, r.level) >= v);
}

bool has_source(const DeltaBound& db, const std::string& s) {
  for (const auto& src : db.sources)
    if (src.find(s) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("fill identification") {
  CHECK(std::string(fill_name(Fill::MinusThreeHalves)) == "-3/2");
  CHECK(std::string(fill_name(Fill::MinusOneHalf)) == "-1/2");
  CHECK(std::string(fill_name(Fill::Two)) == "2");
  CHECK(fill_from_string("-3/2") == Fill::MinusThreeHalves);
  CHECK(fill_from_string("2") == Fill::Two);
  CHECK(!fill_from_string("5").has_value());
  CHECK(fill_family(Fill::MinusThreeHalves) == Family::A);
  CHECK(fill_family(Fill::MinusOneHalf) == Family::P);
  CHECK(fill_family(Fill::Two) == Family::R);
}

TEST_CASE("genus-2 candidate sets") {
  auto p = candidate_set(Fill::MinusOneHalf, 2, false);
  REQUIRE(p.size() == 1);
  CHECK(p[0].k == 2);
  CHECK(p[0].l == 1);
  CHECK(candidate_set(Fill::MinusThreeHalves, 2, false).empty());
  CHECK(candidate_set(Fill::Two, 2, false).empty());
  CHECK_THROWS_WITH_AS(candidate_set(Fill::Two, 1, false),
                       "genus must be at least 2", DomainError);
}

TEST_CASE("candidate sets obey their defining constraints") {
  for (Fill r : {Fill::MinusThreeHalves, Fill::MinusOneHalf, Fill::Two})
    for (long long g = 2; g <= 12; ++g)
      for (bool ori : {false, true}) {
        auto cs = candidate_set(r, g, ori);
        CHECK(std::is_sorted(cs.begin(), cs.end(),
                             [](const FamilyClass& a, const FamilyClass& b) {
                               return a.k != b.k ? a.k < b.k : a.l < b.l;
                             }));
        for (const FamilyClass& fc : cs) {
          CHECK(fc.family == fill_family(r));
          CHECK(fc.l >= 0);
          CHECK(fc.l < fc.k);
          CHECK(std::gcd(fc.k, fc.l) == 1);
          CHECK(fc.k >= g);
          CHECK(fc.k <= g + 2);
          CHECK(closed_genus(fc) == g);
          CHECK(!has_one_prong(fc));
          if (ori) CHECK(capped_orientable(fc));
        }
        if (ori) {
          // orientable candidates form a subset of the full set
          auto full = candidate_set(r, g, false);
          for (const FamilyClass& fc : cs)
            CHECK(std::count_if(full.begin(), full.end(),
                                [&](const FamilyClass& o) {
                                  return o.k == fc.k && o.l == fc.l;
                                }) == 1);
        }
      }
  // spot value: genus 4 at -3/2 has exactly one candidate, (4,1)
  auto c4 = candidate_set(Fill::MinusThreeHalves, 4, false);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].k == 4);
  CHECK(c4[0].l == 1);
  CHECK(candidate_set(Fill::MinusThreeHalves, 4, true).empty());
}

TEST_CASE("certified minimum rows") {
  RootEngine eng;
  MinTableRow r5 = min_lambda(Fill::MinusThreeHalves, 5, false, eng, 40);
  CHECK(!r5.empty);
  REQUIRE(r5.argmins.size() == 1);
  CHECK(r5.argmins[0].k == 7);
  CHECK(r5.argmins[0].l == 1);
  CHECK(r5.candidates_examined == 7);
  CHECK(!r5.beyond_rule_table);
  check_contains(*r5.lambda, "1.1487946926878505738871743184398472777853675373691");

  MinTableRow r5o = min_lambda(Fill::MinusThreeHalves, 5, true, eng, 40);
  REQUIRE(r5o.argmins.size() == 1);
  CHECK(r5o.argmins[0].k == 7);
  CHECK(r5o.argmins[0].l == 4);
  check_contains(*r5o.lambda, "1.1762808182599175065440703384740350506934158065647");

  MinTableRow r6 = min_lambda(Fill::MinusThreeHalves, 6, false, eng, 40);
  REQUIRE(r6.argmins.size() == 1);
  CHECK(r6.argmins[0].k == 8);
  CHECK(r6.argmins[0].l == 1);

  MinTableRow r7o = min_lambda(Fill::MinusThreeHalves, 7, true, eng, 40);
  REQUIRE(r7o.argmins.size() == 1);
  CHECK(r7o.argmins[0].k == 9);
  CHECK(r7o.argmins[0].l == 2);
  check_contains(*r7o.lambda, "1.115481109456591644051049459491537349015684842138");

  MinTableRow r4 = min_lambda(Fill::MinusThreeHalves, 4, false, eng, 40);
  REQUIRE(r4.argmins.size() == 1);
  CHECK(r4.argmins[0].k == 4);
  CHECK(r4.argmins[0].l == 1);
  CHECK(r4.beyond_rule_table);  // no rule covers this row
  CHECK(r4.candidates_examined == 1);

  MinTableRow e4 = min_lambda(Fill::MinusThreeHalves, 4, true, eng, 40);
  CHECK(e4.empty);
  CHECK(!e4.lambda.has_value());
  CHECK(e4.argmins.empty());

  MinTableRow p3 = min_lambda(Fill::MinusOneHalf, 3, false, eng, 40);
  REQUIRE(p3.argmins.size() == 1);
  CHECK(p3.argmins[0].k == 4);
  CHECK(p3.argmins[0].l == 3);
  check_contains(*p3.lambda, "1.4012683679398549151017640956214060492014906778702");

  MinTableRow t7 = min_lambda(Fill::Two, 7, false, eng, 40);
  CHECK(!t7.empty);
  CHECK(t7.beyond_rule_table);  // no rules are recorded for this filling
  for (const FamilyClass& fc : t7.argmins) CHECK(fc.k == 7);
}

TEST_CASE("rule predictions") {
  RulePrediction p = rule_prediction(Fill::MinusThreeHalves, 5, false);
  CHECK(p.covered);
  CHECK(!p.expect_empty);
  CHECK(p.k == 7);
  CHECK(p.l == 1);
  CHECK(p.versus_one_half == "less");

  p = rule_prediction(Fill::MinusThreeHalves, 13, false);
  CHECK(p.covered);
  CHECK(p.k == 13);
  CHECK(p.l == 2);
  CHECK(p.versus_one_half == "greater");

  p = rule_prediction(Fill::MinusThreeHalves, 4, false);
  CHECK(!p.covered);

  p = rule_prediction(Fill::MinusThreeHalves, 12, false);
  CHECK(p.covered);
  CHECK(p.k == 14);
  CHECK(p.l == 3);
  CHECK(p.versus_one_half == "less");

  p = rule_prediction(Fill::MinusThreeHalves, 8, false);
  CHECK(p.covered);
  CHECK(p.k == 8);
  CHECK(p.l == 3);
  CHECK(p.versus_one_half == "greater");

  p = rule_prediction(Fill::MinusThreeHalves, 18, false);
  CHECK(p.k == 18);
  CHECK(p.l == 5);

  p = rule_prediction(Fill::MinusThreeHalves, 6, true);
  CHECK(p.covered);
  CHECK(p.expect_empty);

  p = rule_prediction(Fill::MinusThreeHalves, 5, true);
  CHECK(p.k == 7);
  CHECK(p.l == 4);
  CHECK(p.versus_one_half == "leq-equal-iff-g5");

  p = rule_prediction(Fill::MinusThreeHalves, 7, true);
  CHECK(p.k == 9);
  CHECK(p.l == 2);
  CHECK(p.versus_one_half == "less");

  CHECK(!rule_prediction(Fill::MinusThreeHalves, 3, true).covered);

  p = rule_prediction(Fill::MinusOneHalf, 5, false);
  CHECK(p.k == 6);
  CHECK(p.l == 1);
  p = rule_prediction(Fill::MinusOneHalf, 4, false);
  CHECK(p.k == 5);
  CHECK(p.l == 3);
  p = rule_prediction(Fill::MinusOneHalf, 6, true);
  CHECK(p.expect_empty);
  p = rule_prediction(Fill::MinusOneHalf, 4, true);
  CHECK(p.k == 4);
  CHECK(p.l == 1);
  p = rule_prediction(Fill::MinusOneHalf, 11, true);
  CHECK(p.k == 12);
  CHECK(p.l == 1);

  CHECK(!rule_prediction(Fill::Two, 9, false).covered);
  CHECK(rule_prediction(Fill::Two, 6, true).expect_empty);
  CHECK(!rule_prediction(Fill::Two, 7, true).covered);
}

TEST_CASE("rules match computed rows on a sample range") {
  RootEngine eng;
  for (long long g = 3; g <= 10; ++g)
    for (Fill r : {Fill::MinusThreeHalves, Fill::MinusOneHalf})
      for (bool ori : {false, true}) {
        RulePrediction p = rule_prediction(r, g, ori);
        if (!p.covered) continue;
        MinTableRow row = min_lambda(r, g, ori, eng, 17);
        if (p.expect_empty) {
          CHECK(row.empty);
        } else {
          REQUIRE(row.argmins.size() == 1);
          CHECK(row.argmins[0].k == p.k);
          CHECK(row.argmins[0].l == p.l);
          CHECK(!row.beyond_rule_table);
        }
      }
}

TEST_CASE("dilatation upper bounds per genus") {
  RootEngine eng;

  DeltaBound g2 = delta_upper_bound(2, false, eng, 40);
  CHECK(!g2.empty);
  REQUIRE(g2.sources.size() == 1);
  CHECK(g2.sources[0] == "fill -1/2: (P,2,1)");
  CHECK(!g2.special_class.has_value());
  check_contains(*g2.lambda, "1.7220838057390422450270692121538314620701165557516");

  DeltaBound g3o = delta_upper_bound(3, true, eng, 40);
  CHECK(g3o.sources.size() == 2);
  CHECK(has_source(g3o, "fill -1/2: (P,4,3)"));
  CHECK(has_source(g3o, "fill 2: (R,3,1)"));
  check_contains(*g3o.lambda, "1.4012683679398549151017640956214060492014906778702");

  DeltaBound g5o = delta_upper_bound(5, true, eng, 40);
  CHECK(g5o.sources.size() == 2);
  CHECK(has_source(g5o, "fill -3/2: (A,7,4)"));
  CHECK(has_source(g5o, "fill -1/2: (P,6,1)"));
  check_contains(*g5o.lambda, "1.1762808182599175065440703384740350506934158065647");

  DeltaBound g5 = delta_upper_bound(5, false, eng, 40);
  REQUIRE(g5.sources.size() == 1);
  CHECK(g5.sources[0] == "fill -3/2: (A,7,1)");
  check_contains(*g5.lambda, "1.1487946926878505738871743184398472777853675373691");

  DeltaBound g6o = delta_upper_bound(6, true, eng, 40);
  CHECK(g6o.empty);
  CHECK(!g6o.lambda.has_value());
  CHECK(g6o.sources.empty());
  CHECK(g6o.rows.size() == 3);
  for (const MinTableRow& row : g6o.rows) CHECK(row.empty);

  DeltaBound g8 = delta_upper_bound(8, false, eng, 40);
  REQUIRE(g8.sources.size() == 1);
  CHECK(g8.sources[0] == "class (18,17,7)");
  REQUIRE(g8.special_class.has_value());
  CHECK(*g8.special_class == FiberedClass{18, 17, 7});
  check_contains(*g8.lambda, "1.1040392646640197353981141931662531742336040943552");

  DeltaBound g8o = delta_upper_bound(8, true, eng, 40);
  CHECK(!g8o.special_class.has_value());  // sporadic classes are not oriented
  CHECK(has_source(g8o, "fill -1/2: (P,8,1)"));
  check_contains(*g8o.lambda, "1.1287608680704822194476520925140524331407102232916");

  DeltaBound g13 = delta_upper_bound(13, false, eng, 40);
  REQUIRE(g13.sources.size() == 1);
  CHECK(g13.sources[0] == "class (27,21,8)");
  check_contains(*g13.lambda, "1.0716925107989776959393394545790328534701099902748");

  DeltaBound g4o = delta_upper_bound(4, true, eng, 40);
  CHECK(has_source(g4o, "fill -1/2: (P,4,1)"));
  check_contains(*g4o.lambda, "1.2806381562677575967019025327106763015953133178194");

  DeltaBound g7o = delta_upper_bound(7, true, eng, 40);
  CHECK(has_source(g7o, "fill -3/2: (A,9,2)"));
  check_contains(*g7o.lambda, "1.115481109456591644051049459491537349015684842138");
}

TEST_CASE("normalized entropy scan over the filled face") {
  RootEngine eng;
  EntFaceScan scan = ent_face_scan(6, eng, 40);
  CHECK(scan.points.size() == 23);
  REQUIRE(scan.min_index < scan.points.size());
  const EntFacePoint& m = scan.points[scan.min_index];
  CHECK(m.k == 1);
  CHECK(m.l == 0);
  CHECK(m.minimum);
  check_contains(m.ent, "1.9248473002384137899910356536974736925407373375426");

  // sorted by s = l/k, strictly increasing
  for (size_t i = 1; i < scan.points.size(); ++i) {
    const auto& a = scan.points[i - 1];
    const auto& b = scan.points[i];
    CHECK(a.l * b.k < b.l * a.k);
  }
  // certified strict minimum: every other bracket sits above the minimum's
  for (size_t i = 0; i < scan.points.size(); ++i) {
    if (i == scan.min_index) continue;
    CHECK(!scan.points[i].minimum);
    CHECK(dyadic_to_mpq(scan.points[i].ent.lo, scan.points[i].ent.level) >
          dyadic_to_mpq(m.ent.hi, m.ent.level));
  }
  // mirror parameters carry identical entropy brackets
  for (const auto& p : scan.points) {
    if (p.l >= 0) continue;
    for (const auto& q : scan.points)
      if (q.k == p.k && q.l == -p.l) {
        CHECK(p.ent.lo == q.ent.lo);
        CHECK(p.ent.hi == q.ent.hi);
      }
  }
  // the point at s = 1/2
  bool found_half = false;
  for (const auto& p : scan.points)
    if (p.k == 2 && p.l == 1) {
      found_half = true;
      check_contains(p.ent, "2.1741402899914781995705456024769348868727070150772");
    }
  CHECK(found_half);
  // global lower bound: no bracket dips more than its own width below the
  // entropy at s = 0, the face-wide minimum
  mpq_class floor_v =
      decimal_to_mpq("1.9248473002384137899910356536974736925407373375426");
  for (const auto& p : scan.points) {
    mpq_class lo = dyadic_to_mpq(p.ent.lo, p.ent.level);
    mpq_class hi = dyadic_to_mpq(p.ent.hi, p.ent.level);
    CHECK(lo >= floor_v - (hi - lo));
  }

  CHECK_THROWS_AS(ent_face_scan(0, eng, 17), DomainError);
  CHECK_THROWS_AS(ent_face_scan(65, eng, 17), DomainError);
}

TEST_CASE("normalized entropy scan over the unfilled face") {
  RootEngine eng;
  MagicEntScan scan = ent_face_magic(3, eng, 40);
  REQUIRE(scan.min_index < scan.points.size());
  const MagicEntPoint& m = scan.points[scan.min_index];
  CHECK(m.c == FiberedClass{1, 1, 0});
  CHECK(m.minimum);
  check_contains(m.ent, "2.633915793849633417250092694615936888053963942935");
  for (size_t i = 0; i < scan.points.size(); ++i) {
    if (i == scan.min_index) continue;
    CHECK(!scan.points[i].minimum);
    CHECK(dyadic_to_mpq(scan.points[i].ent.lo, scan.points[i].ent.level) >
          dyadic_to_mpq(m.ent.hi, m.ent.level));
  }
  for (const auto& p : scan.points) {
    CHECK(in_cone(p.c));
    CHECK(is_primitive(p.c));
    CHECK(p.c.x <= 3);
    CHECK(p.c.y <= 3);
  }
  CHECK_THROWS_AS(ent_face_magic(13, eng, 17), DomainError);
}

TEST_CASE("inverse entropy is concave on sampled triples") {
  RootEngine eng;
  ConcavityResult r = concavity_check({0, 1}, {1, 2}, {1, 2}, eng);
  CHECK(r.holds);
  CHECK(r.k == 4);
  CHECK(r.l == 1);
  CHECK(r.level_used > 0);

  r = concavity_check({-1, 2}, {1, 2}, {1, 2}, eng);
  CHECK(r.holds);
  CHECK(r.k == 1);
  CHECK(r.l == 0);

  r = concavity_check({1, 3}, {2, 3}, {1, 3}, eng);
  CHECK(r.holds);
  CHECK(r.k == 9);
  CHECK(r.l == 5);

  CHECK_THROWS_AS(concavity_check({1, 2}, {1, 2}, {1, 2}, eng), DomainError);
  CHECK_THROWS_AS(concavity_check({0, 1}, {1, 2}, {0, 1}, eng), DomainError);
  CHECK_THROWS_AS(concavity_check({0, 1}, {1, 2}, {1, 1}, eng), DomainError);
  CHECK_THROWS_AS(concavity_check({3, 2}, {1, 2}, {1, 2}, eng), DomainError);
  CHECK_THROWS_AS(concavity_check({1, 0}, {1, 2}, {1, 2}, eng), DomainError);
}

TEST_CASE("recorded equality claims verify") {
  RootEngine eng;
  VerifyReport rep = verify_claims("equalities", 50, eng, 40);
  CHECK(rep.suite == "equalities");
  REQUIRE(rep.claims.size() == 2);
  CHECK(rep.passed == 2);
  CHECK(rep.failed == 0);
  CHECK(rep.flagged == 0);
  CHECK(rep.claims[0].id == "eq-3-1-vs-4-3");
  CHECK(rep.claims[1].id == "eq-6-1-vs-7-4");
  for (const auto& c : rep.claims) CHECK(c.status == ClaimStatus::Pass);
}

TEST_CASE("recorded inequality claims verify with one internal contradiction") {
  RootEngine eng;
  VerifyReport rep = verify_claims("inequalities", 50, eng, 40);
  REQUIRE(rep.claims.size() == 7);
  CHECK(rep.failed == 0);
  CHECK(rep.flagged == 1);
  CHECK(rep.passed == 6);
  int flags = 0;
  for (const auto& c : rep.claims)
    if (c.status == ClaimStatus::Flag) {
      ++flags;
      CHECK(c.id == "cmp-9-7-vs-8-1");
      CHECK(!c.detail.empty());
    }
  CHECK(flags == 1);
}

TEST_CASE("worked-example suite verifies") {
  RootEngine eng;
  VerifyReport rep = verify_claims("smallgenus", 50, eng, 40);
  CHECK(rep.failed == 0);
  CHECK(rep.flagged == 0);
  CHECK(rep.passed == static_cast<int>(rep.claims.size()));
  CHECK(rep.claims.size() >= 10);
}

TEST_CASE("monotonicity suite verifies") {
  RootEngine eng;
  VerifyReport rep = verify_claims("monotone", 8, eng, 17);
  CHECK(rep.failed == 0);
  CHECK(rep.flagged == 0);
  bool saw_grid = false;
  for (const auto& c : rep.claims) saw_grid |= c.id == "monotone-grid";
  CHECK(saw_grid);
}

TEST_CASE("asymptotic suite verifies") {
  RootEngine eng;
  VerifyReport rep = verify_claims("asymptotic", 50, eng, 40);
  CHECK(rep.failed == 0);
  REQUIRE(rep.claims.size() == 6);
  CHECK(rep.claims[5].id == "asymp-limit-gap");
  CHECK(rep.passed == 6);
}

TEST_CASE("congruence suite verifies on a midsize range") {
  RootEngine eng;
  VerifyReport rep = verify_claims("congruences", 20, eng, 17);
  CHECK(rep.failed == 0);
  CHECK(rep.flagged == 0);
  CHECK(rep.claims.size() > 30);
}

TEST_CASE("suite dispatch validation") {
  RootEngine eng;
  CHECK_THROWS_AS(verify_claims("nonsense", 50, eng, 17), DomainError);
  CHECK_THROWS_AS(verify_claims("congruences", 2, eng, 17), DomainError);
  CHECK_THROWS_AS(verify_claims("congruences", 201, eng, 17), DomainError);
  CHECK(std::string(claim_status_name(ClaimStatus::Pass)) == "PASS");
  CHECK(std::string(claim_status_name(ClaimStatus::Fail)) == "FAIL");
  CHECK(std::string(claim_status_name(ClaimStatus::Flag)) == "FLAG");
}
