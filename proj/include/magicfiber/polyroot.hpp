#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "magicfiber/dyadic.hpp"
#include "magicfiber/polynomial.hpp"

namespace magicfiber {

struct EscalationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The six-variable specialization P(t^x, t^y, t^z) normalized by t^-z, for
// (x, y, z) in the open fibered cone {x > 0, y > 0, x > z, y > z}:
//   t^(x+y-z) - t^x - t^y - t^(x-z) - t^(y-z) + 1  (colliding exponents merge)
IntPoly teichmuller_poly(long long x, long long y, long long z);

// Two-parameter specialization for k > 0, -k < l < k:
//   t^(2k) - t^(k+l) - t^k - t^(k-l) + 1  (l = 0 merges to -3t^k)
IntPoly pair_poly(long long k, long long l);

// Certified bracket for the largest real root: the dyadic grid cell
// [lo/2^level, hi/2^level] anchored at 1, hi = lo + 1 in mantissa, chosen
// deterministically (deepened until lo > 1 and the cell isolates the root).
struct RootInterval {
  mpz_class lo_num;
  mpz_class hi_num;
  long level = 0;
  // Certificate: p changes sign across the cell, and exactly one real root
  // of p lies in (lo, +inf).
  bool sign_change = false;
  bool unique_above_lo = false;
  DyadicInterval to_interval() const { return {lo_num, hi_num, level}; }
};

enum class Cmp { Less, Equal, Greater };

struct CompareCert {
  Cmp result;
  RootInterval p_bracket;
  RootInterval q_bracket;
  long level_used = 0;
  bool via_gcd = false;      // equality certified through a common factor
  long gcd_degree = -1;      // degree of gcd(p, q) when computed
  bool same_polynomial = false;
};

struct FactorIdentity {
  std::string label;      // e.g. "(2k+l,2k+2l,k+2l) = (t^(k+l)+1) * pair"
  bool matches = false;
  std::string lhs;        // rendered polynomials, for reports
  std::string rhs;
};

struct FactorCheck {
  bool all_match = false;
  std::vector<FactorIdentity> identities;
};

// The six product identities tying the one-parameter specializations to the
// two-parameter family, checked by exact expansion (0 <= l < k).
FactorCheck factor_check(long long k, long long l);

// "2^-40" or a positive decimal like "1e-9"; returns the fractional-bit
// level L with 2^-L <= width.
long parse_width_level(const std::string& s);

// Root isolation engine with optional persistent cache and in-memory
// memoization. Results are canonical: for a given polynomial and level the
// emitted cell is the same whether computed fresh or revalidated from cache.
class RootEngine {
 public:
  explicit RootEngine(std::optional<std::string> cache_path = std::nullopt);

  RootInterval largest_real_root(const IntPoly& p, long level);
  CompareCert compare(const IntPoly& p, const IntPoly& q);

  // Certified natural log of the largest real root at out_level fractional
  // bits (the root bracket is refined as needed).
  DyadicInterval ln_largest_root(const IntPoly& p, long out_level);

  // Certified normalized entropy 2k * ln(largest root of pair_poly(k,|l|)).
  DyadicInterval ent_interval(long long k, long long l, long out_level);

  void save_cache();
  bool cache_loaded_ok() const { return cache_warning_.empty(); }
  const std::string& cache_warning() const { return cache_warning_; }

 private:
  struct Work {
    IntPoly p;              // isolated polynomial (after exact reductions)
    bool squarefree_used = false;
    long linear_factors_removed = 0;
    long top = 0;           // cells cover s = t - 1 in [0, 2^top]
    bool isolated = false;
    mpz_class iso_j;
    long iso_level = 0;
    mpz_class cur_j;
    long cur_level = 0;
    int sign_lo = 0, sign_hi = 0;
  };

  Work& ensure_isolated(const IntPoly& p);
  void isolate_cold(Work* w);
  bool adopt_cached_cell(Work* w, const mpz_class& j, long level);
  void refine_to(Work* w, long target_level);
  bool clear_right_of(const Work& w, const mpz_class& j, long level);
  bool prove_rootless(const Work& w, const mpz_class& j, long level,
                      long depth_cap);
  long cell_count(const Work& w, const mpz_class& j, long level) const;
  RootInterval cell_to_bracket(const Work& w, const mpz_class& j,
                               long level) const;

  std::map<std::string, Work> works_;
  std::map<std::string, std::pair<std::string, long>> cached_cells_;
  std::optional<std::string> cache_path_;
  std::string cache_warning_;
  bool dirty_ = false;
};

}  // namespace magicfiber
