#include "magicfiber/polyroot.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

#include "magicfiber/cachefile.hpp"

namespace magicfiber {

IntPoly teichmuller_poly(long long x, long long y, long long z) {
  if (x <= 0) throw DomainError("x > 0 violated");
  if (y <= 0) throw DomainError("y > 0 violated");
  if (x <= z) throw DomainError("x > z violated");
  if (y <= z) throw DomainError("y > z violated");
  IntPoly p;
  p.add_term(static_cast<long>(x + y - z), 1);
  p.add_term(static_cast<long>(x), -1);
  p.add_term(static_cast<long>(y), -1);
  p.add_term(static_cast<long>(x - z), -1);
  p.add_term(static_cast<long>(y - z), -1);
  p.add_term(0, 1);
  return p;
}

IntPoly pair_poly(long long k, long long l) {
  if (k < 1 || l <= -k || l >= k)
    throw DomainError("pair parameters out of range: require k >= 1, -k < l < k");
  IntPoly p;
  p.add_term(static_cast<long>(2 * k), 1);
  p.add_term(static_cast<long>(k + l), -1);
  p.add_term(static_cast<long>(k), -1);
  p.add_term(static_cast<long>(k - l), -1);
  p.add_term(0, 1);
  return p;
}

FactorCheck factor_check(long long k, long long l) {
  if (k < 1 || l < 0 || l >= k)
    throw DomainError("factor check requires 0 <= l < k");
  IntPoly base = pair_poly(k, l);
  IntPoly plus = IntPoly::monomial(static_cast<long>(k + l), 1) +
                 IntPoly::constant(1);
  IntPoly minus = IntPoly::monomial(static_cast<long>(k - l), 1) +
                  IntPoly::constant(1);
  IntPoly cyc = IntPoly::monomial(static_cast<long>(k), 1) +
                IntPoly::constant(1);
  struct Row {
    std::string label;
    IntPoly lhs;
    IntPoly rhs;
  };
  std::vector<Row> rows = {
      {"(2k+l,2k+2l,k+2l) = (t^(k+l)+1)*pair",
       teichmuller_poly(2 * k + l, 2 * k + 2 * l, k + 2 * l), plus * base},
      {"(2k-l,2k-2l,k-2l) = (t^(k-l)+1)*pair",
       teichmuller_poly(2 * k - l, 2 * k - 2 * l, k - 2 * l), minus * base},
      {"(k,2k+2l,l) = (t^(k+l)+1)*pair",
       teichmuller_poly(k, 2 * k + 2 * l, l), plus * base},
      {"(k,2k-2l,-l) = (t^(k-l)+1)*pair",
       teichmuller_poly(k, 2 * k - 2 * l, -l), minus * base},
      {"(k+l,k-l,-k) = (t^k+1)*pair", teichmuller_poly(k + l, k - l, -k),
       cyc * base},
      {"(k-l,k+l,-k) = (t^k+1)*pair", teichmuller_poly(k - l, k + l, -k),
       cyc * base},
  };
  FactorCheck out;
  out.all_match = true;
  for (auto& r : rows) {
    FactorIdentity id;
    id.label = r.label;
    id.matches = (r.lhs == r.rhs);
    id.lhs = r.lhs.to_string();
    id.rhs = r.rhs.to_string();
    out.all_match = out.all_match && id.matches;
    out.identities.push_back(std::move(id));
  }
  return out;
}

long parse_width_level(const std::string& s) {
  if (s.rfind("2^-", 0) == 0) {
    try {
      long level = std::stol(s.substr(3));
      if (level < 1 || level > 8192)
        throw DomainError("width level out of range (1..8192)");
      return level;
    } catch (const DomainError&) {
      throw;
    } catch (...) {
      throw DomainError("unparseable width: " + s);
    }
  }
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || !(v > 0) || v > 0.5)
    throw DomainError("unparseable width (use e.g. 2^-40 or 1e-9): " + s);
  int exp = 0;
  std::frexp(v, &exp);
  long level = 1 - exp;
  if (level < 1) level = 1;
  if (level > 8192) throw DomainError("width level out of range (1..8192)");
  return level;
}

namespace {

constexpr long kIsoSoftDepth = 64;    // try squarefree part past this
constexpr long kIsoHardDepth = 256;
constexpr long kPrecisionCap = 8192;  // fractional bits

// Cells address s = t - 1: cell (j, level) is [j/2^level, (j+1)/2^level] in
// s, i.e. [1 + j/2^level, 1 + (j+1)/2^level] in t. Negative level = wide.
void cell_endpoint(const mpz_class& j, long level, bool hi, mpz_class* num,
                   long* lvl) {
  mpz_class jj = hi ? mpz_class(j + 1) : j;
  if (level >= 0) {
    *num = pow2(level) + jj;
    *lvl = level;
  } else {
    *num = 1 + (jj << static_cast<unsigned long>(-level));
    *lvl = 0;
  }
}

long count_poly_cell(const IntPoly& p, const mpz_class& j, long level) {
  mpz_class a, b;
  long la, lb;
  cell_endpoint(j, level, false, &a, &la);
  cell_endpoint(j, level, true, &b, &lb);
  return interval_variation_count(p, a, la, b, lb);
}

int sign_at_cell_lo(const IntPoly& p, const mpz_class& j, long level) {
  mpz_class a;
  long la;
  cell_endpoint(j, level, false, &a, &la);
  return p.sign_at_dyadic(a, la);
}

// Exponent e with all real roots of p below 1 + 2^e (Cauchy bound).
long top_exponent(const IntPoly& p) {
  mpz_class mx = 0;
  for (const auto& [e, c] : p.terms()) {
    (void)e;
    mpz_class a = abs(c);
    if (a > mx) mx = a;
  }
  mpz_class lead = abs(p.leading());
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), mx.get_mpz_t(), lead.get_mpz_t());
  if (q <= 1) return 0;
  return static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
}

}  // namespace

RootEngine::RootEngine(std::optional<std::string> cache_path)
    : cache_path_(std::move(cache_path)) {
  if (cache_path_) {
    cached_cells_ = load_root_cache(*cache_path_, &cache_warning_);
  }
}

long RootEngine::cell_count(const Work& w, const mpz_class& j,
                            long level) const {
  return count_poly_cell(w.p, j, level);
}

RootInterval RootEngine::cell_to_bracket(const Work& w, const mpz_class& j,
                                         long level) const {
  (void)w;
  RootInterval r;
  mpz_class a, b;
  long la, lb;
  cell_endpoint(j, level, false, &a, &la);
  cell_endpoint(j, level, true, &b, &lb);
  // Wide cells report at level 0; fine ones at their own level.
  assert(la == lb);
  r.lo_num = a;
  r.hi_num = b;
  r.level = la;
  r.sign_change = true;
  r.unique_above_lo = true;
  return r;
}

bool RootEngine::prove_rootless(const Work& w, const mpz_class& j, long level,
                                long depth_cap) {
  long v = cell_count(w, j, level);
  if (v == 0) return true;
  if (v == 1) return false;
  if (level >= depth_cap)
    throw EscalationError(
        "right-clearance undecidable within the precision cap");
  return prove_rootless(w, 2 * j + 1, level + 1, depth_cap) &&
         prove_rootless(w, 2 * j, level + 1, depth_cap);
}

bool RootEngine::clear_right_of(const Work& w, const mpz_class& j,
                                long level) {
  // Region strictly right of cell (j, level), up to the root bound 1 + 2^top.
  mpz_class cells_at_level = pow2(level + w.top);  // level >= -top always
  if (j + 1 == cells_at_level) return true;
  mpz_class a, b;
  long la, lb;
  cell_endpoint(j, level, true, &a, &la);
  cell_endpoint(mpz_class(0), -w.top, true, &b, &lb);
  if (interval_variation_count(w.p, a, la, b, lb) == 0) return true;
  // Variation merging can inflate the single-shot count; fall back to the
  // exact sibling decomposition of the right region.
  mpz_class jc = j;
  long lc = level;
  while (lc > -w.top) {
    if (mpz_even_p(jc.get_mpz_t())) {
      if (!prove_rootless(w, jc + 1, lc, lc + 96)) return false;
    }
    jc >>= 1;
    --lc;
  }
  return true;
}

void RootEngine::isolate_cold(Work* w) {
  for (int attempt = 0;; ++attempt) {
    long depth_cap = w->squarefree_used ? kIsoHardDepth : kIsoSoftDepth;
    std::vector<std::pair<mpz_class, long>> stack;
    stack.emplace_back(0, -w->top);
    bool too_deep = false;
    while (!stack.empty()) {
      auto [j, level] = stack.back();
      stack.pop_back();
      if (level > depth_cap) {
        too_deep = true;
        continue;
      }
      long v = cell_count(*w, j, level);
      if (v == 0) continue;
      if (v == 1) {
        w->isolated = true;
        w->iso_j = j;
        w->iso_level = level;
        w->cur_j = j;
        w->cur_level = level;
        w->sign_lo = sign_at_cell_lo(w->p, j, level);
        w->sign_hi = sign_at_cell_lo(w->p, j + 1, level);
        if (w->sign_lo == 0 || w->sign_hi == 0)
          throw DomainError("real root at a dyadic point; bracket undefined");
        if (w->sign_lo == w->sign_hi)
          throw std::logic_error("isolated cell without a sign change");
        if (!clear_right_of(*w, j, level))
          throw std::logic_error("isolation missed a root on the right");
        return;
      }
      stack.emplace_back(2 * j, level + 1);
      stack.emplace_back(2 * j + 1, level + 1);  // processed first
    }
    if (too_deep && !w->squarefree_used) {
      w->p = squarefree_part(w->p);
      w->squarefree_used = true;
      continue;
    }
    if (too_deep)
      throw EscalationError("root isolation exceeded the depth cap");
    throw DomainError("polynomial has no real root greater than 1");
  }
}

bool RootEngine::adopt_cached_cell(Work* w, const mpz_class& j, long level) {
  if (level < -w->top || level > kPrecisionCap || j < 0) return false;
  mpz_class cells_at_level = pow2(level + w->top);
  if (j >= cells_at_level) return false;
  int slo = sign_at_cell_lo(w->p, j, level);
  int shi = sign_at_cell_lo(w->p, j + 1, level);
  if (slo == 0 || shi == 0 || slo == shi) return false;
  // Walk the ancestor chain top-down; the first isolating cell is the same
  // one a cold traversal stops at.
  bool found = false;
  for (long lv = -w->top; lv <= level; ++lv) {
    mpz_class anc = j >> static_cast<unsigned long>(level - lv);
    long v = cell_count(*w, anc, lv);
    if (v == 0) return false;  // cell claims a root where none lives
    if (v == 1) {
      w->iso_j = anc;
      w->iso_level = lv;
      found = true;
      break;
    }
  }
  if (!found) return false;
  if (!clear_right_of(*w, w->iso_j, w->iso_level)) return false;
  w->isolated = true;
  w->cur_j = j;
  w->cur_level = level;
  w->sign_lo = slo;
  w->sign_hi = shi;
  return true;
}

RootEngine::Work& RootEngine::ensure_isolated(const IntPoly& p) {
  std::string key = p.canonical_key();
  auto it = works_.find(key);
  if (it != works_.end()) return it->second;

  Work w;
  w.p = p;
  if (w.p.is_zero() || w.p.degree() < 1)
    throw DomainError("polynomial has no real root greater than 1");
  while (w.p.eval_int(1) == 0) {
    IntPoly lin;
    lin.add_term(1, 1);
    lin.add_term(0, -1);
    w.p = exact_divide(w.p, lin);
    ++w.linear_factors_removed;
    if (w.p.degree() < 1)
      throw DomainError("polynomial has no real root greater than 1");
  }
  w.top = top_exponent(w.p);

  bool adopted = false;
  auto cached = cached_cells_.find(key);
  if (cached != cached_cells_.end()) {
    try {
      mpz_class j(cached->second.first, 10);
      adopted = adopt_cached_cell(&w, j, cached->second.second);
    } catch (const std::invalid_argument&) {
      adopted = false;
    }
    if (!adopted) cached_cells_.erase(cached);
  }
  if (!adopted) isolate_cold(&w);
  return works_.emplace(key, std::move(w)).first->second;
}

void RootEngine::refine_to(Work* w, long target_level) {
  while (w->cur_level < target_level) {
    if (w->cur_level >= kPrecisionCap)
      throw EscalationError("bracket refinement exceeded the precision cap");
    mpz_class mid_j = 2 * w->cur_j + 1;
    int s = sign_at_cell_lo(w->p, mid_j, w->cur_level + 1);
    if (s == 0)
      throw DomainError("real root at a dyadic point; bracket undefined");
    if (s == w->sign_lo)
      w->cur_j = mid_j;  // root in the right half
    else
      w->cur_j = 2 * w->cur_j;
    ++w->cur_level;
  }
}

RootInterval RootEngine::largest_real_root(const IntPoly& p, long level) {
  if (level < 1) level = 1;
  if (level > kPrecisionCap)
    throw DomainError("requested width finer than the precision cap");
  Work& w = ensure_isolated(p);
  long out = std::max(level, std::max(w.iso_level, 1L));
  while (true) {
    refine_to(&w, out);
    mpz_class j_out = w.cur_j >> static_cast<unsigned long>(w.cur_level - out);
    if (j_out > 0) {
      dirty_ = true;
      return cell_to_bracket(w, j_out, out);
    }
    out += 8;  // keep the lower endpoint strictly above 1
    if (out > kPrecisionCap)
      throw EscalationError("root too close to 1 for the precision cap");
  }
}

CompareCert RootEngine::compare(const IntPoly& p, const IntPoly& q) {
  CompareCert cert;
  if (p.canonical_key() == q.canonical_key()) {
    RootInterval r = largest_real_root(p, 64);
    cert.result = Cmp::Equal;
    cert.p_bracket = r;
    cert.q_bracket = r;
    cert.level_used = 64;
    cert.same_polynomial = true;
    cert.gcd_degree = p.degree();
    return cert;
  }
  Work& wp = ensure_isolated(p);
  Work& wq = ensure_isolated(q);
  bool gcd_tried = false;
  IntPoly g;
  for (long level = 16; level <= kPrecisionCap; level *= 2) {
    refine_to(&wp, std::max(level, wp.iso_level));
    refine_to(&wq, std::max(level, wq.iso_level));
    RootInterval rp = cell_to_bracket(wp, wp.cur_j, wp.cur_level);
    RootInterval rq = cell_to_bracket(wq, wq.cur_j, wq.cur_level);
    cert.p_bracket = rp;
    cert.q_bracket = rq;
    cert.level_used = level;
    if (cmp_dyadic(rp.hi_num, rp.level, rq.lo_num, rq.level) <= 0) {
      cert.result = Cmp::Less;  // roots are irrational, so touching is strict
      dirty_ = true;
      return cert;
    }
    if (cmp_dyadic(rq.hi_num, rq.level, rp.lo_num, rp.level) <= 0) {
      cert.result = Cmp::Greater;
      dirty_ = true;
      return cert;
    }
    if (level >= 128 && !gcd_tried) {
      gcd_tried = true;
      g = poly_gcd_primitive(p, q);
      cert.gcd_degree = g.degree();
    }
    if (gcd_tried && g.degree() >= 1) {
      // Stabilize the gcd's variation count on both cells. A count of 1 in
      // p's cell certifies that p's largest root is a root of the gcd; if
      // that holds on both sides the two largest roots coincide: every gcd
      // root is a root of both p and q, so the gcd's largest real root is
      // squeezed between the two.
      long vp, vq;
      while ((vp = count_poly_cell(g, wp.cur_j, wp.cur_level)) > 1)
        refine_to(&wp, wp.cur_level + 16);
      while ((vq = count_poly_cell(g, wq.cur_j, wq.cur_level)) > 1)
        refine_to(&wq, wq.cur_level + 16);
      if (vp == 1 && vq == 1) {
        cert.result = Cmp::Equal;
        cert.via_gcd = true;
        cert.p_bracket = cell_to_bracket(wp, wp.cur_j, wp.cur_level);
        cert.q_bracket = cell_to_bracket(wq, wq.cur_j, wq.cur_level);
        dirty_ = true;
        return cert;
      }
      // One side definitely misses the gcd: the roots differ; keep refining.
      g = IntPoly();
    }
  }
  throw EscalationError("comparison undecidable within the precision cap");
}

DyadicInterval RootEngine::ln_largest_root(const IntPoly& p, long out_level) {
  RootInterval r = largest_real_root(p, out_level + 2);
  return interval_ln(r.to_interval(), out_level);
}

DyadicInterval RootEngine::ent_interval(long long k, long long l,
                                        long out_level) {
  long long m = 2 * k;
  long extra = 1;
  while ((1LL << extra) < m) ++extra;
  DyadicInterval ln = ln_largest_root(pair_poly(k, l < 0 ? -l : l),
                                      out_level + extra + 3);
  return interval_scale(ln, static_cast<long>(m));
}

void RootEngine::save_cache() {
  if (!cache_path_ || !dirty_) return;
  for (const auto& [key, w] : works_) {
    if (!w.isolated) continue;
    auto it = cached_cells_.find(key);
    std::string cell = w.cur_j.get_str();
    if (it == cached_cells_.end() || it->second.second < w.cur_level)
      cached_cells_[key] = {cell, w.cur_level};
  }
  std::string warn;
  if (save_root_cache(*cache_path_, cached_cells_, &warn)) dirty_ = false;
}

}  // namespace magicfiber
