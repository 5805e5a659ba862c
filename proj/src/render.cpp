#include "magicfiber/render.hpp"

#include <sstream>

namespace magicfiber {

ordered_json interval_json(const RootInterval& r) {
  int digits = digits_for_level(r.level);
  ordered_json j;
  j["decimal_lo"] = decimal_floor(r.lo_num, r.level, digits);
  j["decimal_hi"] = decimal_ceil(r.hi_num, r.level, digits);
  j["mantissa_lo"] = r.lo_num.get_str();
  j["mantissa_hi"] = r.hi_num.get_str();
  j["level"] = r.level;
  j["sign_change"] = r.sign_change;
  j["unique_above_lo"] = r.unique_above_lo;
  return j;
}

ordered_json ent_interval_json(const DyadicInterval& d) {
  int digits = digits_for_level(d.level);
  ordered_json j;
  j["decimal_lo"] = decimal_floor(d.lo, d.level, digits);
  j["decimal_hi"] = decimal_ceil(d.hi, d.level, digits);
  j["mantissa_lo"] = d.lo.get_str();
  j["mantissa_hi"] = d.hi.get_str();
  j["level"] = d.level;
  return j;
}

namespace {

ordered_json class_json(const FiberedClass& c) {
  return ordered_json{{"x", c.x}, {"y", c.y}, {"z", c.z}};
}

ordered_json singularity_json(const SingularityData& sd) {
  ordered_json entries = ordered_json::array();
  for (const SingularityEntry& e : sd.entries) {
    entries.push_back(ordered_json{{"torus", torus_name(e.torus)},
                                   {"prongs", e.prongs},
                                   {"count", e.count},
                                   {"regular", e.regular}});
  }
  ordered_json j;
  j["entries"] = entries;
  j["data"] = sd.data_string();
  j["singular"] = sd.singular_string();
  j["prong_sum"] = sd.prong_sum();
  j["index_sum"] = sd.index_sum();
  return j;
}

ordered_json fiber_json(const FiberType& ft) {
  ordered_json j;
  j["genus"] = ft.genus;
  j["b_alpha"] = ft.b_alpha;
  j["b_beta"] = ft.b_beta;
  j["b_gamma"] = ft.b_gamma;
  j["boundary_components"] = ft.boundary_total();
  return j;
}

ordered_json slopes_json(const std::array<Slope, 3>& sl) {
  ordered_json j;
  j["alpha"] = sl[0].to_string();
  j["beta"] = sl[1].to_string();
  j["gamma"] = sl[2].to_string();
  return j;
}

ordered_json argmin_json(const std::vector<FamilyClass>& v) {
  ordered_json arr = ordered_json::array();
  for (const FamilyClass& fc : v)
    arr.push_back(ordered_json{
        {"family", family_name(fc.family)}, {"k", fc.k}, {"l", fc.l}});
  return arr;
}

std::string interval_lo_text(const RootInterval& r) {
  return decimal_floor(r.lo_num, r.level, digits_for_level(r.level));
}
std::string interval_hi_text(const RootInterval& r) {
  return decimal_ceil(r.hi_num, r.level, digits_for_level(r.level));
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

ordered_json class_report(const FiberedClass& c, RootEngine& eng, long level,
                          const std::string& command) {
  require_cone(c);
  require_primitive(c);
  ordered_json j;
  j["command"] = command;
  j["class"] = class_json(c);
  j["primitive"] = true;
  j["thurston_norm"] = thurston_norm(c);
  FiberType ft = fiber_type(c);
  j["fiber"] = fiber_json(ft);
  j["slopes"] = slopes_json(boundary_slopes(c));
  j["singularities"] = singularity_json(singularity_data(c));
  j["orientable"] = orientable(c);
  j["orientability_identity_agrees"] =
      orientability_identity_check(c) == orientable(c);
  IntPoly p = teichmuller_poly(c.x, c.y, c.z);
  j["polynomial"] = p.to_string();
  j["dilatation"] = interval_json(eng.largest_real_root(p, level));
  j["rules"] = ordered_json{
      {"thurston_norm", "interior cone norm x + y - z"},
      {"fiber", "genus from 2 - 2g - b = -(x + y - z)"},
      {"boundary", "per-torus counts gcd(x,y+z), gcd(y,z+x), gcd(z,x+y)"},
      {"slopes", "boundary slopes (-(y+z)/x, -(z+x)/y, -(x+y)/z)"},
      {"singularities",
       "prong counts x/b_alpha, y/b_beta, (x+y-2z)/b_gamma; no interior "
       "singularities"},
      {"orientable", "parity rule: x, y even and z odd"},
      {"dilatation",
       "largest real root of the specialized face polynomial, certified by "
       "sign change and root count"}};
  return j;
}

ordered_json family_report(const FamilyClass& fc, RootEngine& eng, long level,
                           const std::string& command) {
  require_family(fc);
  ordered_json j;
  j["command"] = command;
  j["family"] = family_name(fc.family);
  j["k"] = fc.k;
  j["l"] = fc.l;
  j["filled_slope"] = filled_slope(fc.family).to_string();
  j["filled_cusp"] = torus_name(filled_torus(fc.family));
  j["fibered_class"] = class_json(to_fibered_class(fc));
  j["slope_triple"] = slopes_json(slope_triple(fc));
  j["closed_genus"] = closed_genus(fc);
  j["fiber_before_capping"] = fiber_json(one_cusp_filled_fiber(fc));
  j["has_one_prong"] = has_one_prong(fc);
  j["capped_orientable"] = capped_orientable(fc);
  j["capped_singularities"] = singularity_json(capped_singularity_data(fc));
  HyperbolicityVerdict v = hyperbolicity(fc);
  j["hyperbolicity"] = ordered_json{{"status", hyp_status_name(v.status)},
                                    {"witness", v.witness}};
  long long al = fc.l < 0 ? -fc.l : fc.l;
  IntPoly p = pair_poly(fc.k, al);
  j["polynomial"] = p.to_string();
  j["dilatation"] = interval_json(eng.largest_real_root(p, level));
  j["rules"] = ordered_json{
      {"fibered_class", "pullback of k*a + l*b along the filling"},
      {"closed_genus", "residue rule on (k, l) for the filled face"},
      {"capped_singularities",
       "boundary orbits cap to interior orbits with unchanged prong counts"},
      {"hyperbolicity",
       "excluded parameter list with exceptional slope witnesses"},
      {"dilatation",
       "largest real root of the two-parameter polynomial, certified by sign "
       "change and root count"}};
  return j;
}

namespace {

ordered_json min_row_json(const MinTableRow& row) {
  ordered_json j;
  j["g"] = row.g;
  j["fill"] = fill_name(row.fill);
  j["orientable_only"] = row.orientable_only;
  j["empty"] = row.empty;
  j["argmins"] = argmin_json(row.argmins);
  j["lambda"] = row.lambda ? interval_json(*row.lambda) : ordered_json();
  j["candidates_examined"] = row.candidates_examined;
  j["beyond_rule_table"] = row.beyond_rule_table;
  return j;
}

}  // namespace

ordered_json min_table_json(const std::vector<MinTableRow>& rows,
                            const std::string& command) {
  ordered_json j;
  j["command"] = command;
  ordered_json arr = ordered_json::array();
  for (const MinTableRow& row : rows) arr.push_back(min_row_json(row));
  j["rows"] = arr;
  return j;
}

std::string min_table_csv(const std::vector<MinTableRow>& rows) {
  std::string out = csv_line({"g", "fill", "family", "k", "l", "lambda_lo",
                              "lambda_hi", "orientable",
                              "candidates_examined"});
  for (const MinTableRow& row : rows) {
    std::vector<std::string> fams, ks, ls;
    for (const FamilyClass& fc : row.argmins) {
      fams.push_back(family_name(fc.family));
      ks.push_back(std::to_string(fc.k));
      ls.push_back(std::to_string(fc.l));
    }
    out += csv_line({std::to_string(row.g), fill_name(row.fill),
                     join(fams, ";"), join(ks, ";"), join(ls, ";"),
                     row.lambda ? interval_lo_text(*row.lambda) : "",
                     row.lambda ? interval_hi_text(*row.lambda) : "",
                     bool_text(row.orientable_only),
                     std::to_string(row.candidates_examined)});
  }
  return out;
}

ordered_json bounds_json(const std::vector<DeltaBound>& rows,
                         const std::string& command) {
  ordered_json j;
  j["command"] = command;
  ordered_json arr = ordered_json::array();
  for (const DeltaBound& db : rows) {
    ordered_json r;
    r["g"] = db.g;
    r["orientable_only"] = db.orientable_only;
    r["empty"] = db.empty;
    r["lambda"] = db.lambda ? interval_json(*db.lambda) : ordered_json();
    r["sources"] = db.sources;
    r["special_class"] =
        db.special_class ? class_json(*db.special_class) : ordered_json();
    ordered_json fills = ordered_json::array();
    for (const MinTableRow& row : db.rows) fills.push_back(min_row_json(row));
    r["fills"] = fills;
    arr.push_back(r);
  }
  j["rows"] = arr;
  return j;
}

std::string bounds_csv(const std::vector<DeltaBound>& rows) {
  std::string out =
      csv_line({"g", "orientable", "lambda_lo", "lambda_hi", "sources"});
  for (const DeltaBound& db : rows) {
    out += csv_line({std::to_string(db.g), bool_text(db.orientable_only),
                     db.lambda ? interval_lo_text(*db.lambda) : "",
                     db.lambda ? interval_hi_text(*db.lambda) : "",
                     join(db.sources, ";")});
  }
  return out;
}

namespace {

std::string ent_lo_text(const DyadicInterval& d) {
  return decimal_floor(d.lo, d.level, digits_for_level(d.level));
}
std::string ent_hi_text(const DyadicInterval& d) {
  return decimal_ceil(d.hi, d.level, digits_for_level(d.level));
}

}  // namespace

ordered_json ent_face_json(const EntFaceScan& scan,
                           const std::string& fill_label,
                           const std::string& command) {
  ordered_json j;
  j["command"] = command;
  j["fill"] = fill_label;
  ordered_json arr = ordered_json::array();
  for (const EntFacePoint& pt : scan.points) {
    ordered_json p;
    p["k"] = pt.k;
    p["l"] = pt.l;
    p["s"] = std::to_string(pt.l) + "/" + std::to_string(pt.k);
    p["ent"] = ent_interval_json(pt.ent);
    p["minimum"] = pt.minimum;
    arr.push_back(p);
  }
  j["points"] = arr;
  const EntFacePoint& m = scan.points[scan.min_index];
  j["minimum"] = ordered_json{{"k", m.k}, {"l", m.l}};
  return j;
}

std::string ent_face_csv(const EntFaceScan& scan) {
  std::string out = csv_line({"k", "l", "ent_lo", "ent_hi", "minimum"});
  for (const EntFacePoint& pt : scan.points)
    out += csv_line({std::to_string(pt.k), std::to_string(pt.l),
                     ent_lo_text(pt.ent), ent_hi_text(pt.ent),
                     bool_text(pt.minimum)});
  return out;
}

ordered_json magic_ent_json(const MagicEntScan& scan,
                            const std::string& command) {
  ordered_json j;
  j["command"] = command;
  j["fill"] = "magic";
  ordered_json arr = ordered_json::array();
  for (const MagicEntPoint& pt : scan.points) {
    ordered_json p;
    p["class"] = class_json(pt.c);
    p["ent"] = ent_interval_json(pt.ent);
    p["minimum"] = pt.minimum;
    arr.push_back(p);
  }
  j["points"] = arr;
  j["minimum"] = class_json(scan.points[scan.min_index].c);
  return j;
}

std::string magic_ent_csv(const MagicEntScan& scan) {
  std::string out = csv_line({"x", "y", "z", "ent_lo", "ent_hi", "minimum"});
  for (const MagicEntPoint& pt : scan.points)
    out += csv_line({std::to_string(pt.c.x), std::to_string(pt.c.y),
                     std::to_string(pt.c.z), ent_lo_text(pt.ent),
                     ent_hi_text(pt.ent), bool_text(pt.minimum)});
  return out;
}

ordered_json verify_json(const VerifyReport& rep, const std::string& command) {
  ordered_json j;
  j["command"] = command;
  j["suite"] = rep.suite;
  j["counts"] = ordered_json{
      {"passed", rep.passed}, {"failed", rep.failed}, {"flagged", rep.flagged}};
  ordered_json flags = ordered_json::array();
  for (const ClaimResult& c : rep.claims)
    if (c.status == ClaimStatus::Flag) flags.push_back(c.id);
  j["flags"] = flags;
  ordered_json claims = ordered_json::array();
  for (const ClaimResult& c : rep.claims)
    claims.push_back(ordered_json{{"id", c.id},
                                  {"status", claim_status_name(c.status)},
                                  {"detail", c.detail}});
  j["claims"] = claims;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

std::vector<std::vector<std::string>> csv_parse(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      ++i;
      continue;
    }
    if (ch == '"') {
      quoted = true;
      ++i;
    } else if (ch == ',') {
      row.push_back(field);
      field.clear();
      ++i;
    } else if (ch == '\r' || ch == '\n') {
      row.push_back(field);
      field.clear();
      rows.push_back(row);
      row.clear();
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
    } else {
      field += ch;
      ++i;
    }
  }
  if (!field.empty() || !row.empty()) {
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace magicfiber
