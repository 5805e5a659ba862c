#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "magicfiber/render.hpp"

namespace {

std::string joined_command(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

void require_json(const std::string& format) {
  if (format != "json")
    throw magicfiber::DomainError(
        "csv output is only available for min-table, bounds, and ent-face");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace magicfiber;

  CLI::App app{
      "Certified fibered-face calculator for the magic three-chain-link "
      "exterior and its -3/2, -1/2, and 2 fillings"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string width = "2^-40";
  std::string cache_path;
  bool no_cache = false;
  app.add_option("--format", format, "output format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--width", width,
                 "bracket width: 2^-N or a decimal in (0, 0.5] "
                 "(default 2^-40)");
  app.add_option("--cache", cache_path,
                 "root cache file (default magicfiber-cache.json, or the "
                 "MAGICFIBER_CACHE environment variable)");
  app.add_flag("--no-cache", no_cache, "disable the persistent root cache");

  long long cx = 0, cy = 0, cz = 0;
  CLI::App* cmd_class = app.add_subcommand(
      "class", "analyze a fibered class x*alpha + y*beta + z*gamma");
  cmd_class->add_option("x", cx, "alpha coefficient")->required();
  cmd_class->add_option("y", cy, "beta coefficient")->required();
  cmd_class->add_option("z", cz, "gamma coefficient")->required();

  std::string fam_name;
  long long fk = 0, fl = 0;
  CLI::App* cmd_family = app.add_subcommand(
      "family", "analyze a filled-face class k*a + l*b (families A, P, R)");
  cmd_family->add_option("family", fam_name, "family: A, P, or R")->required();
  cmd_family->add_option("k", fk, "parameter k >= 1")->required();
  cmd_family->add_option("l", fl, "parameter l, -k < l < k")->required();

  std::string table_fill = "-3/2";
  long long genus_from = 0, genus_to = -1;
  bool orientable_only = false;
  CLI::App* cmd_min_table = app.add_subcommand(
      "min-table", "certified minimum dilatations per genus on one filling");
  cmd_min_table->add_option("--fill", table_fill, "filling: -3/2, -1/2, or 2")
      ->required();
  cmd_min_table->add_option("--genus-from", genus_from, "first genus (>= 2)")
      ->required();
  cmd_min_table->add_option("--genus-to", genus_to,
                            "last genus (default: genus-from)");
  cmd_min_table->add_flag("--orientable", orientable_only,
                          "restrict to orientable invariant foliations");

  long long bounds_from = 0, bounds_to = -1;
  bool bounds_ori = false;
  CLI::App* cmd_bounds = app.add_subcommand(
      "bounds", "best dilatation upper bound per genus over all fillings");
  cmd_bounds->add_option("--genus-from", bounds_from, "first genus (>= 2)")
      ->required();
  cmd_bounds->add_option("--genus-to", bounds_to,
                         "last genus (default: genus-from)");
  cmd_bounds->add_flag("--orientable", bounds_ori,
                       "restrict to orientable invariant foliations");

  std::string face_fill = "-3/2";
  long long max_denom = 12, max_coord = 3;
  CLI::App* cmd_ent = app.add_subcommand(
      "ent-face", "normalized entropy across a fibered face");
  cmd_ent->add_option("--fill", face_fill,
                      "-3/2, -1/2, 2 (filled face) or magic (unfilled face)");
  cmd_ent->add_option("--max-denominator", max_denom,
                      "densest face parameter l/k to scan (default 12)");
  cmd_ent->add_option("--max-coordinate", max_coord,
                      "coordinate bound for --fill=magic (default 3)");

  std::string suite;
  long long verify_genus_to = 50;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "check recorded claims against certified computation");
  cmd_verify
      ->add_option("--suite", suite,
                   "inequalities, equalities, congruences, smallgenus, "
                   "monotone, or asymptotic")
      ->required();
  cmd_verify->add_option("--genus-to", verify_genus_to,
                         "genus range bound for congruences/monotone "
                         "(default 50)");

  // let trailing global options (--format, --width, --cache, ...) work after
  // a subcommand as well as before it
  for (CLI::App* sc : {cmd_class, cmd_family, cmd_min_table, cmd_bounds,
                       cmd_ent, cmd_verify})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    long level = parse_width_level(width);
    std::optional<std::string> cache;
    if (!no_cache) {
      if (!cache_path.empty())
        cache = cache_path;
      else if (const char* env = std::getenv("MAGICFIBER_CACHE"))
        cache = std::string(env);
      else
        cache = std::string("magicfiber-cache.json");
    }
    RootEngine eng(cache);
    if (!eng.cache_loaded_ok())
      std::cerr << "warning: " << eng.cache_warning() << "\n";
    const std::string command = joined_command(argc, argv);

    int exit_code = 0;
    if (app.got_subcommand(cmd_class)) {
      require_json(format);
      std::cout << class_report(FiberedClass{cx, cy, cz}, eng, level, command)
                       .dump(2)
                << "\n";
    } else if (app.got_subcommand(cmd_family)) {
      require_json(format);
      std::optional<Family> fam = family_from_string(fam_name);
      if (!fam) throw DomainError("unknown family (expected A, P, or R)");
      std::cout << family_report(FamilyClass{*fam, fk, fl}, eng, level,
                                 command)
                       .dump(2)
                << "\n";
    } else if (app.got_subcommand(cmd_min_table)) {
      std::optional<Fill> fill = fill_from_string(table_fill);
      if (!fill) throw DomainError("unknown filling (expected -3/2, -1/2, 2)");
      if (genus_to < 0) genus_to = genus_from;
      if (genus_to < genus_from)
        throw DomainError("genus-to must be at least genus-from");
      if (genus_to > 200) throw DomainError("genus-to capped at 200");
      std::vector<MinTableRow> rows;
      for (long long g = genus_from; g <= genus_to; ++g)
        rows.push_back(min_lambda(*fill, g, orientable_only, eng, level));
      if (format == "csv")
        std::cout << min_table_csv(rows);
      else
        std::cout << min_table_json(rows, command).dump(2) << "\n";
    } else if (app.got_subcommand(cmd_bounds)) {
      if (bounds_to < 0) bounds_to = bounds_from;
      if (bounds_to < bounds_from)
        throw DomainError("genus-to must be at least genus-from");
      if (bounds_to > 200) throw DomainError("genus-to capped at 200");
      std::vector<DeltaBound> rows;
      for (long long g = bounds_from; g <= bounds_to; ++g)
        rows.push_back(delta_upper_bound(g, bounds_ori, eng, level));
      if (format == "csv")
        std::cout << bounds_csv(rows);
      else
        std::cout << bounds_json(rows, command).dump(2) << "\n";
    } else if (app.got_subcommand(cmd_ent)) {
      if (face_fill == "magic") {
        MagicEntScan scan = ent_face_magic(max_coord, eng, level);
        if (format == "csv")
          std::cout << magic_ent_csv(scan);
        else
          std::cout << magic_ent_json(scan, command).dump(2) << "\n";
      } else {
        if (!fill_from_string(face_fill))
          throw DomainError(
              "unknown filling (expected -3/2, -1/2, 2, or magic)");
        EntFaceScan scan = ent_face_scan(max_denom, eng, level);
        if (format == "csv")
          std::cout << ent_face_csv(scan);
        else
          std::cout << ent_face_json(scan, face_fill, command).dump(2) << "\n";
      }
    } else if (app.got_subcommand(cmd_verify)) {
      require_json(format);
      VerifyReport rep = verify_claims(suite, verify_genus_to, eng, level);
      for (const ClaimResult& c : rep.claims)
        if (c.status == ClaimStatus::Flag)
          std::cerr << "FLAG: " << c.id << " -- " << c.detail << "\n";
      std::cout << verify_json(rep, command).dump(2) << "\n";
      if (rep.failed > 0) exit_code = 1;
    }
    eng.save_cache();
    return exit_code;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EscalationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
