#include "magicfiber/cachefile.hpp"

#include <fstream>
#include <json.hpp>

namespace magicfiber {

using nlohmann::json;

std::map<std::string, std::pair<std::string, long>> load_root_cache(
    const std::string& path, std::string* warning) {
  std::map<std::string, std::pair<std::string, long>> out;
  std::ifstream in(path);
  if (!in) return out;  // missing file: cold start, no warning
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object() ||
      doc.value("schema", "") != kCacheSchema || !doc.contains("roots") ||
      !doc["roots"].is_object()) {
    if (warning) *warning = "cache file ignored: unrecognized format";
    return out;
  }
  for (const auto& [key, val] : doc["roots"].items()) {
    if (!val.is_object() || !val.contains("cell") || !val.contains("level") ||
        !val["cell"].is_string() || !val["level"].is_number_integer()) {
      if (warning) *warning = "cache file ignored: malformed entry";
      out.clear();
      return out;
    }
    out[key] = {val["cell"].get<std::string>(), val["level"].get<long>()};
  }
  return out;
}

bool save_root_cache(
    const std::string& path,
    const std::map<std::string, std::pair<std::string, long>>& cells,
    std::string* warning) {
  json roots = json::object();
  for (const auto& [key, cell] : cells) {
    roots[key] = {{"cell", cell.first}, {"level", cell.second}};
  }
  json doc = {{"schema", kCacheSchema}, {"roots", roots}};
  std::ofstream out(path);
  if (!out) {
    if (warning) *warning = "cache file not writable: " + path;
    return false;
  }
  out << doc.dump(1) << "\n";
  return static_cast<bool>(out);
}

}  // namespace magicfiber
