#pragma once

#include <map>
#include <string>
#include <utility>

namespace magicfiber {

// Persistent root-bracket cache: polynomial key -> (cell mantissa, level).
// The file is JSON with a schema tag; on any structural problem the whole
// file is ignored and `warning` explains why (entries are still revalidated
// against the polynomial before use, so a stale or tampered cache can slow
// things down but never change results).
inline constexpr const char* kCacheSchema = "magicfiber-cache-v1";

std::map<std::string, std::pair<std::string, long>> load_root_cache(
    const std::string& path, std::string* warning);

bool save_root_cache(
    const std::string& path,
    const std::map<std::string, std::pair<std::string, long>>& cells,
    std::string* warning);

}  // namespace magicfiber
