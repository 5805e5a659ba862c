#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "magicfiber/tables.hpp"

namespace magicfiber {

using ordered_json = nlohmann::ordered_json;

// Certified bracket: floored/ceiled decimals at the canonical digit count
// for the level, plus the exact dyadic mantissas for reproducibility.
ordered_json interval_json(const RootInterval& r);
ordered_json ent_interval_json(const DyadicInterval& d);

ordered_json class_report(const FiberedClass& c, RootEngine& eng, long level,
                          const std::string& command);
ordered_json family_report(const FamilyClass& fc, RootEngine& eng, long level,
                           const std::string& command);

ordered_json min_table_json(const std::vector<MinTableRow>& rows,
                            const std::string& command);
// Header: g,fill,family,k,l,lambda_lo,lambda_hi,orientable,candidates_examined
std::string min_table_csv(const std::vector<MinTableRow>& rows);

ordered_json bounds_json(const std::vector<DeltaBound>& rows,
                         const std::string& command);
std::string bounds_csv(const std::vector<DeltaBound>& rows);

ordered_json ent_face_json(const EntFaceScan& scan,
                           const std::string& fill_label,
                           const std::string& command);
std::string ent_face_csv(const EntFaceScan& scan);
ordered_json magic_ent_json(const MagicEntScan& scan,
                            const std::string& command);
std::string magic_ent_csv(const MagicEntScan& scan);

ordered_json verify_json(const VerifyReport& rep, const std::string& command);

// RFC-4180: quote a field when it contains a comma, quote, or newline.
std::string csv_field(const std::string& s);
std::string csv_line(const std::vector<std::string>& fields);
std::vector<std::vector<std::string>> csv_parse(const std::string& text);

}  // namespace magicfiber
