#pragma once

#include <string>
#include <vector>

#include "wkalg/cli/json_util.h"
#include "wkalg/cli/verify.h"
#include "wkalg/liealg/partition.h"
#include "wkalg/walgebra/family.h"

namespace wkalg::cli {

// Report builders. Each returns {"command", "query", ...} where every claim
// object carries a "cite" tag: a theorem or table name, or "computed".

Json info_report(const Partition& p);
Json levels_report(const FamilyParams& p);
/// Throws NotConformalError.
Json collapse_report(const FamilyParams& p, const Rat& k);
Json admissible_report(const FamilyParams& p, const Rat& k);
/// A failed hypothesis yields a report with "refused": true.
Json decompose_report(const FamilyParams& p, int i, int range);
Json verify_report(const std::vector<CheckResult>& results);

Json family_json(const FamilyParams& p);

/// Human-readable rendering of any report above.
std::string render_text(const Json& report);

}  // namespace wkalg::cli
