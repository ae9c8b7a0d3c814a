#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wkalg::cli {

// One reproduction check. criterion is the acceptance-criterion number
// (1..10) the check belongs to.
struct CheckResult {
  std::string id;
  int criterion = 0;
  std::string section;
  std::string title;
  bool passed = false;
  std::string detail;
};

/// central-charge, tables, levels, verdicts, c-values, admissibility,
/// heights, h-mu, properties.
const std::vector<std::string>& check_sections();

/// Runs every check, or only those of one section. Throws ParseError for
/// an unknown section name. Order is fixed.
std::vector<CheckResult> run_checks(const std::optional<std::string>& section = std::nullopt);

}  // namespace wkalg::cli
