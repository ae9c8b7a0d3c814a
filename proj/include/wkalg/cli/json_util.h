#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "wkalg/exact/rat.h"

namespace wkalg::cli {

// nlohmann::json keeps object keys in a std::map, so dumps are canonical.
using Json = nlohmann::json;

// Every number in a report is an exact string: "p/q", or "p" for integers.
std::string frac(const Rat& r);
std::string frac(long long v);

Json weight_json(std::span<const int> weight);

/// Pretty-printed, newline-terminated.
std::string dump(const Json& j);

/// Parses a level given as "p", "-p" or "p/q". Throws ParseError.
Rat parse_level(const std::string& text);

}  // namespace wkalg::cli
