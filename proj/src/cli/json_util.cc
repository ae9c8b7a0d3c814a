#include "wkalg/cli/json_util.h"

namespace wkalg::cli {

std::string frac(const Rat& r) { return r.str(); }

std::string frac(long long v) { return std::to_string(v); }

Json weight_json(std::span<const int> weight) {
  Json out = Json::array();
  for (int w : weight) out.push_back(frac(w));
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rat parse_level(const std::string& text) { return Rat::parse(text); }

}  // namespace wkalg::cli
