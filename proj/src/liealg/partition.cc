#include "wkalg/liealg/partition.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wkalg/errors.h"

namespace wkalg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition has no parts");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  if (n_ < 2) throw std::invalid_argument("sl(N) needs N >= 2");
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError("invalid partition '" + std::string(text) + "': " + e.what());
  }
}

Partition Partition::hook(int m, int n) {
  std::vector<int> parts{m};
  parts.insert(parts.end(), static_cast<std::size_t>(std::max(n, 0)), 1);
  return Partition(std::move(parts));
}

Partition Partition::rectangular(int q, int m) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(m, 0)), q));
}

std::vector<int> Partition::dual() const {
  std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

}  // namespace wkalg
