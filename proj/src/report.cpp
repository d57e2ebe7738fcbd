// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#include "dqc/report.hpp"

#include <sstream>

namespace dqc {

void Report::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

void Report::set(const std::string& key, long long value) { set(key, std::to_string(value)); }
void Report::set(const std::string& key, uint64_t value) { set(key, std::to_string(value)); }
void Report::set(const std::string& key, int value) { set(key, std::to_string(value)); }
void Report::set_bool(const std::string& key, bool value) {
  set(key, std::string(value ? "true" : "false"));
}

std::optional<std::string> Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

std::string Report::structured() const {
  std::ostringstream out;
  for (const auto& [k, v] : entries_) out << k << " " << v << "\n";
  return out.str();
}

std::string Report::text() const {
  size_t width = 0;
  for (const auto& [k, v] : entries_) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : entries_) {
    out << k;
    for (size_t i = k.size(); i < width + 2; ++i) out << ' ';
    out << v << "\n";
  }
  return out.str();
}

}  // namespace dqc
