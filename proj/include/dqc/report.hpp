// dqc - debate query complexity toolkit
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dqc/common.hpp"

namespace dqc {

// Ordered key/value run report. The structured rendering is the stable
// machine-readable surface: one "key value" line per entry, insertion order,
// no timestamps, so identical runs are byte-identical.
class Report {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, long long value);
  void set(const std::string& key, uint64_t value);
  void set(const std::string& key, int value);
  void set_bool(const std::string& key, bool value);

  std::optional<std::string> get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string structured() const;
  std::string text() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace dqc
