#pragma once

// Outcome of a verification routine.  Failures throw VerificationError; a
// returned Report lists what was checked, in insertion order.

#include <string>
#include <utility>
#include <vector>

namespace sf {

struct Report {
  std::string name;
  std::vector<std::pair<std::string, std::string>> items;

  explicit Report(std::string n = {}) : name(std::move(n)) {}
  void add(const std::string& key, const std::string& value) { items.emplace_back(key, value); }
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void merge(const Report& o);
  std::string text() const;
};

}  // namespace sf
