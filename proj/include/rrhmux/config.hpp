// SPDX-License-Identifier: Apache-2.0
// Flat key-value experiment configs: `key = value` lines, `#` comments,
// comma-separated lists, and `pi`-style angle literals (pi, pi/6, pi*0.5).
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrhmux {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& dflt) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double dflt) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<std::int64_t> get_int_list(const std::string& key) const;

  // throws ConfigError naming the first key that was never read
  void check_all_used() const;

  // parses a number or pi-form; exposed for CLI reuse
  static double parse_number(const std::string& text, const std::string& field);

 private:
  std::string raw(const std::string& key) const;
  std::map<std::string, std::string> kv_;
  mutable std::set<std::string> used_;
};

}  // namespace rrhmux
