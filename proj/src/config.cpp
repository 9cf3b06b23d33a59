// SPDX-License-Identifier: Apache-2.0
#include "rrhmux/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace rrhmux {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) parts.push_back(trim(item));
  return parts;
}

bool valid_key(const std::string& k) {
  if (k.empty() || (!std::isalpha(static_cast<unsigned char>(k[0])) && k[0] != '_'))
    return false;
  return std::all_of(k.begin(), k.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

double plain_number(const std::string& text, const std::string& field) {
  double v = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  const auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc{} || res.ptr != e)
    throw ConfigError("config: field '" + field + "': invalid number '" + text + "'");
  return v;
}

}  // namespace

double Config::parse_number(const std::string& text, const std::string& field) {
  const std::string s = trim(text);
  if (s.rfind("pi", 0) == 0) {
    if (s.size() == 2) return std::numbers::pi;
    if (s[2] == '/') return std::numbers::pi / plain_number(trim(s.substr(3)), field);
    if (s[2] == '*') return std::numbers::pi * plain_number(trim(s.substr(3)), field);
    throw ConfigError("config: field '" + field + "': invalid value '" + text + "'");
  }
  return plain_number(s, field);
}

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) + ": expected 'key = value', got '" +
                        line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_key(key))
      throw ConfigError("config: line " + std::to_string(lineno) + ": bad key '" + key + "'");
    if (cfg.kv_.count(key))
      throw ConfigError("config: line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    cfg.kv_[key] = value;
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_string(buf.str());
}

std::string Config::raw(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) throw ConfigError("config: missing required field '" + key + "'");
  used_.insert(key);
  return it->second;
}

std::string Config::get_string(const std::string& key) const { return raw(key); }

std::string Config::get_string(const std::string& key, const std::string& dflt) const {
  return has(key) ? raw(key) : dflt;
}

double Config::get_double(const std::string& key) const {
  return parse_number(raw(key), key);
}

double Config::get_double(const std::string& key, double dflt) const {
  return has(key) ? get_double(key) : dflt;
}

std::int64_t Config::get_int(const std::string& key) const {
  const std::string s = raw(key);
  std::int64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ConfigError("config: field '" + key + "': invalid integer '" + s + "'");
  return v;
}

std::int64_t Config::get_int(const std::string& key, std::int64_t dflt) const {
  return has(key) ? get_int(key) : dflt;
}

bool Config::get_bool(const std::string& key, bool dflt) const {
  if (!has(key)) return dflt;
  std::string s = raw(key);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("config: field '" + key + "': invalid boolean '" + s + "'");
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_list(raw(key))) {
    if (item.empty())
      throw ConfigError("config: field '" + key + "': empty list element");
    out.push_back(parse_number(item, key));
  }
  if (out.empty()) throw ConfigError("config: field '" + key + "': empty list");
  return out;
}

std::vector<std::int64_t> Config::get_int_list(const std::string& key) const {
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(raw(key))) {
    std::int64_t v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size())
      throw ConfigError("config: field '" + key + "': invalid integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("config: field '" + key + "': empty list");
  return out;
}

void Config::check_all_used() const {
  for (const auto& [key, value] : kv_)
    if (!used_.count(key))
      throw ConfigError("config: unknown field '" + key + "'");
}

}  // namespace rrhmux
