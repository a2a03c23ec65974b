#pragma once

#include <map>
#include <string>

namespace afb {

/// Flat key=value configuration with dotted section names
/// (e.g. "chanvese.mu=0.2"). Every consumer supplies its own default, so an
/// empty config is always valid.
class Config {
 public:
  Config() = default;

  /// Parse a config file. '#' starts a comment, blank lines are ignored.
  static Config load(const std::string& path);

  /// Parse config text (same grammar as load()).
  static Config parse(const std::string& text);

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  std::string get_string(const std::string& key, const std::string& fallback) const;
  int get_int(const std::string& key, int fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace afb
