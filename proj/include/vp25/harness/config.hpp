#pragma once

#include <string>
#include <vector>

namespace vp25 {

inline constexpr const char* kVersion = "0.1.0";

enum class ValueSource { preset, file, flag };

struct ConfigEntry {
  std::string key;
  std::string value;
  std::string help;
  ValueSource source = ValueSource::preset;
  bool required = false;  // no usable default
  bool positive = false;  // numeric value must be > 0
};

/// Flat key=value registry. Every key has a documented default; files and
/// flags may only set registered keys. Flags override the file.
class Config {
 public:
  /// Registry with all defaults.
  static Config defaults();

  /// Parses "key = value" lines; '#' starts a comment. Throws ConfigError on
  /// unknown keys, duplicates within the file, or lines without '='.
  void load_file(const std::string& path);
  void load_text(const std::string& text, const std::string& origin = "<text>");
  /// Throws ConfigError for unknown keys.
  void set_flag(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  std::string str(const std::string& key) const;
  double num(const std::string& key) const;
  int integer(const std::string& key) const;
  bool boolean(const std::string& key) const;

  /// Missing required keys, malformed numbers, nonpositive values where
  /// positivity is required. Throws ConfigError naming the key.
  void validate() const;

  /// Effective configuration, one "key = value  # source" line per key.
  std::string echo() const;

  const std::vector<ConfigEntry>& entries() const { return entries_; }

 private:
  ConfigEntry& at(const std::string& key);
  const ConfigEntry& at(const std::string& key) const;
  void add(std::string key, std::string value, std::string help, bool positive = false, bool required = false);

  std::vector<ConfigEntry> entries_;
};

}  // namespace vp25
