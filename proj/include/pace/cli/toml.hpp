#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pace/core/game.hpp"

// The subset of TOML the experiment configs use: [dotted.section] headers,
// key = value lines, '#' comments, and values that are integers, floats,
// booleans, basic strings or (nested, possibly multi-line) arrays.
namespace pace::cli {

class ConfigError : public core::UsageError {
 public:
  using core::UsageError::UsageError;
};

struct TomlValue {
  enum class Kind { Integer, Float, Bool, String, Array };
  Kind kind = Kind::Integer;
  std::int64_t integer = 0;
  double number = 0.0;
  bool boolean = false;
  std::string text;
  std::vector<TomlValue> items;

  [[nodiscard]] double as_double(std::string_view key) const;
  [[nodiscard]] std::int64_t as_int(std::string_view key) const;
  [[nodiscard]] std::size_t as_size(std::string_view key) const;
  [[nodiscard]] bool as_bool(std::string_view key) const;
  [[nodiscard]] const std::string& as_string(std::string_view key) const;
  [[nodiscard]] const std::vector<TomlValue>& as_array(std::string_view key) const;
};

struct TomlSection {
  std::string name;  // "" for keys before the first header
  std::vector<std::pair<std::string, TomlValue>> entries;
};

struct TomlDocument {
  std::vector<TomlSection> sections;
};

// Throws ConfigError with the line number on malformed input, duplicate keys
// or duplicate sections.
TomlDocument parse_toml(std::string_view text);

}  // namespace pace::cli
