// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rlsim/config.hpp"

namespace rlsim {

using FieldRef =
    std::variant<double*, int*, bool*, std::int64_t*, std::uint64_t*, std::string*, Vec3*, Curve*,
                 Range*>;

/// Flat registry of named, typed references into a config struct. Names are dotted
/// paths relative to the section (e.g. "suspension.front.stiffness").
class FieldTable {
 public:
  explicit FieldTable(std::string section) : section_(std::move(section)) {}

  FieldTable& add(std::string name, FieldRef ref) {
    fields_.emplace_back(std::move(name), ref);
    return *this;
  }

  const std::string& section() const { return section_; }
  const std::vector<std::pair<std::string, FieldRef>>& fields() const { return fields_; }
  FieldRef* find(std::string_view name);

 private:
  std::string section_;
  std::vector<std::pair<std::string, FieldRef>> fields_;
};

FieldTable physics_fields(PhysicsConfig& cfg);

/// Applies a TOML document to the given sections. Every key must name a registered
/// field; unknown sections or keys throw ConfigError.
void apply_toml_text(std::string_view text, std::vector<FieldTable>& sections,
                     const std::string& source_name = "<string>");
void apply_toml_file(const std::filesystem::path& path, std::vector<FieldTable>& sections);

/// Applies a single "section.key=value" override, value in TOML syntax.
void apply_override(std::string_view assignment, std::vector<FieldTable>& sections);

/// Serializes all sections as TOML with round-trip precision.
std::string dump_toml(const std::vector<FieldTable>& sections);

PhysicsConfig load_physics_config(const std::filesystem::path& path);
PhysicsConfig parse_physics_config(std::string_view text);

}  // namespace rlsim
