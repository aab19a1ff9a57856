#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace xychain {

struct PresetInfo {
  std::string name;
  std::string description;
  bool sweep = false;
};

std::vector<PresetInfo> list_presets();

/// Full configuration document of a figure preset. ConfigError for an
/// unknown name.
nlohmann::json preset_document(const std::string& name);

}  // namespace xychain
