// Copyright 2026 The cqad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace cqad::cli {

/// Everything needed to reproduce one run. Output paths are deliberately not
/// recorded, so a replay into another location yields an identical manifest.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;  // long flag name -> value as typed
  std::optional<std::string> config_digest;       // "sha256:<hex>" of the device file
  std::string tool_version;

  bool operator==(const RunManifest&) const = default;
};

std::string sha256_hex(std::string_view bytes);
/// "sha256:<hex>" of the file contents. Throws cqad::ParseError if unreadable.
std::string file_digest(const std::filesystem::path& path);

std::string manifest_to_json(const RunManifest& manifest);
/// Throws cqad::ParseError on malformed input.
RunManifest manifest_from_json(std::string_view text, std::string_view source);

std::filesystem::path manifest_path_for(const std::filesystem::path& output);

}  // namespace cqad::cli
