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

#include "manifest.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>
#include <sstream>

#include "cqad/errors.hpp"
#include "json.hpp"

namespace cqad::cli {

using nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 computation failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("{}: cannot open file", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return "sha256:" + sha256_hex(buffer.str());
}

std::string manifest_to_json(const RunManifest& manifest) {
  ordered_json doc;
  doc["command"] = manifest.command;
  doc["parameters"] = ordered_json::object();
  for (const auto& [key, value] : manifest.parameters) doc["parameters"][key] = value;
  doc["config_digest"] = manifest.config_digest ? ordered_json(*manifest.config_digest) : ordered_json();
  doc["tool_version"] = manifest.tool_version;
  return doc.dump(2) + "\n";
}

RunManifest manifest_from_json(std::string_view text, std::string_view source) {
  const auto fail = [&](const std::string& what) {
    throw ParseError(fmt::format("{}: {}", source, what));
  };
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    fail(fmt::format("invalid JSON at byte {}", e.byte));
  }
  if (!doc.is_object()) fail("manifest must be an object");
  RunManifest m;
  if (!doc.contains("command") || !doc["command"].is_string()) fail("$.command must be a string");
  m.command = doc["command"].get<std::string>();
  if (!doc.contains("parameters") || !doc["parameters"].is_object()) fail("$.parameters must be an object");
  for (const auto& [key, value] : doc["parameters"].items()) {
    if (!value.is_string()) fail(fmt::format("$.parameters.{} must be a string", key));
    m.parameters.emplace(key, value.get<std::string>());
  }
  if (doc.contains("config_digest") && !doc["config_digest"].is_null()) {
    if (!doc["config_digest"].is_string()) fail("$.config_digest must be a string or null");
    m.config_digest = doc["config_digest"].get<std::string>();
  }
  if (!doc.contains("tool_version") || !doc["tool_version"].is_string()) fail("$.tool_version must be a string");
  m.tool_version = doc["tool_version"].get<std::string>();
  return m;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  return std::filesystem::path(output.string() + ".manifest.json");
}

}  // namespace cqad::cli
