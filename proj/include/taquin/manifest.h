// Copyright 2026 The Authors.
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

// Provenance record written next to every command-line run.

#ifndef TAQUIN_MANIFEST_H_
#define TAQUIN_MANIFEST_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace taquin {

inline constexpr char kVersion[] = "1.0.0";

struct RunManifest {
  std::string subcommand;
  std::vector<std::string> argv;
  std::map<std::string, std::string> flags;  // resolved values, defaults too
  uint64_t seed = 0;
  std::string started;  // ISO 8601, UTC
  std::string finished;
  int exit_code = 0;
  std::map<std::string, std::string> digests;  // output name -> sha256 hex

  nlohmann::json ToJson() const;
};

std::string Sha256Hex(std::string_view data);

// Current UTC time, e.g. 2026-01-31T12:00:00.123Z.
std::string UtcTimestamp();

}  // namespace taquin

#endif  // TAQUIN_MANIFEST_H_
