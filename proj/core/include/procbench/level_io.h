// Copyright 2026 The procbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef PROCBENCH_LEVEL_IO_H_
#define PROCBENCH_LEVEL_IO_H_

#include <string>
#include <string_view>

#include "procbench/level.h"

namespace procbench {

inline constexpr int kLevelFormatVersion = 1;

// Level JSON, documented in docs/level_format.md. Output is deterministic:
// the same level always serialises to the same bytes.
std::string serialize_level(const Level& level);
std::string serialize_level(const PlatformerLevel& level);
std::string serialize_level(const MazeLevel& level);

// Throws ParseError whose message starts with the JSON path of the first bad
// field.
Level deserialize_level(std::string_view document);

}  // namespace procbench

#endif  // PROCBENCH_LEVEL_IO_H_
