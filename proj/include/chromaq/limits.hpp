// Copyright 2026 chromaq contributors
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

#include <stdexcept>
#include <string>

namespace chromaq {

/// Thrown when an enumeration would exceed its configured safety limit.
/// Callers may lift limits explicitly (the CLI maps CHROMAQ_LIMIT_OVERRIDE=1
/// to a large limit).
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

namespace limits {
inline constexpr int kBruteForceVertices = 8;
inline constexpr int kForestTripleVertices = 9;
inline constexpr int kLltEdges = 24;
}  // namespace limits

}  // namespace chromaq
