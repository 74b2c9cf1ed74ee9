/**************************************************************************
 * Copyright 2026 The linset Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/


#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linset/report.hpp"

namespace linset {

enum class Tier { Fast, Slow };

const char* to_string(Tier t);
Tier parse_tier(const std::string& name);

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  Tier tier = Tier::Fast;
  bool ran = false;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0 means no limit
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

inline constexpr int kCriterionCount = 13;
inline constexpr std::uint64_t kAcceptanceSeed = 20240607;

// Runs every criterion at or below the tier (or only the listed ids); criteria above the tier are
// returned with ran = false.
std::vector<CriterionResult> run_acceptance(Tier tier, const std::vector<int>& only = {},
                                            std::uint64_t seed = kAcceptanceSeed, unsigned workers = 1);

struct PropertyStats {
  std::uint64_t cases = 0;
  std::uint64_t weight_sum = 0;
  std::uint64_t blokhuis_lavrauw = 0;
  std::uint64_t singleton = 0;
  std::uint64_t transform = 0;
  std::uint64_t not_a_graph = 0;
  std::vector<std::string> failures;
};

// Seeded random cases over several small fields; each case runs all four property checks.
PropertyStats run_property_suite(std::uint64_t cases, std::uint64_t seed);

Json to_json(const CriterionResult& r);
// Aligned expected/computed table.
std::string format_table(const std::vector<CriterionResult>& results);

}  // namespace linset
