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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "linset/families.hpp"
#include "linset/geometry.hpp"
#include "linset/rankcode.hpp"
#include "linset/search.hpp"
#include "linset/stabilizer.hpp"

namespace linset {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// "p^k" or "p^k/..." plus an optional q (defaults to p).
ExtPtr parse_extension(const std::string& field_spec, std::optional<std::uint64_t> q = std::nullopt);

Json to_json(const Extension& ext);
Json to_json(const LinPoly& f);
Json to_json(const Mat2& A);
Json to_json(const Matrix& M);
Json to_json(const WeightSpectrum& s, unsigned n);
Json to_json(const Scatteredness& s);
Json to_json(const StabReport& s);
Json to_json(const IdealizerReport& r);
Json to_json(const PsiCheck& p);
Json to_json(const RestrictedCode& r);
Json to_json(const LtnqReport& r);
Json to_json(const LineProfile& p);

struct AnalyzeOptions {
  std::vector<unsigned> t;  // empty means every divisor 1 < t < n
  std::uint64_t budget = kCodewordBudget;
  std::uint64_t seed = 0;
  bool timing = false;
};

// Proper divisors 1 < t < n of n.
std::vector<unsigned> proper_divisors(unsigned n);

Json code_report(const LinPoly& f, const AnalyzeOptions& opts);
Json stabilizer_report(const LinPoly& f, const AnalyzeOptions& opts);
Json analyze(const LinPoly& f, const AnalyzeOptions& opts);

// {family, params, diagnostics, all_hold, polynomial}
Json family_report(const std::string& name, const FamilyInstance& inst);
// {exhaustive, space, examined, matches, hits}
Json to_json(const SearchResult& r);

}  // namespace linset
