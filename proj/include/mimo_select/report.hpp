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

#pragma once

// JSON forms of every report the CLI prints. Each top-level document carries
// "schema_version" and "kind"; the per-struct to_json/from_json overloads are
// found by nlohmann::json through ADL.

#include <string>

#include <nlohmann/json.hpp>

#include "mimo_select/harness.hpp"

namespace mimo {

inline constexpr int kSchemaVersion = 1;

void to_json(nlohmann::json& j, const CapacityReport& r);
void from_json(const nlohmann::json& j, CapacityReport& r);

void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);

void to_json(nlohmann::json& j, const RemovalStep& s);
void from_json(const nlohmann::json& j, RemovalStep& s);

void to_json(nlohmann::json& j, const SelectionResult& r);
SelectionResult selection_result_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const IdentityReport& r);
void from_json(const nlohmann::json& j, IdentityReport& r);

void to_json(nlohmann::json& j, const VerifyFailure& f);
void from_json(const nlohmann::json& j, VerifyFailure& f);

void to_json(nlohmann::json& j, const VerificationRun& r);
void from_json(const nlohmann::json& j, VerificationRun& r);

void to_json(nlohmann::json& j, const IdentityRun& r);
void from_json(const nlohmann::json& j, IdentityRun& r);

void to_json(nlohmann::json& j, const TightnessReport& r);
void from_json(const nlohmann::json& j, TightnessReport& r);

// Wraps a report as a top-level document.
nlohmann::json document(const std::string& kind, nlohmann::json body);

}  // namespace mimo
