// Copyright 2026 The gradload Authors
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

#ifndef GRADLOAD_IO_H
#define GRADLOAD_IO_H

#include <string>

#include "json.hpp"

#include "gradload/amplify.h"
#include "gradload/amplitudes.h"
#include "gradload/bootstrap.h"
#include "gradload/resources.h"

namespace gradload {

/// {"n", "g", "shift", "values", "bits"}; bits row major, bit 0 first.
nlohmann::json to_json(const QuantizedAmplitudes &q);
/// Throws ValidationError on a malformed document.
QuantizedAmplitudes quantized_from_json(const nlohmann::json &j);

/// {"g", "raw_frequencies", "weighted", "source", "shots"}.
nlohmann::json to_json(const BitWeightProfile &p);
BitWeightProfile profile_from_json(const nlohmann::json &j);

nlohmann::json to_json(const RunReport &r);
nlohmann::json to_json(const ResourceTally &t);

std::string mode_name(StageTwoMode m);
StageTwoMode parse_mode(const std::string &name);

/// Two-space indented dump with a trailing newline.
std::string pretty(const nlohmann::json &j);

}  // namespace gradload

#endif
