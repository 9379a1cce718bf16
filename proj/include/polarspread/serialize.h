// Copyright 2026 The polarspread Authors
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

#ifndef POLARSPREAD_SERIALIZE_H
#define POLARSPREAD_SERIALIZE_H

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "polarspread/counting.h"
#include "polarspread/mub.h"
#include "polarspread/pauli.h"
#include "polarspread/spread.h"

namespace polarspread {

enum class Format { Json, Text };

Format parse_format(std::string_view name);

/// Generators as they appear on disk: d, N and rref basis rows.
struct SpreadData {
    unsigned d = 0;
    unsigned n = 0;
    std::vector<FMatrix> generators;
};

nlohmann::json spread_to_json(const PartialSpread &ps);

/// JSON: {"d", "generators", "n"}. Text: a "# d=<d> n=<n>" header, then one
/// generator per line with rows of comma-separated digits joined by "|".
/// Later lines starting with "#" are comments.
std::string serialize_spread(const PartialSpread &ps, Format format);

/// Parses either format. Throws ParseError on malformed input.
SpreadData parse_spread(std::string_view text, Format format);

/// Resolves parsed generators against the catalog of space. Throws
/// DimensionMismatch on a (d, N) mismatch and NotIsotropic for a basis that
/// is not a generator.
PartialSpread deserialize_spread(std::string_view text, Format format, const PolarSpace &space);

nlohmann::json ops_to_json(const std::vector<PauliOp> &ops);
std::vector<PauliOp> ops_from_json(const nlohmann::json &j);

nlohmann::json completeness_to_json(const CompletenessCert &cert);
nlohmann::json umub_to_json(const UMUBCertificate &cert);
nlohmann::json conjecture_to_json(const ConjectureReport &report);
nlohmann::json brute_force_to_json(const BruteForceSummary &summary);

}  // namespace polarspread

#endif
