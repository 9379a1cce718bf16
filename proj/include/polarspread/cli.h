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

#ifndef POLARSPREAD_CLI_H
#define POLARSPREAD_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "polarspread/serialize.h"

namespace polarspread {

constexpr const char *kToolVersion = "0.1.0";

enum class ExitCode : int { Ok = 0, Usage = 1, Failed = 2 };

struct RunConfig {
    std::string command;
    unsigned d = 2;
    unsigned n = 2;
    /// construct: classical | tu | sr | uset. verify: complete | regularity |
    /// class-roundtrip. search: exhaustive | first-of-size.
    std::string method;
    unsigned k = 0;
    /// Target size for first-of-size search.
    std::size_t size = 0;
    Format format = Format::Json;
    std::string out;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    bool brute_force = false;
    /// Name of a built-in spread ("classical"); used when from_file is empty.
    std::string from_spread = "classical";
    std::string from_file;
    bool timing = false;
};

nlohmann::json config_to_json(const RunConfig &config);

/// Runs one command and writes the report envelope
///     {"config", "result", "timing", "version"}
/// (or its text rendering) to out. Diagnostics go to err. Returns 0 when
/// every certificate holds, 2 when a certificate fails and 1 when the
/// command could not run.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv into a config and runs it, honouring --out.
int cli_main(int argc, const char *const *argv);

}  // namespace polarspread

#endif
