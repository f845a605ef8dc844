// Copyright 2026 The twoset Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twoset/family.hpp"

namespace twoset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the default --seed.
inline constexpr const char* kSeedEnv = "TWOSET_SEED";

enum class Format { kText, kJson, kCsv };

// Fully resolved options of one invocation. Embedded in every JSON record.
struct RunConfig {
  std::string command;
  std::vector<Family> families;
  int n_min = 0;
  int n_max = 0;
  std::optional<double> p_noise;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  int restarts = 0;
  Format format = Format::kText;
  std::string out_path;
  bool check = false;
  bool negate = false;
  bool bootstrap = false;
  std::vector<std::string> ingest;
  std::string counts_out;
};

// Published noise tolerances, loaded from the versioned fixture compiled into the binary.
struct ReferenceTable {
  int version = 0;
  double tolerance = 0.0;
  std::map<Family, std::map<int, double>> values;
};

ReferenceTable load_reference_table();

std::string tool_version();

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twoset::cli
