/*
 * Copyright 2026 The blowup authors
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
 */


#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowup/verify.hpp"

namespace blowup::cli {

enum ExitCode : int { kOk = 0, kRequiredFailure = 1, kUsageError = 2 };

struct RunConfig {
  std::size_t d = 3;
  std::size_t n = 5;
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::uint64_t seed = 0;
  std::string checks;
  Budget budget;
  /// Wall-clock allowance per instance; 0 means none.
  double budget_seconds = 0;
  std::string output;
  std::string tier = "required";
  bool timings = false;
};

/// Writes the instance JSON to config.output (stdout when empty).
int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Verifies the instance in `instance_path`, or a fresh one from
/// (d, n, char, seed) when the path is empty. The table goes to `out`; the
/// report JSON goes to config.output, or to `out` when `json_to_stdout`.
int cmd_verify(const RunConfig& config, const std::string& instance_path, bool json_to_stdout, std::ostream& out,
               std::ostream& err);

struct SweepConfig {
  RunConfig base;
  /// Unset means every shape of the tier.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> grid;
  std::size_t count = 1;
  unsigned jobs = 1;
};

/// "3:5,4:5" or "3x5 4x5"; an empty string is an empty grid.
std::vector<std::pair<std::size_t, std::size_t>> parse_grid(std::string_view text);
std::vector<std::pair<std::size_t, std::size_t>> tier_shapes(std::string_view tier);

inline constexpr const char* kSweepHeader = "d,n,seed,resamples,check,status,e_computed,e_expected,detail";

/// CSV with one row per instance per check, in grid then seed order.
int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

std::string csv_field(std::string_view text);

}  // namespace blowup::cli
