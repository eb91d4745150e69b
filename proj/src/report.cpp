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

#include <algorithm>
#include <sstream>

#include "blowup/verify.hpp"

namespace blowup {

std::string VerificationReport::to_json(bool include_timings) const {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["instance"] = instance_id;
  j["d"] = presentation.d;
  j["n"] = presentation.n;
  j["char"] = presentation.characteristic;
  j["seed"] = presentation.seed;
  j["resamples"] = presentation.resamples;
  j["required"] = required;
  auto checks_json = nlohmann::ordered_json::array();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : checks) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["status"] = status_name(r.status);
    c["detail"] = r.detail;
    c["certificate"] = r.certificate;
    if (include_timings) c["seconds"] = r.seconds;
    checks_json.push_back(std::move(c));
    ++counts[static_cast<int>(r.status)];
  }
  j["checks"] = std::move(checks_json);
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"timeout", counts[2]}, {"skipped", counts[3]}};
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_table() const {
  std::size_t width = 5;
  for (const auto& r : checks) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << instance_id << (required ? " (required)" : " (not required)") << "\n";
  out << std::string("check") << std::string(width - 5 + 2, ' ') << "status   detail\n";
  for (const auto& r : checks) {
    const std::string_view status = status_name(r.status);
    out << r.name << std::string(width - r.name.size() + 2, ' ') << status << std::string(9 - status.size(), ' ')
        << r.detail << "\n";
  }
  return out.str();
}

}  // namespace blowup
