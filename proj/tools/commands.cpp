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


#include "commands.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace blowup::cli {

namespace {

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  f << text;
  if (!f.flush()) throw std::runtime_error("cannot write \"" + path + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Maps library exceptions onto exit codes; everything else propagates.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    report_error(err, "parse", e.what());
  } catch (const ValidationError& e) {
    report_error(err, "validation", e.what());
  } catch (const DegenerateInstance& e) {
    report_error(err, "degenerate", e.what());
  } catch (const std::runtime_error& e) {
    report_error(err, "io", e.what());
  }
  return kUsageError;
}

std::size_t parse_size(std::string_view text) {
  std::size_t v = 0;
  if (text.empty()) throw ValidationError("empty number in grid");
  for (char c : text) {
    if (c < '0' || c > '9') throw ValidationError("bad grid entry \"" + std::string(text) + "\"");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

Budget instance_budget(const RunConfig& config) {
  Budget b = config.budget;
  if (config.budget_seconds > 0) {
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(config.budget_seconds));
  }
  return b;
}

}  // namespace

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto p = random_presentation(config.d, config.n, config.characteristic, config.seed);
    const std::string text = p.to_json();
    if (config.output.empty()) {
      out << text;
    } else {
      write_file(config.output, text);
    }
    if (p.resamples > 0) err << "resampled " << p.resamples << " degenerate draw(s)\n";
    return kOk;
  });
}

int cmd_verify(const RunConfig& config, const std::string& instance_path, bool json_to_stdout, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const auto p = instance_path.empty()
                       ? random_presentation(config.d, config.n, config.characteristic, config.seed)
                       : AlternatingPresentation::from_json(read_file(instance_path));
    VerifyOptions options;
    options.checks = parse_check_selection(config.checks);
    options.budget = instance_budget(config);
    auto report = verify_instance(p, options, config.tier);
    const std::string json = report.to_json(config.timings);
    if (!config.output.empty()) write_file(config.output, json);
    out << (json_to_stdout ? json : report.to_table());
    return report.has_required_failure() ? kRequiredFailure : kOk;
  });
}

std::vector<std::pair<std::size_t, std::size_t>> parse_grid(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> grid;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find_first_of(", ;", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    if (!item.empty()) {
      std::size_t sep = item.find_first_of(":x");
      if (sep == std::string_view::npos) throw ValidationError("grid entry \"" + std::string(item) + "\" needs d:n");
      grid.emplace_back(parse_size(item.substr(0, sep)), parse_size(item.substr(sep + 1)));
    }
    start = end + 1;
  }
  return grid;
}

std::vector<std::pair<std::size_t, std::size_t>> tier_shapes(std::string_view tier) {
  if (tier == "required") return {{3, 5}, {4, 5}, {5, 5}};
  if (tier == "extended") return {{3, 5}, {4, 5}, {5, 5}, {3, 7}, {4, 7}};
  throw ValidationError("unknown tier \"" + std::string(tier) + "\"");
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig& base = config.base;
    tier_shapes(base.tier);
    const auto grid = config.grid ? *config.grid : tier_shapes(base.tier);
    VerifyOptions options;
    options.checks = parse_check_selection(base.checks);

    struct Job {
      std::size_t d, n;
      std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (auto [d, n] : grid) {
      for (std::size_t k = 0; k < config.count; ++k) jobs.push_back({d, n, base.seed + k});
    }
    for (const auto& j : jobs) {
      AlternatingPresentation probe;
      probe.d = j.d;
      probe.n = j.n;
      probe.characteristic = base.characteristic;
      probe.entries.assign(j.n * (j.n - 1) / 2, std::vector<Coeff>(j.d, 0));
      probe.validate();
    }

    std::vector<std::string> rows(jobs.size());
    std::vector<char> failed(jobs.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        const Job& job = jobs[i];
        const std::string prefix = std::to_string(job.d) + "," + std::to_string(job.n) + "," + std::to_string(job.seed) + ",";
        const std::string expected = std::to_string(expected_multiplicity(job.d, job.n));
        std::string text;
        try {
          auto p = random_presentation(job.d, job.n, base.characteristic, job.seed);
          VerifyOptions mine = options;
          mine.budget = instance_budget(base);
          auto report = verify_instance(p, mine, base.tier);
          failed[i] = report.has_required_failure();
          std::string computed;
          for (const auto& c : report.checks) {
            if (c.name == "multiplicity" && c.certificate.contains("e_computed")) {
              computed = std::to_string(c.certificate["e_computed"].get<std::int64_t>());
            }
          }
          for (const auto& c : report.checks) {
            text += prefix + std::to_string(p.resamples) + "," + c.name + "," + std::string(status_name(c.status)) + "," +
                    computed + "," + expected + "," + csv_field(c.detail) + "\n";
          }
        } catch (const std::exception& e) {
          failed[i] = in_tier(job.d, job.n, base.tier);
          text = prefix + ",instance,fail,," + expected + "," + csv_field(e.what()) + "\n";
        }
        rows[i] = std::move(text);
      }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::string csv = std::string(kSweepHeader) + "\n";
    for (const auto& r : rows) csv += r;
    if (base.output.empty()) {
      out << csv;
    } else {
      write_file(base.output, csv);
    }
    for (char f : failed) {
      if (f) return kRequiredFailure;
    }
    return kOk;
  });
}

}  // namespace blowup::cli
