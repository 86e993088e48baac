// Copyright 2026 The upv Authors.
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


// The record emitted by every verification: check id, status, a structured
// witness, wall time, and the parameters that were used.

#ifndef UPV_REPORT_REPORT_HPP_
#define UPV_REPORT_REPORT_HPP_

#include <chrono>
#include <cstdint>
#include <string>

#include "json.hpp"

namespace upv {

using Json = nlohmann::ordered_json;

enum class Status { kPass, kFail, kSkipped, kUnstable };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckReport {
  std::string id;
  Status status = Status::kPass;
  Json witness = Json::object();
  std::int64_t time_ms = 0;
  Json params = Json::object();

  bool passed() const { return status == Status::kPass; }

  // Fails the report and records the reason under witness["failures"].
  void fail(const std::string& why);
  // Passes only while every condition so far held.
  void expect(bool ok, const std::string& why_if_not) {
    if (!ok) fail(why_if_not);
  }

  Json to_json() const;
  static CheckReport from_json(const Json& j);
  // One line, no trailing newline.
  std::string to_line() const;
  static CheckReport from_line(const std::string& line);
};

// Wall-clock stopwatch stamping time_ms on a report.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const;
  void stamp(CheckReport& r) const { r.time_ms = elapsed_ms(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace upv

#endif  // UPV_REPORT_REPORT_HPP_
