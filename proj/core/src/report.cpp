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


#include "upv/report/report.hpp"

#include <stdexcept>

namespace upv {

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
    case Status::kUnstable: return "unstable";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::kPass;
  if (s == "fail") return Status::kFail;
  if (s == "skipped") return Status::kSkipped;
  if (s == "unstable") return Status::kUnstable;
  throw std::invalid_argument("unknown status '" + s + "'");
}

void CheckReport::fail(const std::string& why) {
  status = Status::kFail;
  auto& list = witness["failures"];
  if (list.size() < 20) list.push_back(why);
}

Json CheckReport::to_json() const {
  Json j;
  j["id"] = id;
  j["status"] = to_string(status);
  j["witness"] = witness;
  j["time_ms"] = time_ms;
  j["params"] = params;
  return j;
}

CheckReport CheckReport::from_json(const Json& j) {
  CheckReport r;
  r.id = j.at("id").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.witness = j.value("witness", Json::object());
  r.time_ms = j.value("time_ms", std::int64_t{0});
  r.params = j.value("params", Json::object());
  return r;
}

std::string CheckReport::to_line() const { return to_json().dump(); }

CheckReport CheckReport::from_line(const std::string& line) {
  return from_json(Json::parse(line));
}

std::int64_t Stopwatch::elapsed_ms() const {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start_)
      .count();
}

}  // namespace upv
