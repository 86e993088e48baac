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


// The catalogue of checks, in dependency order, and id/suite selection.

#ifndef UPV_SUITE_REGISTRY_HPP_
#define UPV_SUITE_REGISTRY_HPP_

#include <functional>
#include <string>
#include <vector>

#include "upv/report/report.hpp"
#include "upv/suite/config.hpp"

namespace upv::suite {

struct CheckSpec {
  std::string id;
  std::string description;
  // Needs an F_q point enumeration.
  bool enumerates = false;
  // Reachable by id only; excluded from suites and "all".
  bool alias = false;
  std::function<CheckReport(const RunConfig&)> run;
};

const std::vector<CheckSpec>& registry();

// The suite names, in run order.
const std::vector<std::string>& suites();

// An id, a suite name or "all". Throws ConfigError for unknown names.
std::vector<const CheckSpec*> select(const std::string& name);

// Runs a check, turning an exception into a failed report.
CheckReport run_check(const CheckSpec& spec, const RunConfig& cfg);

}  // namespace upv::suite

#endif  // UPV_SUITE_REGISTRY_HPP_
