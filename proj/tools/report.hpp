// Copyright 2026 The spq Authors
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

#pragma once

// The report document shared by every subcommand. A report is a list of
// checks; each check has a status and string-valued details, so the text and
// JSON renderings come from the same data and agree on pass/fail.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace spq::cli {

enum class Status { Pass, Fail, Skipped, Info };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Info: return "info";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::Info;
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<nlohmann::ordered_json> items;  // optional rows, e.g. pipeline entries
  std::vector<std::string> item_lines;        // the same rows for text mode

  Check& add(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

inline Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

struct Report {
  std::vector<std::string> command;
  std::vector<Check> checks;

  Check& add(std::string name, Status s) {
    checks.push_back(Check{std::move(name), s, {}, {}, {}});
    return checks.back();
  }
  bool failed() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return true;
    return false;
  }

  nlohmann::ordered_json to_json(const std::string& version) const {
    nlohmann::ordered_json doc;
    doc["schema"] = "spq-report/1";
    doc["version"] = version;
    doc["command"] = command;
    doc["status"] = failed() ? "fail" : "pass";
    auto& arr = doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json j;
      j["name"] = c.name;
      j["status"] = status_name(c.status);
      auto& d = j["details"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : c.details) d[k] = v;
      if (!c.items.empty()) j["items"] = c.items;
      arr.push_back(std::move(j));
    }
    return doc;
  }

  void print_text(std::ostream& os) const {
    for (const auto& c : checks) {
      const char* tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL"
                        : c.status == Status::Skipped                             ? "SKIP"
                                                                                  : "INFO";
      os << tag << "  " << c.name << "\n";
      for (const auto& [k, v] : c.details) os << "      " << k << ": " << v << "\n";
      for (const auto& l : c.item_lines) os << "      " << l << "\n";
    }
    os << (failed() ? "result: FAIL" : "result: PASS") << "\n";
  }
};

}  // namespace spq::cli
