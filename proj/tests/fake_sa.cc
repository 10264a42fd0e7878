// Copyright 2026 The fairmt Authors
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

// Scriptable classifier for the subprocess adapter tests.
//
//   fake_sa ok [spawn_log]    negative iff the text contains "bad"
//   fake_sa neutral           answers "neutral"
//   fake_sa missing           answers every third request under a wrong id
//   fake_sa crash             writes to stderr and exits 3
//   fake_sa sleep             never answers
//   fake_sa flaky <state>     crashes on first start, then behaves like ok

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "json.hpp"

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "ok";
  const std::string arg = argc > 2 ? argv[2] : "";
  if (mode == "ok" && !arg.empty()) {
    std::ofstream(arg, std::ios::app) << "spawn\n";
  }
  if (mode == "crash") {
    std::cerr << "boom: model failed to load\n";
    return 3;
  }
  if (mode == "flaky") {
    std::ifstream probe(arg);
    if (!probe.good()) {
      std::ofstream(arg) << "started\n";
      std::cerr << "flaky start\n";
      return 4;
    }
  }
  if (mode == "sleep") {
    std::this_thread::sleep_for(std::chrono::hours(1));
    return 0;
  }
  std::string line;
  int n = 0;
  while (std::getline(std::cin, line)) {
    ++n;
    auto req = nlohmann::json::parse(line);
    const std::string text = req["text"].get<std::string>();
    nlohmann::json resp;
    resp["id"] = req["id"];
    if (mode == "neutral") {
      resp["label"] = "neutral";
    } else {
      resp["label"] =
          text.find("bad") != std::string::npos ? "NEGATIVE" : "Positive";
    }
    if (mode == "missing" && n % 3 == 0) resp["id"] = "unknown";
    std::cout << resp.dump() << "\n" << std::flush;
  }
  return 0;
}
