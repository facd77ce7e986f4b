#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace opair::cli {

// One checked instance of a suite, e.g. "d2" on "K(5)".
struct InstanceResult {
  std::string name;
  std::map<std::string, std::string> params;
  bool pass = true;
  std::vector<std::string> counterexamples;
  std::string note;
  double seconds = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<InstanceResult> instances;

  bool pass() const {
    for (const auto& i : instances)
      if (!i.pass) return false;
    return true;
  }

  // Runs `check` and records it. A failing check without a witness gets the
  // instance name as its counterexample.
  void run(std::string name, std::map<std::string, std::string> params,
           const std::function<void(InstanceResult&)>& check) {
    InstanceResult r;
    r.name = std::move(name);
    r.params = std::move(params);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      check(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.counterexamples.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.pass && r.counterexamples.empty()) r.counterexamples.push_back(r.name);
    instances.push_back(std::move(r));
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["pass"] = pass();
    j["instances"] = nlohmann::json::array();
    for (const auto& i : instances) {
      nlohmann::json e;
      e["name"] = i.name;
      e["params"] = i.params;
      e["pass"] = i.pass;
      e["counterexamples"] = i.counterexamples;
      if (!i.note.empty()) e["note"] = i.note;
      e["seconds"] = i.seconds;
      j["instances"].push_back(std::move(e));
    }
    return j;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& i : instances) {
      out += (i.pass ? "PASS " : "FAIL ") + suite + " " + i.name;
      if (!i.note.empty()) out += "  (" + i.note + ")";
      out += "\n";
      for (std::size_t c = 0; c < i.counterexamples.size() && c < 5; ++c)
        out += "    counterexample: " + i.counterexamples[c] + "\n";
    }
    out += std::string(pass() ? "PASS" : "FAIL") + " " + suite + "\n";
    return out;
  }
};

}  // namespace opair::cli
