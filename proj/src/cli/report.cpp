#include <algorithm>
#include <cstdio>

#include "embedkit/cli.hpp"
#include "json.hpp"

namespace embedkit::cli {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string d_text(const std::optional<std::size_t>& d, std::size_t cap) {
  if (d) return std::to_string(*d);
  return cap == 0 ? "?" : ">" + std::to_string(cap);
}

}  // namespace

void RunReport::add_check(std::string name, CheckStatus status, std::string detail) {
  checks.push_back({std::move(name), status, std::move(detail)});
}

bool RunReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::string RunReport::to_text() const {
  std::string out;
  out += "command: " + command + "\n";
  out += "input: " + input + "\n";
  if (map) {
    out += "map: V=" + std::to_string(map->vertices) + " E=" + std::to_string(map->edges) +
           " F=" + std::to_string(map->faces) + " chi=" + std::to_string(map->euler_char) +
           " g=" + std::to_string(map->genus) + "\n";
  }
  if (code) {
    out += "code: [[" + std::to_string(code->n) + "," + std::to_string(code->k) + "," + d_text(code->d, code->cap) +
           "]] cap=" + std::to_string(code->cap) + "\n";
  }
  if (predicted) {
    out += "predicted: [[" + std::to_string(predicted->n) + "," + std::to_string(predicted->k) + "," +
           std::to_string(predicted->d) + "]]\n";
  }
  for (const auto& c : checks) {
    out += "check " + c.name + ": " + status_name(c.status);
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += "\n";
  }
  for (const auto& n : notes) out += "note: " + n + "\n";
  out += "exit: " + std::to_string(exit_code) + "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "time_ms: %.3f\n", wall_ms);
  out += buf;
  return out;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["input"] = input;
  if (map) {
    j["map"] = {{"V", map->vertices}, {"E", map->edges}, {"F", map->faces}, {"chi", map->euler_char}, {"g", map->genus}};
  }
  if (code) {
    nlohmann::ordered_json c = {{"n", code->n}, {"k", code->k}};
    c["d"] = code->d ? nlohmann::ordered_json(*code->d) : nlohmann::ordered_json(nullptr);
    c["cap"] = code->cap;
    j["code"] = c;
  }
  if (predicted) j["predicted"] = {{"n", predicted->n}, {"k", predicted->k}, {"d", predicted->d}};
  auto checks_json = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["checks"] = checks_json;
  j["notes"] = notes;
  j["exit"] = exit_code;
  j["time_ms"] = wall_ms;
  return j.dump();
}

}  // namespace embedkit::cli
