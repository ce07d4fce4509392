#include "coxeter/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace coxeter {

std::string to_string(CheckOutcome s) {
  switch (s) {
    case CheckOutcome::kPass: return "pass";
    case CheckOutcome::kFail: return "fail";
    case CheckOutcome::kError: return "error";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckOutcome::kPass; });
}

int VerificationReport::exit_code() const {
  bool error = false;
  for (const auto& c : checks) {
    if (c.status == CheckOutcome::kFail) return kExitVerificationFailure;
    error = error || c.status == CheckOutcome::kError;
  }
  return error ? kExitPrecondition : kExitPass;
}

void VerificationReport::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["group"] = group;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  doc["parameters"] = params;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["id"] = c.id;
    item["status"] = to_string(c.status);
    item["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json(nullptr);
    list.push_back(std::move(item));
  }
  doc["checks"] = list;
  doc["warnings"] = warnings;
  doc["wall_time"] = std::round(wall_time * 1000.0) / 1000.0;
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_table() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  os << "group: " << group << "\n";
  for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << "\n";
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.id.size());
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : checks) {
    ++counts[static_cast<int>(c.status)];
    os << "  " << c.id << std::string(width - c.id.size() + 2, ' ') << to_string(c.status);
    if (c.witness) os << "  " << *c.witness;
    os << "\n";
  }
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  os << "summary: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " error";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", wall_time);
  os << " (" << buf << " s)\n";
  return os.str();
}

}  // namespace coxeter
