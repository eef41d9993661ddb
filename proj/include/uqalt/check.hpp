#pragma once

// Result rows shared by all verification suites.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace uqalt {

struct CheckResult {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  std::string detail; // residual or error text on failure
  bool skipped = false; // bound exceeded before the check could finish

  std::string status() const { return skipped ? "skipped-overflow" : pass ? "pass" : "fail"; }

  nlohmann::json to_json() const {
    nlohmann::json j{{"check", check}, {"params", params}, {"status", status()}};
    if (!detail.empty()) j["detail"] = detail;
    return j;
  }
};

using CheckList = std::vector<CheckResult>;

// Record a residual check: passes iff the residual is zero.
template <class T>
void record_zero(CheckList &out, std::string name, nlohmann::json params, const T &residual) {
  CheckResult r{std::move(name), std::move(params), residual.is_zero(), {}};
  if (!r.pass) {
    std::string s = residual.to_string();
    if (s.size() > 400) s = s.substr(0, 400) + "...";
    r.detail = "nonzero residual: " + s;
  }
  out.push_back(std::move(r));
}

inline void record_bool(CheckList &out, std::string name, nlohmann::json params, bool ok,
                        std::string detail_on_fail = {}) {
  out.push_back(CheckResult{std::move(name), std::move(params), ok, ok ? std::string() : std::move(detail_on_fail)});
}

// Skipped checks do not count as passing here.
inline bool all_pass(const CheckList &l) {
  for (const auto &r : l)
    if (!r.pass || r.skipped) return false;
  return true;
}

inline bool any_fail(const CheckList &l) {
  for (const auto &r : l)
    if (!r.pass && !r.skipped) return true;
  return false;
}

inline void append(CheckList &dst, const CheckList &src) { dst.insert(dst.end(), src.begin(), src.end()); }

} // namespace uqalt
