#pragma once

// One row of the verification sweep and its CSV / JSON renderings.
//
// CSV columns, in order:
//   n,p,r,K,M,match,demolish_len,t31,t32,t41,states_expanded,ms
// Cells outside the memory budget print "skipped" in M and every check
// column; cells that failed print "error". `ms` is the only
// non-deterministic column.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "hanoi/analysis.hpp"
#include "hanoi/numerics.hpp"
#include "hanoi/oracle.hpp"

namespace hanoi {

enum class CellStatus { computed, skipped, error };

struct VerifyRow {
  unsigned n = 0;
  unsigned p = 0;
  unsigned r = 0;
  KValue k;
  CellStatus status = CellStatus::computed;
  std::string error;
  std::optional<InstanceReport> report;
  std::int64_t ms = 0;

  bool passed() const { return status == CellStatus::skipped || (report && report->ok()); }
};

inline constexpr const char* kVerifyCsvHeader =
    "n,p,r,K,M,match,demolish_len,t31,t32,t41,states_expanded,ms";

inline VerifyRow verify_cell(unsigned n, unsigned p, std::size_t sample_limit, const SearchOptions& options) {
  VerifyRow row;
  row.n = n;
  row.p = p;
  row.r = find_r(n, p);
  row.k = k_closed(n, p);
  if (!within_budget(n, p, options)) {
    row.status = CellStatus::skipped;
    return row;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    row.report = analyze_instance(n, p, sample_limit, options);
  } catch (const Error& e) {
    row.status = CellStatus::error;
    row.error = e.what();
  }
  row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

inline std::string to_csv(const VerifyRow& row) {
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  std::string out = std::to_string(row.n) + "," + std::to_string(row.p) + "," + std::to_string(row.r) + "," +
                    row.k.str() + ",";
  if (row.status != CellStatus::computed) {
    const std::string tag = row.status == CellStatus::skipped ? "skipped" : "error";
    for (int i = 0; i < 6; ++i) out += tag + ",";
    return out + "0," + std::to_string(row.ms);
  }
  const auto& r = *row.report;
  return out + std::to_string(r.m) + "," + flag(r.conjecture_holds()) + "," + std::to_string(r.demolish_len) +
         "," + flag(r.theorem31_ok) + "," + flag(r.theorem32_ok && r.balance_ok && r.reflection_ok) + "," +
         flag(r.theorem41_ok) + "," + std::to_string(r.states_expanded) + "," + std::to_string(row.ms);
}

inline nlohmann::json to_json(const VerifyRow& row) {
  nlohmann::json j;
  if (row.report) {
    j = to_json(*row.report);
  } else {
    const std::string tag = row.status == CellStatus::skipped ? "skipped" : "error";
    j = {{"n", row.n}, {"p", row.p}, {"r", row.r}, {"K", kvalue_to_json(row.k)}, {"M", tag}};
    if (row.status == CellStatus::error) j["error"] = row.error;
  }
  j["states_expanded"] = row.report ? row.report->states_expanded : 0;
  j["ms"] = row.ms;
  return j;
}

}  // namespace hanoi
