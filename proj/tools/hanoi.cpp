// hanoi: Frame-Stewart numbers, constructed solutions and exhaustive checks.
//
// Exit codes: 0 success, 1 check mismatch, 2 usage or overflow, 3 memory budget.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hanoi/hanoi.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  unsigned n = 1;
  unsigned p = 3;
  unsigned n_max = 8;
  unsigned p_min = 3;
  unsigned p_max = 4;
  hanoi::Peg from = 1;
  hanoi::Peg to = 2;
  std::string format = "text";
  std::optional<double> memory_gib;
  std::size_t samples = 16;
  unsigned jobs = 1;
  std::string out;
  std::string distance_table;

  hanoi::SearchOptions search() const {
    double gib = 2.0;
    if (const char* env = std::getenv("HANOI_MEMORY_GIB")) {
      try {
        gib = std::stod(env);
      } catch (const std::exception&) {
        throw hanoi::InvalidArgument("HANOI_MEMORY_GIB is not a number");
      }
    }
    if (memory_gib) gib = *memory_gib;
    if (gib <= 0) throw hanoi::InvalidArgument("memory budget must be positive");
    return {static_cast<std::uint64_t>(gib * static_cast<double>(std::uint64_t{1} << 30))};
  }
};

void mismatch_banner(const std::string& what) {
  std::cerr << "==================== MISMATCH ====================\n"
            << what << '\n'
            << "==================================================\n";
}

std::string gib(std::uint64_t bytes) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << static_cast<double>(bytes) / static_cast<double>(1ull << 30)
     << " GiB";
  return os.str();
}

// Writes to --out when given, stdout otherwise.
class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw hanoi::InvalidArgument("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

int cmd_k(const RunConfig& cfg) {
  const unsigned r = hanoi::find_r(cfg.n, cfg.p);
  const auto closed = hanoi::k_closed(cfg.n, cfg.p);
  const auto dp = hanoi::k_dp(cfg.n, cfg.p);
  std::optional<hanoi::KValue> delta;
  if (cfg.n >= 2) delta = hanoi::k_delta(cfg.n, cfg.p);
  if (cfg.format == "json") {
    nlohmann::json j = {{"n", cfg.n},
                        {"p", cfg.p},
                        {"r", r},
                        {"K", hanoi::kvalue_to_json(closed)},
                        {"K_dp", hanoi::kvalue_to_json(dp)}};
    j["delta"] = delta ? hanoi::kvalue_to_json(*delta) : nlohmann::json(nullptr);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n=" << cfg.n << " p=" << cfg.p << '\n'
              << "r=" << r << '\n'
              << "K=" << closed << '\n'
              << "K_dp=" << dp << '\n';
    if (delta) std::cout << "delta=" << *delta << '\n';
  }
  if (closed != dp) {
    mismatch_banner("closed form and recurrence disagree for n=" + std::to_string(cfg.n) +
                    " p=" + std::to_string(cfg.p));
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg) {
  const hanoi::ConstructionPlan plan(cfg.n, cfg.p, cfg.from, cfg.to);
  const std::uint64_t expected = plan.length();
  hanoi::SolutionValidator validator(cfg.n, cfg.p, cfg.from, cfg.to);
  Output out(cfg.out);
  auto& os = out.stream();
  const bool json = cfg.format == "json";
  bool first = true;
  if (json) {
    os << "{\"p\":" << cfg.p << ",\"initial\":" << nlohmann::json(std::vector<hanoi::Peg>(cfg.n, cfg.from)).dump()
       << ",\"moves\":[";
  }
  const auto count = hanoi::stream_solution(plan, [&](const hanoi::Move& m) {
    validator.feed(m);
    if (json) {
      os << (first ? "\n" : ",\n") << hanoi::move_to_json(m).dump();
      first = false;
    } else {
      os << hanoi::move_to_text(m) << '\n';
    }
  });
  const auto report = validator.finish();
  const bool valid = report.ok() && count == expected;
  if (json)
    os << "\n],\"length\":" << count << ",\"valid\":" << (valid ? "true" : "false") << "}\n";
  else
    os << "# length=" << count << " valid=" << (valid ? "true" : "false") << '\n';
  if (!valid) {
    mismatch_banner("constructed solution failed validation");
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg) {
  const auto options = cfg.search();
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = hanoi::m_number(cfg.n, cfg.p, options);
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  if (!cfg.distance_table.empty()) {
    std::ofstream file(cfg.distance_table, std::ios::binary);
    if (!file) throw hanoi::InvalidArgument("cannot open " + cfg.distance_table);
    hanoi::write_distance_table(file, hanoi::compute_distance_table(cfg.n, cfg.p, options));
  }
  if (cfg.format == "json") {
    std::cout << nlohmann::json{{"n", cfg.n},
                                {"p", cfg.p},
                                {"M", result.distance},
                                {"states_expanded", result.states_expanded},
                                {"peak_frontier", result.peak_frontier},
                                {"ms", ms}}
                     .dump()
              << '\n';
  } else {
    std::cout << "n=" << cfg.n << " p=" << cfg.p << '\n'
              << "M=" << result.distance << '\n'
              << "states_expanded=" << result.states_expanded << '\n'
              << "peak_frontier=" << result.peak_frontier << '\n'
              << "ms=" << ms << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.p_min < 3 || cfg.p_max < cfg.p_min || cfg.n_max < 1)
    throw hanoi::InvalidArgument("need n-max >= 1 and 3 <= p-min <= p-max");
  const auto options = cfg.search();
  struct Cell {
    unsigned n, p;
  };
  std::vector<Cell> cells;
  for (unsigned n = 1; n <= cfg.n_max; ++n)
    for (unsigned p = cfg.p_min; p <= cfg.p_max; ++p) cells.push_back({n, p});
  // Rows sorted by (n, p) regardless of the order cells finish in.
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.n != b.n ? a.n < b.n : a.p < b.p;
  });

  std::vector<hanoi::VerifyRow> rows(cells.size());
  const unsigned jobs = std::max(1u, cfg.jobs);
  for (std::size_t start = 0; start < cells.size(); start += jobs) {
    std::vector<std::future<hanoi::VerifyRow>> batch;
    for (std::size_t i = start; i < std::min(cells.size(), start + jobs); ++i)
      batch.push_back(std::async(std::launch::async, [&, i] {
        return hanoi::verify_cell(cells[i].n, cells[i].p, cfg.samples, options);
      }));
    for (std::size_t i = 0; i < batch.size(); ++i) rows[start + i] = batch[i].get();
  }

  Output out(cfg.out);
  auto& os = out.stream();
  if (cfg.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& row : rows) arr.push_back(hanoi::to_json(row));
    os << arr.dump(2) << '\n';
  } else {
    os << hanoi::kVerifyCsvHeader << '\n';
    for (const auto& row : rows) os << hanoi::to_csv(row) << '\n';
  }

  int status = kExitOk;
  for (const auto& row : rows) {
    if (row.passed()) continue;
    status = kExitMismatch;
    mismatch_banner("cell n=" + std::to_string(row.n) + " p=" + std::to_string(row.p) +
                    (row.status == hanoi::CellStatus::error ? " failed: " + row.error : " failed a check"));
  }
  return status;
}

int cmd_analyze(const RunConfig& cfg) {
  const auto options = cfg.search();
  const auto report = hanoi::analyze_instance(cfg.n, cfg.p, cfg.samples, options);
  auto j = hanoi::to_json(report);
  j["conjecture"] = report.conjecture_holds() ? "verified" : "counterexample";
  Output out(cfg.out);
  out.stream() << j.dump(2) << '\n';
  if (!report.ok()) {
    mismatch_banner("analysis check failed for n=" + std::to_string(cfg.n) + " p=" + std::to_string(cfg.p));
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Tower of Hanoi: Frame-Stewart numbers, solutions and exhaustive checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_np = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of disks")->required()->check(CLI::PositiveNumber);
    sub->add_option("--p", cfg.p, "number of pegs")->required()->check(CLI::Range(3u, hanoi::kMaxPegs));
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--memory-gib", cfg.memory_gib, "search memory budget in GiB (default 2, env HANOI_MEMORY_GIB)");
  };

  auto* k = app.add_subcommand("k", "level r, K(n,p) by closed form and recurrence, K(n,p)-K(n-1,p)");
  add_np(k);
  k->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* solve = app.add_subcommand("solve", "stream a Frame-Stewart solution");
  add_np(solve);
  solve->add_option("--from", cfg.from, "initial peg");
  solve->add_option("--to", cfg.to, "final peg");
  solve->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--out", cfg.out, "output file");

  auto* oracle = app.add_subcommand("oracle", "exact M(n,p) by exhaustive search");
  add_np(oracle);
  add_budget(oracle);
  oracle->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  oracle->add_option("--distance-table", cfg.distance_table, "write distances from the start state here");

  auto* verify = app.add_subcommand("verify", "sweep n and p, comparing M with K and checking the theorems");
  verify->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);
  verify->add_option("--p-max", cfg.p_max)->required()->check(CLI::Range(3u, hanoi::kMaxPegs));
  verify->add_option("--p-min", cfg.p_min)->check(CLI::Range(3u, hanoi::kMaxPegs));
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "csv", "json"}));
  verify->add_option("--out", cfg.out, "output file");
  verify->add_option("--samples", cfg.samples, "optimal solutions sampled per cell");
  verify->add_option("--jobs", cfg.jobs, "cells computed concurrently");
  add_budget(verify);

  auto* analyze = app.add_subcommand("analyze", "structural report on sampled optimal solutions (JSON)");
  add_np(analyze);
  analyze->add_option("--samples", cfg.samples, "optimal solutions sampled");
  analyze->add_option("--out", cfg.out, "output file");
  add_budget(analyze);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*k) return cmd_k(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*analyze) return cmd_analyze(cfg);
  } catch (const hanoi::BudgetExceededError& e) {
    std::cerr << "error: memory budget exceeded: " << e.what() << " (requires "
              << gib(e.required_bytes()) << ")\n";
    return kExitBudget;
  } catch (const hanoi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
