#pragma once

// Structural analysis of optimal solutions.
//
// A solution S between distinct constant states is cut at the first move of
// the largest disk n: S = P + psi + Q. The state ending P (just before psi)
// is the middle state mu. The base of S is B(S) = n - k - 1, where k is the
// largest disk below n-1 that does not share disk n-1's peg at mu (k = 0 if
// every smaller disk does).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hanoi/constructor.hpp"
#include "hanoi/core.hpp"
#include "hanoi/numerics.hpp"
#include "hanoi/oracle.hpp"

namespace hanoi {

struct DemolishingDecomposition {
  Path prefix;
  Move pivot;
  Path suffix;

  const State& middle_state() const noexcept { return prefix.back(); }

  // prefix + pivot: the demolishing sequence proper.
  Path demolishing_sequence() const {
    Path out = prefix;
    out.push(pivot);
    return out;
  }
};

inline DemolishingDecomposition decompose(const Path& solution) {
  const Disk n = solution.disks();
  const auto& moves = solution.moves();
  std::size_t i = 0;
  while (i < moves.size() && moves[i].disk != n) ++i;
  if (i == moves.size()) throw InvalidArgument("the largest disk never moves in this path");
  const auto& states = solution.states();
  return {Path::from_states(std::span<const State>(states.data(), i + 1)), moves[i],
          Path::from_states(std::span<const State>(states.data() + i + 1, states.size() - i - 1))};
}

// `path` run backwards with pegs a and b exchanged in every state.
inline Path reflect(const Path& path, Peg a, Peg b) {
  std::vector<State> states;
  states.reserve(path.states().size());
  for (auto it = path.states().rbegin(); it != path.states().rend(); ++it)
    states.push_back(it->with_pegs_swapped(a, b));
  return Path::from_states(states);
}

struct BaseReport {
  State middle;
  Disk k = 0;
  unsigned base = 0;
  unsigned r = 0;
  // True when every disk 1..n-2 sits with n-1 at mu, so k defaulted to 0.
  bool k_defaulted = false;
};

inline BaseReport base_of(const Path& solution) {
  const unsigned n = solution.disks();
  if (n < 2) throw InvalidArgument("the base needs at least two disks");
  auto parts = decompose(solution);
  const State& mu = parts.middle_state();
  const Peg top_peg = mu.peg_of(n - 1);
  Disk k = 0;
  for (Disk d = n - 1; d >= 1; --d) {
    if (mu.peg_of(d) != top_peg) {
      k = d;
      break;
    }
  }
  return {mu, k, n - k - 1, find_r(n, solution.pegs()), k == 0};
}

struct Theorem31Report {
  unsigned n = 0;
  unsigned p = 0;
  std::uint64_t m = 0;
  std::uint64_t demolish_len = 0;
  std::uint64_t states_expanded = 0;

  bool ok() const noexcept { return m == 2 * demolish_len + 1; }
};

// M(n,p) against 2 D + 1, both by exhaustive search.
inline Theorem31Report check_theorem_3_1(unsigned n, unsigned p, const SearchOptions& options = {}) {
  const auto m = m_number(n, p, options);
  const auto d = minimal_demolishing_length(n, p, options);
  return {n, p, m.distance, d.distance, m.states_expanded + d.states_expanded};
}

struct StackViolation {
  std::size_t state_index;
  Disk disk;
};

struct Theorem32Report {
  bool vacuous = true;
  std::size_t stacks = 0;
  Disk j1 = 0;
  Peg j1_peg = 0;
  std::vector<StackViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// `sequence` ends with the move of disk n to an empty peg. Finds the bottom
// disks n, n-1, j1 < ... of the final stacks and checks that no disk larger
// than j1 ever stands on j1's final peg.
inline Theorem32Report check_theorem_3_2(const Path& sequence) {
  const unsigned n = sequence.disks();
  if (sequence.length() == 0 || sequence.moves().back().disk != n ||
      sequence.moves().back().onto != kInfinity)
    throw InvalidArgument("not a demolishing sequence: last move must take disk n to an empty peg");
  Theorem32Report report;
  const State& end = sequence.back();
  std::vector<Disk> bottoms;
  for (Peg peg = 1; peg <= end.pegs(); ++peg) {
    const auto stack = end.stack(peg);
    if (!stack.empty()) bottoms.push_back(stack.front());
  }
  report.stacks = bottoms.size();
  if (bottoms.size() < 3) return report;
  Disk j1 = kInfinity;
  for (Disk b : bottoms)
    if (b + 1 < n && b < j1) j1 = b;
  report.vacuous = false;
  report.j1 = j1;
  report.j1_peg = end.peg_of(j1);
  for (std::size_t i = 0; i < sequence.states().size(); ++i) {
    const State& s = sequence.states()[i];
    for (Disk y = j1 + 1; y <= n; ++y)
      if (s.peg_of(y) == report.j1_peg) report.violations.push_back({i, y});
  }
  return report;
}

struct Theorem41Sample {
  std::uint64_t length = 0;
  unsigned base = 0;
  bool implication_ok = true;  // B >= r implies |S| >= K
};

struct Theorem41Report {
  unsigned n = 0;
  unsigned p = 0;
  unsigned r = 0;
  KValue k;
  std::uint64_t m = 0;
  std::vector<Theorem41Sample> samples;
  std::map<unsigned, std::size_t> base_histogram;

  bool conjecture_holds() const { return KValue(m) == k; }
  const char* conjecture_status() const { return conjecture_holds() ? "verified" : "counterexample"; }
  bool ok() const {
    for (const auto& s : samples)
      if (!s.implication_ok) return false;
    return true;
  }
};

namespace detail {

inline Theorem41Sample theorem41_sample(const Path& solution, unsigned r, const KValue& k) {
  Theorem41Sample out;
  out.length = solution.length();
  if (solution.disks() < 2) return out;  // no base; |S| = 1 = K
  out.base = base_of(solution).base;
  out.implication_ok = out.base < r || KValue(out.length) >= k;
  return out;
}

}  // namespace detail

inline Theorem41Report check_theorem_4_1(unsigned n, unsigned p, std::size_t sample_limit,
                                         const SearchOptions& options = {}) {
  Theorem41Report report;
  report.n = n;
  report.p = p;
  report.r = find_r(n, p);
  report.k = k_closed(n, p);
  report.m = m_number(n, p, options).distance;
  for (const auto& s : optimal_solutions_sample(n, p, sample_limit, options)) {
    report.samples.push_back(detail::theorem41_sample(s, report.r, report.k));
    if (n >= 2) ++report.base_histogram[report.samples.back().base];
  }
  return report;
}

// Everything known about one (n, p) instance.
struct InstanceReport {
  unsigned n = 0;
  unsigned p = 0;
  unsigned r = 0;
  KValue k;
  std::uint64_t m = 0;
  std::uint64_t demolish_len = 0;
  std::size_t samples = 0;
  bool theorem31_ok = true;
  bool theorem32_ok = true;
  bool theorem41_ok = true;
  bool balance_ok = true;     // |P| = |Q| for every sample
  bool reflection_ok = true;  // P + psi + reflect(P) is a solution of length M
  std::size_t theorem32_checked = 0;
  std::size_t theorem32_violations = 0;
  std::size_t k_defaulted = 0;  // samples whose base used the k = 0 convention
  std::map<unsigned, std::size_t> base_histogram;
  std::uint64_t states_expanded = 0;

  bool conjecture_holds() const { return KValue(m) == k; }
  bool ok() const {
    return conjecture_holds() && theorem31_ok && theorem32_ok && theorem41_ok && balance_ok && reflection_ok;
  }
};

inline InstanceReport analyze_instance(unsigned n, unsigned p, std::size_t sample_limit,
                                       const SearchOptions& options = {}) {
  InstanceReport report;
  report.n = n;
  report.p = p;
  report.r = find_r(n, p);
  report.k = k_closed(n, p);
  const auto t31 = check_theorem_3_1(n, p, options);
  report.m = t31.m;
  report.demolish_len = t31.demolish_len;
  report.theorem31_ok = t31.ok();
  report.states_expanded = t31.states_expanded;

  const auto sample = optimal_solutions_sample(n, p, sample_limit, options);
  report.samples = sample.size();
  for (const auto& s : sample) {
    const auto parts = decompose(s);
    if (parts.prefix.length() != parts.suffix.length()) report.balance_ok = false;

    const Peg target = parts.pivot.to;
    const Path mirrored =
        concat_paths(parts.demolishing_sequence(), reflect(parts.prefix, parts.pivot.from, target));
    if (!validate_solution(mirrored, n, p, 1, target).ok() || mirrored.length() != 2 * parts.prefix.length() + 1 ||
        (parts.prefix.length() == report.demolish_len && mirrored.length() != report.m))
      report.reflection_ok = false;

    const auto t32 = check_theorem_3_2(parts.demolishing_sequence());
    if (!t32.vacuous) ++report.theorem32_checked;
    report.theorem32_violations += t32.violations.size();
    if (!t32.ok()) report.theorem32_ok = false;

    const auto t41 = detail::theorem41_sample(s, report.r, report.k);
    if (!t41.implication_ok) report.theorem41_ok = false;
    if (n >= 2) {
      ++report.base_histogram[t41.base];
      if (base_of(s).k_defaulted) ++report.k_defaulted;
    }
  }
  return report;
}

inline nlohmann::json kvalue_to_json(const KValue& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline nlohmann::json to_json(const InstanceReport& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [base, count] : r.base_histogram) hist[std::to_string(base)] = count;
  return {{"n", r.n},
          {"p", r.p},
          {"r", r.r},
          {"K", kvalue_to_json(r.k)},
          {"M", r.m},
          {"match", r.conjecture_holds()},
          {"demolish_len", r.demolish_len},
          {"theorem31_ok", r.theorem31_ok},
          {"theorem32_ok", r.theorem32_ok},
          {"theorem41_ok", r.theorem41_ok},
          {"balance_ok", r.balance_ok},
          {"reflection_ok", r.reflection_ok},
          {"samples", r.samples},
          {"theorem32_checked", r.theorem32_checked},
          {"k_defaulted", r.k_defaulted},
          {"base_histogram", std::move(hist)}};
}

}  // namespace hanoi
