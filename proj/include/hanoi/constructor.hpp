#pragma once

// Explicit Frame-Stewart solutions.
//
// For p >= 4 and n >= 2 the tower moves in three phases:
//   1. disks 1..k go from the initial peg I to a middle peg M on all pegs,
//   2. disks k+1..n go from I to the final peg F on every peg except M,
//   3. disks 1..k go from M to F on all pegs.
// p = 3 is the classical recursion and a single disk is a single move. The
// split k is the smallest minimizer of the recurrence, so every solution has
// exactly K(n,p) moves.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hanoi/core.hpp"
#include "hanoi/errors.hpp"
#include "hanoi/numerics.hpp"

namespace hanoi {

// Lowest-numbered peg in 1..p other than `initial` and `final`.
inline Peg choose_middle_peg(unsigned p, Peg initial, Peg final) {
  if (p < 3) throw InvalidArgument("peg count must be at least 3");
  for (Peg peg = 1; peg <= p; ++peg)
    if (peg != initial && peg != final) return peg;
  throw InvalidPegError("no middle peg available");
}

// Shape of the recursion for `disks` disks on `pegs` pegs. Phases 1 and 3
// share the `lower` child.
struct PlanNode {
  std::uint64_t disks = 0;
  unsigned pegs = 0;
  std::uint64_t split = 0;  // k; 0 on leaves
  KValue length = 0;
  std::shared_ptr<const PlanNode> lower;  // (k, pegs)
  std::shared_ptr<const PlanNode> upper;  // (disks - k, pegs - 1)

  bool leaf() const noexcept { return split == 0; }
};

class ConstructionPlan {
public:
  ConstructionPlan(std::uint64_t n, unsigned p, Peg initial, Peg final)
      : n_(n), p_(p), initial_(initial), final_(final) {
    validate_problem(n, p);
    if (initial < 1 || initial > p || final < 1 || final > p)
      throw InvalidPegError("peg out of range 1.." + std::to_string(p));
    if (initial == final) throw InvalidPegError("initial and final peg must differ");
    if (p > kMaxPegs) throw InvalidArgument("too many pegs");
    table_ = std::make_shared<FrameStewartTable>(n, p);
    std::vector<std::vector<std::shared_ptr<const PlanNode>>> memo(p + 1);
    root_ = build(n, p, memo);
  }

  std::uint64_t disks() const noexcept { return n_; }
  unsigned pegs() const noexcept { return p_; }
  Peg initial_peg() const noexcept { return initial_; }
  Peg final_peg() const noexcept { return final_; }
  const PlanNode& root() const noexcept { return *root_; }
  const FrameStewartTable& table() const noexcept { return *table_; }

  // Throws OverflowError when the move count exceeds 64 bits.
  std::uint64_t length() const { return to_u64(root_->length); }

private:
  using Memo = std::vector<std::vector<std::shared_ptr<const PlanNode>>>;

  std::shared_ptr<const PlanNode> build(std::uint64_t disks, unsigned pegs, Memo& memo) {
    auto& row = memo[pegs];
    if (row.size() <= disks) row.resize(disks + 1);
    if (row[disks]) return row[disks];
    auto node = std::make_shared<PlanNode>();
    node->disks = disks;
    node->pegs = pegs;
    node->length = table_->k(disks, pegs);
    if (pegs > 3 && disks > 1) {
      node->split = table_->optimal_split(disks, pegs).k;
      node->lower = build(node->split, pegs, memo);
      node->upper = build(disks - node->split, pegs - 1, memo);
    }
    row[disks] = node;
    return node;
  }

  std::uint64_t n_;
  unsigned p_;
  Peg initial_;
  Peg final_;
  std::shared_ptr<FrameStewartTable> table_;
  std::shared_ptr<const PlanNode> root_;
};

namespace detail {

// Per-peg stacks used to attach Demontis triples to streamed moves in O(1).
class StackTracker {
public:
  StackTracker(std::uint64_t n, unsigned p, Peg initial) : stacks_(p + 1) {
    auto& s = stacks_[initial];
    s.reserve(n);
    for (std::uint64_t d = n; d >= 1; --d) s.push_back(static_cast<Disk>(d));
  }

  Move move(Disk d, Peg from, Peg to) {
    auto& src = stacks_[from];
    auto& dst = stacks_[to];
    if (src.empty() || src.back() != d || (!dst.empty() && dst.back() < d))
      throw IllegalMoveError("construction produced an illegal move");
    src.pop_back();
    Move m{d, from, to, src.empty() ? kInfinity : src.back(), dst.empty() ? kInfinity : dst.back()};
    dst.push_back(d);
    return m;
  }

private:
  std::vector<std::vector<Disk>> stacks_;
};

template <class Sink>
void emit_classical(std::uint64_t count, Disk offset, Peg from, Peg to, Peg via,
                    StackTracker& tracker, Sink& sink) {
  if (count == 0) return;
  emit_classical(count - 1, offset, from, via, to, tracker, sink);
  sink(tracker.move(static_cast<Disk>(offset + count), from, to));
  emit_classical(count - 1, offset, via, to, from, tracker, sink);
}

// Moves disks offset+1..offset+node.disks from `from` to `to` using `pegs`.
template <class Sink>
void emit(const PlanNode& node, Disk offset, const std::vector<Peg>& pegs, Peg from, Peg to,
          StackTracker& tracker, Sink& sink) {
  if (node.disks == 0) return;
  if (node.disks == 1) {
    sink(tracker.move(offset + 1, from, to));
    return;
  }
  Peg middle = 0;
  for (Peg peg : pegs) {
    if (peg != from && peg != to) {
      middle = peg;
      break;
    }
  }
  if (node.pegs == 3) {
    emit_classical(node.disks, offset, from, to, middle, tracker, sink);
    return;
  }
  std::vector<Peg> without_middle;
  without_middle.reserve(pegs.size() - 1);
  for (Peg peg : pegs)
    if (peg != middle) without_middle.push_back(peg);
  const auto k = static_cast<Disk>(node.split);
  emit(*node.lower, offset, pegs, from, middle, tracker, sink);
  emit(*node.upper, offset + k, without_middle, from, to, tracker, sink);
  emit(*node.lower, offset, pegs, middle, to, tracker, sink);
}

}  // namespace detail

// Streams the moves of the plan to `sink(const Move&)`; returns the count.
template <class Sink>
std::uint64_t stream_solution(const ConstructionPlan& plan, Sink&& sink) {
  std::vector<Peg> pegs;
  for (Peg peg = 1; peg <= plan.pegs(); ++peg) pegs.push_back(peg);
  detail::StackTracker tracker(plan.disks(), plan.pegs(), plan.initial_peg());
  std::uint64_t count = 0;
  auto counting = [&](const Move& m) {
    ++count;
    sink(m);
  };
  detail::emit(plan.root(), 0, pegs, plan.initial_peg(), plan.final_peg(), tracker, counting);
  return count;
}

template <class Sink>
std::uint64_t stream_solution(std::uint64_t n, unsigned p, Peg initial, Peg final, Sink&& sink) {
  const ConstructionPlan plan(n, p, initial, final);
  plan.length();  // refuse up front when the count cannot be represented
  return stream_solution(plan, std::forward<Sink>(sink));
}

// Materialized solution; keep n small, the path stores K(n,p)+1 states.
inline Path build_solution(std::uint64_t n, unsigned p, Peg initial, Peg final) {
  if (n > std::numeric_limits<unsigned>::max()) throw InvalidArgument("too many disks");
  Path path(State::constant(static_cast<unsigned>(n), p, initial));
  stream_solution(n, p, initial, final, [&](const Move& m) { path.push(m); });
  return path;
}

enum class ViolationKind { bad_start, bad_end, illegal_step, size_mismatch };

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::bad_start: return "bad_start";
    case ViolationKind::bad_end: return "bad_end";
    case ViolationKind::illegal_step: return "illegal_step";
    case ViolationKind::size_mismatch: return "size_mismatch";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::size_t step;  // move index for illegal_step, state index otherwise
  std::string detail;
};

struct ValidationReport {
  std::uint64_t length = 0;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Incremental validator: feed moves one at a time, then finish().
class SolutionValidator {
public:
  SolutionValidator(std::uint64_t n, unsigned p, Peg initial, Peg final)
      : n_(n), p_(p), final_(final), stacks_(p + 1) {
    if (initial < 1 || initial > p || final < 1 || final > p || initial == final)
      throw InvalidPegError("invalid initial/final pegs");
    for (std::uint64_t d = n; d >= 1; --d) stacks_[initial].push_back(static_cast<Disk>(d));
  }

  void feed(const Move& m) {
    const std::size_t step = length_++;
    auto fail = [&](std::string why) {
      report_.violations.push_back({ViolationKind::illegal_step, step, std::move(why)});
    };
    if (m.from < 1 || m.from > p_ || m.to < 1 || m.to > p_ || m.from == m.to) {
      fail("bad pegs");
      return;
    }
    auto& src = stacks_[m.from];
    auto& dst = stacks_[m.to];
    if (src.empty() || src.back() != m.disk) {
      fail("disk " + std::to_string(m.disk) + " is not on top of peg " + std::to_string(m.from));
      return;
    }
    if (!dst.empty() && dst.back() < m.disk) {
      fail("disk " + std::to_string(m.disk) + " placed on smaller disk " + std::to_string(dst.back()));
      return;
    }
    src.pop_back();
    dst.push_back(m.disk);
  }

  ValidationReport finish() {
    report_.length = length_;
    for (Peg peg = 1; peg <= p_; ++peg) {
      if (peg == final_ ? stacks_[peg].size() != n_ : !stacks_[peg].empty()) {
        report_.violations.push_back(
            {ViolationKind::bad_end, length_, "final state is not constant on peg " + std::to_string(final_)});
        break;
      }
    }
    return report_;
  }

private:
  std::uint64_t n_;
  unsigned p_;
  Peg final_;
  std::vector<std::vector<Disk>> stacks_;
  std::uint64_t length_ = 0;
  ValidationReport report_;
};

// Checks a raw state sequence; every defect is itemized, nothing throws.
inline ValidationReport validate_solution(std::span<const State> states, std::uint64_t n, unsigned p,
                                          Peg initial, Peg final) {
  ValidationReport report;
  if (states.empty()) {
    report.violations.push_back({ViolationKind::bad_start, 0, "empty path"});
    return report;
  }
  report.length = states.size() - 1;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].disks() != n || states[i].pegs() != p) {
      report.violations.push_back({ViolationKind::size_mismatch, i, "state has the wrong shape"});
      return report;
    }
  }
  if (!states.front().is_constant_on(initial))
    report.violations.push_back(
        {ViolationKind::bad_start, 0, "first state is not constant on peg " + std::to_string(initial)});
  for (std::size_t i = 1; i < states.size(); ++i) {
    if (!move_between(states[i - 1], states[i]))
      report.violations.push_back({ViolationKind::illegal_step, i - 1, "not a single legal move"});
  }
  if (!states.back().is_constant_on(final))
    report.violations.push_back({ViolationKind::bad_end, states.size() - 1,
                                 "last state is not constant on peg " + std::to_string(final)});
  return report;
}

inline ValidationReport validate_solution(const Path& path, std::uint64_t n, unsigned p, Peg initial,
                                          Peg final) {
  return validate_solution(std::span<const State>(path.states()), n, p, initial, final);
}

}  // namespace hanoi
