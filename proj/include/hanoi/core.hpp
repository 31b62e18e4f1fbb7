#pragma once

// States, moves and paths of the generalized Tower of Hanoi.
//
// Disks are numbered 1 (smallest) to n, pegs 1 to p. A state assigns each
// disk to a peg; the order within a peg is forced by disk size, so nothing
// else is stored.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hanoi/errors.hpp"

namespace hanoi {

using Disk = unsigned;
using Peg = unsigned;

// "No disk" marker in Demontis triples: nothing below / empty destination.
inline constexpr Disk kInfinity = std::numeric_limits<Disk>::max();

// Largest peg count a State can hold (pegs are stored as bytes).
inline constexpr unsigned kMaxPegs = 256;

struct Problem {
  unsigned n = 1;
  unsigned p = 3;

  void validate() const;
};

inline void validate_problem(std::uint64_t n, unsigned p) {
  if (n < 1) throw InvalidArgument("disk count must be at least 1");
  if (p < 3) throw InvalidArgument("peg count must be at least 3");
}

inline void Problem::validate() const { validate_problem(n, p); }

class State {
public:
  // `assignment[d-1]` is the (1-based) peg of disk d.
  State(unsigned pegs, std::span<const Peg> assignment) : p_(pegs) {
    if (pegs < 1 || pegs > kMaxPegs) throw InvalidArgument("peg count out of range");
    pegs_.reserve(assignment.size());
    for (Peg peg : assignment) {
      if (peg < 1 || peg > pegs) throw InvalidPegError("peg " + std::to_string(peg) + " out of range");
      pegs_.push_back(static_cast<std::uint8_t>(peg - 1));
    }
  }
  State(unsigned pegs, std::initializer_list<Peg> assignment)
      : State(pegs, std::span<const Peg>(assignment.begin(), assignment.size())) {}

  static State constant(unsigned n, unsigned p, Peg peg) {
    std::vector<Peg> a(n, peg);
    return State(p, a);
  }

  unsigned disks() const noexcept { return static_cast<unsigned>(pegs_.size()); }
  unsigned pegs() const noexcept { return p_; }

  Peg peg_of(Disk d) const { return Peg{pegs_.at(d - 1)} + 1; }

  std::vector<Peg> assignment() const {
    std::vector<Peg> out;
    out.reserve(pegs_.size());
    for (auto z : pegs_) out.push_back(Peg{z} + 1);
    return out;
  }

  bool is_constant() const noexcept {
    return std::adjacent_find(pegs_.begin(), pegs_.end(), std::not_equal_to<>()) == pegs_.end();
  }
  bool is_constant_on(Peg peg) const noexcept {
    return std::all_of(pegs_.begin(), pegs_.end(), [&](auto z) { return Peg{z} + 1 == peg; });
  }

  // Smallest disk on `peg`, if any.
  std::optional<Disk> top_disk(Peg peg) const {
    check_peg(peg);
    for (Disk d = 1; d <= disks(); ++d)
      if (peg_of(d) == peg) return d;
    return std::nullopt;
  }

  // Disks on `peg`, bottom (largest) first.
  std::vector<Disk> stack(Peg peg) const {
    check_peg(peg);
    std::vector<Disk> out;
    for (Disk d = disks(); d >= 1; --d)
      if (peg_of(d) == peg) out.push_back(d);
    return out;
  }

  bool peg_empty(Peg peg) const { return !top_disk(peg).has_value(); }

  State with_disk_on(Disk d, Peg peg) const {
    check_peg(peg);
    State out = *this;
    out.pegs_.at(d - 1) = static_cast<std::uint8_t>(peg - 1);
    return out;
  }

  // Same state with pegs a and b exchanged.
  State with_pegs_swapped(Peg a, Peg b) const {
    check_peg(a);
    check_peg(b);
    State out = *this;
    for (auto& z : out.pegs_) {
      if (Peg{z} + 1 == a)
        z = static_cast<std::uint8_t>(b - 1);
      else if (Peg{z} + 1 == b)
        z = static_cast<std::uint8_t>(a - 1);
    }
    return out;
  }

  friend bool operator==(const State&, const State&) = default;

private:
  void check_peg(Peg peg) const {
    if (peg < 1 || peg > p_) throw InvalidPegError("peg " + std::to_string(peg) + " out of range");
  }

  unsigned p_;
  std::vector<std::uint8_t> pegs_;  // zero-based peg per disk
};

// Demontis triple (j, i, t): disk j leaves disk i (or an empty base, kInfinity)
// and lands on disk t (or an empty peg, kInfinity).
struct Triple {
  Disk disk = 0;
  Disk below = kInfinity;
  Disk onto = kInfinity;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct Move {
  Disk disk = 0;
  Peg from = 0;
  Peg to = 0;
  Disk below = kInfinity;
  Disk onto = kInfinity;

  Triple triple() const noexcept { return {disk, below, onto}; }
  Move reversed() const noexcept { return {disk, to, from, onto, below}; }

  friend bool operator==(const Move&, const Move&) = default;
};

// Smallest disk on `peg` that is larger than `d` (kInfinity if none).
inline Disk disk_below(const State& s, Disk d, Peg peg) {
  for (Disk e = d + 1; e <= s.disks(); ++e)
    if (s.peg_of(e) == peg) return e;
  return kInfinity;
}

inline std::optional<Disk> top_disk(const State& s, Peg peg) { return s.top_disk(peg); }

inline bool is_legal(const State& s, Disk d, Peg to) {
  if (d < 1 || d > s.disks() || to < 1 || to > s.pegs()) return false;
  const Peg from = s.peg_of(d);
  if (from == to) return false;
  if (s.top_disk(from) != d) return false;
  const auto dest = s.top_disk(to);
  return !dest || *dest > d;
}

// Builds the move of disk `d` to `to`, with its triple read off `s`.
inline Move make_move(const State& s, Disk d, Peg to) {
  if (!is_legal(s, d, to))
    throw IllegalMoveError("disk " + std::to_string(d) + " cannot move to peg " + std::to_string(to));
  const Peg from = s.peg_of(d);
  const auto dest = s.top_disk(to);
  return Move{d, from, to, disk_below(s, d, from), dest.value_or(kInfinity)};
}

inline bool is_legal(const State& s, const Move& m) {
  if (!is_legal(s, m.disk, m.to) || s.peg_of(m.disk) != m.from) return false;
  return make_move(s, m.disk, m.to) == m;
}

// All legal moves, source pegs ascending then destination pegs ascending.
inline std::vector<Move> legal_moves(const State& s) {
  std::vector<std::optional<Disk>> tops(s.pegs() + 1);
  for (Peg peg = 1; peg <= s.pegs(); ++peg) tops[peg] = s.top_disk(peg);
  std::vector<Move> out;
  for (Peg from = 1; from <= s.pegs(); ++from) {
    if (!tops[from]) continue;
    const Disk d = *tops[from];
    for (Peg to = 1; to <= s.pegs(); ++to) {
      if (to == from || (tops[to] && *tops[to] < d)) continue;
      out.push_back(Move{d, from, to, disk_below(s, d, from), tops[to].value_or(kInfinity)});
    }
  }
  return out;
}

inline State apply_move(const State& s, const Move& m) {
  if (!is_legal(s, m))
    throw IllegalMoveError("illegal move of disk " + std::to_string(m.disk) + " from peg " +
                           std::to_string(m.from) + " to peg " + std::to_string(m.to));
  return s.with_disk_on(m.disk, m.to);
}

// True when the triple of `m` and the pre-state `s` determine m's peg form:
// the disk sits on m.from, and the destination is t's peg (finite t) or an
// empty peg (t = inf).
inline bool triple_consistent(const State& s, const Move& m) {
  if (m.disk < 1 || m.disk > s.disks() || s.peg_of(m.disk) != m.from) return false;
  if (m.below != disk_below(s, m.disk, m.from)) return false;
  if (m.below != kInfinity && m.below <= m.disk) return false;
  if (m.onto == kInfinity) return s.peg_empty(m.to);
  return m.onto > m.disk && m.onto <= s.disks() && s.peg_of(m.onto) == m.to &&
         s.top_disk(m.to) == m.onto;
}

// The single move taking `a` to `b`, or nullopt when they are not adjacent.
inline std::optional<Move> move_between(const State& a, const State& b) {
  if (a.disks() != b.disks() || a.pegs() != b.pegs()) return std::nullopt;
  std::optional<Disk> changed;
  for (Disk d = 1; d <= a.disks(); ++d) {
    if (a.peg_of(d) == b.peg_of(d)) continue;
    if (changed) return std::nullopt;
    changed = d;
  }
  if (!changed || !is_legal(a, *changed, b.peg_of(*changed))) return std::nullopt;
  return make_move(a, *changed, b.peg_of(*changed));
}

// Sorted set of disk numbers.
class DiskSet {
public:
  DiskSet() = default;
  DiskSet(std::initializer_list<Disk> disks) : disks_(disks) { normalize(); }
  explicit DiskSet(std::vector<Disk> disks) : disks_(std::move(disks)) { normalize(); }

  // Disks first..last inclusive (empty when last < first).
  static DiskSet range(Disk first, Disk last) {
    DiskSet out;
    for (Disk d = first; d <= last && d != 0; ++d) out.disks_.push_back(d);
    return out;
  }
  static DiskSet all(unsigned n) { return range(1, n); }

  bool contains(Disk d) const { return std::binary_search(disks_.begin(), disks_.end(), d); }
  bool empty() const noexcept { return disks_.empty(); }
  std::size_t size() const noexcept { return disks_.size(); }
  const std::vector<Disk>& disks() const noexcept { return disks_; }

  DiskSet complement(unsigned n) const {
    DiskSet out;
    for (Disk d = 1; d <= n; ++d)
      if (!contains(d)) out.disks_.push_back(d);
    return out;
  }

  friend bool operator==(const DiskSet&, const DiskSet&) = default;

private:
  void normalize() {
    std::sort(disks_.begin(), disks_.end());
    disks_.erase(std::unique(disks_.begin(), disks_.end()), disks_.end());
  }

  std::vector<Disk> disks_;
};

// A nonempty sequence of states joined by legal moves.
class Path {
public:
  explicit Path(State initial) { states_.push_back(std::move(initial)); }

  // Throws IllegalMoveError naming the first step that is not a legal move.
  static Path from_states(std::span<const State> states) {
    if (states.empty()) throw InvalidArgument("a path needs at least one state");
    Path out(states.front());
    for (std::size_t i = 1; i < states.size(); ++i) {
      auto m = move_between(states[i - 1], states[i]);
      if (!m) throw IllegalMoveError("step " + std::to_string(i - 1) + " is not a legal move");
      out.states_.push_back(states[i]);
      out.moves_.push_back(*m);
    }
    return out;
  }

  static Path from_moves(State initial, std::span<const Move> moves) {
    Path out(std::move(initial));
    for (const auto& m : moves) out.push(m);
    return out;
  }

  void push(const Move& m) {
    states_.push_back(apply_move(states_.back(), m));
    moves_.push_back(m);
  }
  void push(Disk d, Peg to) { push(make_move(states_.back(), d, to)); }

  std::size_t length() const noexcept { return moves_.size(); }
  const State& front() const noexcept { return states_.front(); }
  const State& back() const noexcept { return states_.back(); }
  const std::vector<State>& states() const noexcept { return states_; }
  const std::vector<Move>& moves() const noexcept { return moves_; }
  unsigned disks() const noexcept { return front().disks(); }
  unsigned pegs() const noexcept { return front().pegs(); }

  friend bool operator==(const Path& a, const Path& b) { return a.states_ == b.states_; }

private:
  std::vector<State> states_;
  std::vector<Move> moves_;
};

inline Path concat_paths(const Path& first, const Path& second) {
  if (!(first.back() == second.front()))
    throw PathMismatchError("junction states of concatenated paths differ");
  Path out = first;
  for (const auto& m : second.moves()) out.push(m);
  return out;
}

// Number of moves in `path` whose disk lies in `disks`.
inline std::size_t count_moves(const Path& path, const DiskSet& disks) {
  return static_cast<std::size_t>(std::count_if(path.moves().begin(), path.moves().end(),
                                                [&](const Move& m) { return disks.contains(m.disk); }));
}

// Restriction of `path` to `disks`: the other disks are erased and repeated
// consecutive states collapsed. The kept disks are renumbered 1..|disks| in
// increasing order, so the result is a path of the (|disks|, p) problem.
inline Path restrict_to(const Path& path, const DiskSet& disks) {
  if (disks.empty()) throw InvalidArgument("restriction needs a nonempty disk set");
  if (disks.disks().back() > path.disks()) throw InvalidArgument("restriction disk out of range");
  auto project = [&](const State& s) {
    std::vector<Peg> a;
    a.reserve(disks.size());
    for (Disk d : disks.disks()) a.push_back(s.peg_of(d));
    return State(s.pegs(), a);
  };
  std::vector<State> kept{project(path.front())};
  for (std::size_t i = 1; i < path.states().size(); ++i) {
    auto s = project(path.states()[i]);
    if (!(s == kept.back())) kept.push_back(std::move(s));
  }
  return Path::from_states(kept);
}

}  // namespace hanoi
