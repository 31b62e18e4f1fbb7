#pragma once

// Exhaustive shortest-path search over all p^n states.
//
// A state is packed as a base-p number whose digit d-1 is the zero-based peg
// of disk d, so the whole space is the dense range [0, p^n) and every label
// array is a flat vector indexed by code. Moves are reversible, so the state
// graph is undirected and BFS labels from either endpoint give exact
// distances.
//
// Neighbors are always generated with source pegs ascending and, for each
// source, destination pegs ascending; every reconstructed path and every
// sample depends only on that order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hanoi/core.hpp"
#include "hanoi/errors.hpp"

namespace hanoi {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{2} << 30;  // 2 GiB

// Two 32-bit label arrays plus frontier storage, per state.
inline constexpr std::uint64_t kBytesPerState = 16;

// Disk limit of the packed representation (3^41 > 2^64).
inline constexpr unsigned kMaxOracleDisks = 40;

struct SearchOptions {
  std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
};

enum class SearchMode { bidirectional, unidirectional };

struct PackedState {
  std::uint64_t code = 0;

  friend bool operator==(const PackedState&, const PackedState&) = default;
};

struct SearchResult {
  std::uint64_t distance = 0;
  std::optional<Path> path;
  std::uint64_t states_expanded = 0;
  std::uint64_t peak_frontier = 0;
};

// p^n, or nullopt when it does not fit in 64 bits.
inline std::optional<std::uint64_t> state_count(unsigned n, unsigned p) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / p) return std::nullopt;
    count *= p;
  }
  return count;
}

// Bytes the search over (n, p) needs; nullopt when not representable.
inline std::optional<std::uint64_t> required_bytes(unsigned n, unsigned p) {
  const auto count = state_count(n, p);
  if (!count || *count > std::numeric_limits<std::uint64_t>::max() / kBytesPerState) return std::nullopt;
  return *count * kBytesPerState;
}

inline bool within_budget(unsigned n, unsigned p, const SearchOptions& options) {
  const auto need = required_bytes(n, p);
  return need && *need <= options.memory_budget_bytes;
}

inline void check_budget(unsigned n, unsigned p, const SearchOptions& options) {
  validate_problem(n, p);
  if (within_budget(n, p, options)) return;
  const auto need = required_bytes(n, p);
  const std::uint64_t shown = need.value_or(std::numeric_limits<std::uint64_t>::max());
  throw BudgetExceededError(
      shown, options.memory_budget_bytes,
      "search over " + std::to_string(p) + "^" + std::to_string(n) + " states needs " +
          (need ? std::to_string(*need) + " bytes" : std::string("more than 2^64 bytes")) +
          ", budget is " + std::to_string(options.memory_budget_bytes) + " bytes");
}

class StateSpace {
public:
  StateSpace(unsigned n, unsigned p) : n_(n), p_(p) {
    validate_problem(n, p);
    if (n > kMaxOracleDisks || p > kMaxPegs) throw RangeError("state space too large to pack");
    const auto count = state_count(n, p);
    if (!count) throw RangeError("p^n does not fit in 64 bits");
    size_ = *count;
    weight_.resize(n);
    std::uint64_t w = 1;
    for (unsigned d = 0; d < n; ++d, w *= p) weight_[d] = w;
  }

  unsigned disks() const noexcept { return n_; }
  unsigned pegs() const noexcept { return p_; }
  std::uint64_t size() const noexcept { return size_; }

  PackedState encode(const State& s) const {
    if (s.disks() != n_ || s.pegs() != p_) throw InvalidArgument("state does not match the space");
    std::uint64_t code = 0;
    for (Disk d = 1; d <= n_; ++d) code += (s.peg_of(d) - 1) * weight_[d - 1];
    return {code};
  }

  State decode(PackedState c) const {
    if (c.code >= size_) throw RangeError("code " + std::to_string(c.code) + " >= p^n");
    std::vector<Peg> a(n_);
    std::uint64_t code = c.code;
    for (unsigned d = 0; d < n_; ++d) {
      a[d] = static_cast<Peg>(code % p_) + 1;
      code /= p_;
    }
    return State(p_, a);
  }

  // Zero-based pegs of each disk (index d-1).
  void digits(std::uint64_t code, std::array<std::uint8_t, kMaxOracleDisks>& out) const {
    for (unsigned d = 0; d < n_; ++d) {
      out[d] = static_cast<std::uint8_t>(code % p_);
      code /= p_;
    }
  }

  // Calls f(neighbor_code, disk, from, to) with 1-based disk and pegs.
  // With move_largest == false, moves of disk n are skipped.
  template <class F>
  void for_each_neighbor(std::uint64_t code, F&& f, bool move_largest = true) const {
    std::array<std::uint8_t, kMaxOracleDisks> peg;
    digits(code, peg);
    std::array<Disk, kMaxPegs> top;
    std::fill_n(top.begin(), p_, Disk{0});
    for (unsigned d = n_; d >= 1; --d) top[peg[d - 1]] = d;
    for (unsigned src = 0; src < p_; ++src) {
      const Disk d = top[src];
      if (d == 0 || (!move_largest && d == n_)) continue;
      const std::uint64_t base = code - src * weight_[d - 1];
      for (unsigned dst = 0; dst < p_; ++dst) {
        if (dst == src || (top[dst] != 0 && top[dst] < d)) continue;
        f(base + dst * weight_[d - 1], d, Peg{src + 1}, Peg{dst + 1});
      }
    }
  }

  Path path_of(const std::vector<std::uint64_t>& codes) const {
    std::vector<State> states;
    states.reserve(codes.size());
    for (auto c : codes) states.push_back(decode({c}));
    return Path::from_states(states);
  }

private:
  unsigned n_;
  unsigned p_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> weight_;  // p^(d-1)
};

inline PackedState encode(const State& s) { return StateSpace(s.disks(), s.pegs()).encode(s); }
inline State decode(PackedState c, unsigned n, unsigned p) { return StateSpace(n, p).decode(c); }

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

namespace detail {

// Walks from `code` to the label-0 state, each step taking the first
// neighbor whose label is one less.
inline std::vector<std::uint64_t> walk_down(const StateSpace& space, const std::vector<std::uint32_t>& label,
                                            std::uint64_t code, bool move_largest = true) {
  std::vector<std::uint64_t> out{code};
  while (label[code] != 0) {
    const std::uint32_t want = label[code] - 1;
    std::uint64_t next = code;
    bool found = false;
    space.for_each_neighbor(
        code,
        [&](std::uint64_t v, Disk, Peg, Peg) {
          if (!found && label[v] == want) {
            next = v;
            found = true;
          }
        },
        move_largest);
    if (!found) throw Error("inconsistent BFS labels");
    code = next;
    out.push_back(code);
  }
  return out;
}

struct Frontier {
  std::vector<std::uint32_t> label;
  std::vector<std::uint64_t> current;
  std::vector<std::uint64_t> next;
  std::uint32_t depth = 0;

  Frontier(std::uint64_t size, std::uint64_t source) : label(size, kUnreached), current{source} {
    label[source] = 0;
  }
};

}  // namespace detail

// BFS labels from `source` over the whole space.
inline std::vector<std::uint32_t> distance_labels(const StateSpace& space, std::uint64_t source,
                                                  bool move_largest = true,
                                                  std::uint64_t* expanded = nullptr,
                                                  std::uint64_t* peak = nullptr) {
  detail::Frontier f(space.size(), source);
  std::uint64_t count = 0;
  std::uint64_t widest = 1;
  while (!f.current.empty()) {
    f.next.clear();
    for (auto u : f.current) {
      ++count;
      space.for_each_neighbor(
          u,
          [&](std::uint64_t v, Disk, Peg, Peg) {
            if (f.label[v] == kUnreached) {
              f.label[v] = f.depth + 1;
              f.next.push_back(v);
            }
          },
          move_largest);
    }
    ++f.depth;
    f.current.swap(f.next);
    widest = std::max<std::uint64_t>(widest, f.current.size());
  }
  if (expanded) *expanded = count;
  if (peak) *peak = widest;
  return f.label;
}

inline SearchResult bfs_distance(const State& start, const State& goal, bool want_path,
                                 const SearchOptions& options = {},
                                 SearchMode mode = SearchMode::bidirectional) {
  if (start.disks() != goal.disks() || start.pegs() != goal.pegs())
    throw InvalidArgument("endpoints belong to different problems");
  check_budget(start.disks(), start.pegs(), options);
  const StateSpace space(start.disks(), start.pegs());
  const std::uint64_t s = space.encode(start).code;
  const std::uint64_t g = space.encode(goal).code;

  SearchResult result;
  result.peak_frontier = 1;
  if (s == g) {
    if (want_path) result.path = Path(start);
    return result;
  }

  if (mode == SearchMode::unidirectional) {
    detail::Frontier f(space.size(), s);
    while (f.label[g] == kUnreached) {
      if (f.current.empty()) throw Error("goal unreachable");
      f.next.clear();
      for (auto u : f.current) {
        ++result.states_expanded;
        space.for_each_neighbor(u, [&](std::uint64_t v, Disk, Peg, Peg) {
          if (f.label[v] == kUnreached) {
            f.label[v] = f.depth + 1;
            f.next.push_back(v);
          }
        });
      }
      ++f.depth;
      f.current.swap(f.next);
      result.peak_frontier = std::max<std::uint64_t>(result.peak_frontier, f.current.size());
    }
    result.distance = f.label[g];
    if (want_path) {
      auto codes = detail::walk_down(space, f.label, g);
      std::reverse(codes.begin(), codes.end());
      result.path = space.path_of(codes);
    }
    return result;
  }

  // Layer-synchronous search from both ends, always growing the smaller
  // frontier. The first state labelled by both sides lies on a shortest path:
  // before that layer the two labelled sets were disjoint, which bounds the
  // distance from below by exactly the length found.
  detail::Frontier fwd(space.size(), s);
  detail::Frontier bwd(space.size(), g);
  std::optional<std::uint64_t> meet;
  while (!meet) {
    const bool forward = fwd.current.size() <= bwd.current.size();
    auto& own = forward ? fwd : bwd;
    const auto& other = forward ? bwd : fwd;
    if (own.current.empty()) throw Error("goal unreachable");
    own.next.clear();
    for (auto u : own.current) {
      ++result.states_expanded;
      space.for_each_neighbor(u, [&](std::uint64_t v, Disk, Peg, Peg) {
        if (own.label[v] != kUnreached) return;
        own.label[v] = own.depth + 1;
        own.next.push_back(v);
        if (!meet && other.label[v] != kUnreached) meet = v;
      });
    }
    ++own.depth;
    own.current.swap(own.next);
    result.peak_frontier = std::max<std::uint64_t>(result.peak_frontier, own.current.size());
  }
  result.distance = std::uint64_t{fwd.label[*meet]} + bwd.label[*meet];
  if (want_path) {
    auto head = detail::walk_down(space, fwd.label, *meet);
    std::reverse(head.begin(), head.end());
    const auto tail = detail::walk_down(space, bwd.label, *meet);
    head.insert(head.end(), tail.begin() + 1, tail.end());
    result.path = space.path_of(head);
  }
  return result;
}

// M(n,p): distance between the constant states on pegs 1 and 2.
inline SearchResult m_number(unsigned n, unsigned p, const SearchOptions& options = {},
                             bool want_path = false, SearchMode mode = SearchMode::bidirectional) {
  check_budget(n, p, options);
  return bfs_distance(State::constant(n, p, 1), State::constant(n, p, 2), want_path, options, mode);
}

// Length D of the shortest move sequence from the constant state on peg 1 to
// a state where disk n is alone on peg 1 and some other peg is empty, i.e.
// a minimal demolishing prefix without the final move of disk n. Disk n is
// never moved by the search, so it stays on peg 1 throughout.
inline SearchResult minimal_demolishing_length(unsigned n, unsigned p, const SearchOptions& options = {},
                                               bool want_path = false) {
  check_budget(n, p, options);
  const StateSpace space(n, p);
  auto is_target = [&](std::uint64_t code) {
    std::array<std::uint8_t, kMaxOracleDisks> peg;
    space.digits(code, peg);
    std::array<bool, kMaxPegs> used{};
    for (unsigned d = 0; d + 1 < n; ++d) {
      if (peg[d] == peg[n - 1]) return false;
      used[peg[d]] = true;
    }
    for (unsigned q = 0; q < p; ++q)
      if (q != peg[n - 1] && !used[q]) return true;
    return false;
  };

  SearchResult result;
  result.peak_frontier = 1;
  detail::Frontier f(space.size(), 0);
  std::optional<std::uint64_t> hit;
  if (is_target(0)) hit = 0;
  while (!hit) {
    if (f.current.empty()) throw Error("no demolishing state reachable");
    f.next.clear();
    for (auto u : f.current) {
      ++result.states_expanded;
      space.for_each_neighbor(
          u,
          [&](std::uint64_t v, Disk, Peg, Peg) {
            if (f.label[v] != kUnreached) return;
            f.label[v] = f.depth + 1;
            f.next.push_back(v);
            if (!hit && is_target(v)) hit = v;
          },
          /*move_largest=*/false);
    }
    ++f.depth;
    f.current.swap(f.next);
    result.peak_frontier = std::max<std::uint64_t>(result.peak_frontier, f.current.size());
  }
  result.distance = f.label[*hit];
  if (want_path) {
    auto codes = detail::walk_down(space, f.label, *hit, false);
    std::reverse(codes.begin(), codes.end());
    result.path = space.path_of(codes);
    for (const auto& m : result.path->moves())
      if (m.disk == n) throw Error("largest disk moved during the demolishing prefix");
  }
  return result;
}

// Up to `limit` distinct shortest paths from the constant state on peg 1 to
// the one on peg 2, in lexicographic neighbor order.
inline std::vector<Path> optimal_solutions_sample(unsigned n, unsigned p, std::size_t limit,
                                                  const SearchOptions& options = {}) {
  check_budget(n, p, options);
  const StateSpace space(n, p);
  const std::uint64_t s = space.encode(State::constant(n, p, 1)).code;
  const std::uint64_t g = space.encode(State::constant(n, p, 2)).code;
  const auto from_start = distance_labels(space, s);
  const auto to_goal = distance_labels(space, g);
  const std::uint32_t total = from_start[g];

  std::vector<Path> out;
  std::vector<std::uint64_t> trail{s};
  // Every state on a shortest path has a successor on one, so the search
  // never dead-ends.
  auto extend = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    const std::uint64_t u = trail.back();
    if (u == g) {
      out.push_back(space.path_of(trail));
      return;
    }
    const std::uint32_t depth = from_start[u];
    std::vector<std::uint64_t> next;
    space.for_each_neighbor(u, [&](std::uint64_t v, Disk, Peg, Peg) {
      if (from_start[v] == depth + 1 && to_goal[v] == total - depth - 1) next.push_back(v);
    });
    for (auto v : next) {
      trail.push_back(v);
      self(self);
      trail.pop_back();
      if (out.size() >= limit) return;
    }
  };
  if (limit > 0) extend(extend);
  return out;
}

// Binary distance table: little-endian uint32 n, p, entry width (bytes),
// then p^n entries of that width in code order (kUnreached for none).
struct DistanceTable {
  unsigned n = 0;
  unsigned p = 0;
  std::vector<std::uint32_t> entries;
};

namespace detail {

inline void put_u32(std::ostream& os, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  os.write(bytes, 4);
}

inline std::uint32_t get_u32(std::istream& is) {
  unsigned char bytes[4];
  if (!is.read(reinterpret_cast<char*>(bytes), 4)) throw Error("truncated distance table");
  return std::uint32_t{bytes[0]} | (std::uint32_t{bytes[1]} << 8) | (std::uint32_t{bytes[2]} << 16) |
         (std::uint32_t{bytes[3]} << 24);
}

}  // namespace detail

inline void write_distance_table(std::ostream& os, const DistanceTable& table) {
  detail::put_u32(os, table.n);
  detail::put_u32(os, table.p);
  detail::put_u32(os, 4);
  for (auto e : table.entries) detail::put_u32(os, e);
}

inline DistanceTable read_distance_table(std::istream& is) {
  DistanceTable table;
  table.n = detail::get_u32(is);
  table.p = detail::get_u32(is);
  if (detail::get_u32(is) != 4) throw Error("unsupported distance table entry width");
  const auto count = state_count(table.n, table.p);
  if (!count) throw RangeError("distance table too large");
  table.entries.resize(*count);
  for (auto& e : table.entries) e = detail::get_u32(is);
  return table;
}

// Labels from the constant state on peg 1.
inline DistanceTable compute_distance_table(unsigned n, unsigned p, const SearchOptions& options = {}) {
  check_budget(n, p, options);
  const StateSpace space(n, p);
  return {n, p, distance_labels(space, 0)};
}

}  // namespace hanoi
