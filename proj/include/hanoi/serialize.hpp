#pragma once

// JSON and compact-text forms of moves and paths.
//
//   move: {"disk": j, "from": a, "to": b, "triple": [j, i|"inf", t|"inf"]}
//   path: {"p": pegs, "initial": [peg of disk 1, ...], "moves": [move, ...]}
//   text: "d:a>b", one move per line

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hanoi/core.hpp"

namespace hanoi {

namespace detail {

inline nlohmann::json triple_end_to_json(Disk d) {
  if (d == kInfinity) return "inf";
  return d;
}

inline Disk triple_end_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw InvalidArgument("triple entry must be a disk or \"inf\"");
    return kInfinity;
  }
  return j.get<Disk>();
}

}  // namespace detail

inline nlohmann::json move_to_json(const Move& m) {
  return {{"disk", m.disk},
          {"from", m.from},
          {"to", m.to},
          {"triple", nlohmann::json::array({m.disk, detail::triple_end_to_json(m.below),
                                            detail::triple_end_to_json(m.onto)})}};
}

inline Move move_from_json(const nlohmann::json& j) {
  Move m;
  m.disk = j.at("disk").get<Disk>();
  m.from = j.at("from").get<Peg>();
  m.to = j.at("to").get<Peg>();
  const auto& t = j.at("triple");
  if (!t.is_array() || t.size() != 3) throw InvalidArgument("triple must have three entries");
  if (t[0].get<Disk>() != m.disk) throw InvalidArgument("triple disk disagrees with move disk");
  m.below = detail::triple_end_from_json(t[1]);
  m.onto = detail::triple_end_from_json(t[2]);
  return m;
}

inline nlohmann::json state_to_json(const State& s) { return s.assignment(); }

inline nlohmann::json path_to_json(const Path& path) {
  auto moves = nlohmann::json::array();
  for (const auto& m : path.moves()) moves.push_back(move_to_json(m));
  return {{"p", path.pegs()}, {"initial", state_to_json(path.front())}, {"moves", std::move(moves)}};
}

// Replays the moves; throws IllegalMoveError if any is illegal or its triple
// disagrees with the replayed state.
inline Path path_from_json(const nlohmann::json& j) {
  const auto pegs = j.at("p").get<unsigned>();
  const auto initial = j.at("initial").get<std::vector<Peg>>();
  Path path(State(pegs, initial));
  for (const auto& m : j.at("moves")) path.push(move_from_json(m));
  return path;
}

inline std::string move_to_text(const Move& m) {
  return std::to_string(m.disk) + ":" + std::to_string(m.from) + ">" + std::to_string(m.to);
}

inline void write_text(std::ostream& os, const Path& path) {
  for (const auto& m : path.moves()) os << move_to_text(m) << '\n';
}

}  // namespace hanoi
