#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "hanoi/serialize.hpp"

namespace hanoi {
namespace {

TEST(MoveJson, InfinityIsAString) {
  const auto s = State::constant(2, 3, 1);
  const auto j = move_to_json(make_move(s, 1, 3));
  EXPECT_EQ(j.dump(), R"({"disk":1,"from":1,"to":3,"triple":[1,2,"inf"]})");
}

TEST(MoveJson, RejectsBadTriple) {
  auto j = nlohmann::json::parse(R"({"disk":1,"from":1,"to":3,"triple":[1,2,"oo"]})");
  EXPECT_THROW(move_from_json(j), InvalidArgument);
  j = nlohmann::json::parse(R"({"disk":1,"from":1,"to":3,"triple":[2,3,"inf"]})");
  EXPECT_THROW(move_from_json(j), InvalidArgument);
}

TEST(PathJson, RoundTripOfRandomWalks) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + trial % 5, p = 3 + trial % 3;
    Path path(State::constant(n, p, 1 + trial % p));
    for (int i = 0; i < 25; ++i) {
      const auto moves = legal_moves(path.back());
      path.push(moves[rng() % moves.size()]);
    }
    const auto text = path_to_json(path).dump();
    EXPECT_EQ(path_from_json(nlohmann::json::parse(text)), path);
  }
}

TEST(PathJson, ReplayRejectsIllegalMove) {
  const auto j = nlohmann::json::parse(
      R"({"p":3,"initial":[1,1],"moves":[{"disk":2,"from":1,"to":2,"triple":[2,"inf","inf"]}]})");
  EXPECT_THROW(path_from_json(j), IllegalMoveError);
}

TEST(TextFormat, OneMovePerLine) {
  Path path(State::constant(2, 3, 1));
  path.push(1, 3);
  path.push(2, 2);
  path.push(1, 2);
  std::ostringstream os;
  write_text(os, path);
  EXPECT_EQ(os.str(), "1:1>3\n2:1>2\n1:3>2\n");
}

}  // namespace
}  // namespace hanoi
