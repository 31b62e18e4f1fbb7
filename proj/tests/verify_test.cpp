#include <string>

#include <gtest/gtest.h>

#include "hanoi/verify.hpp"

namespace hanoi {
namespace {

std::string without_ms(const std::string& csv) { return csv.substr(0, csv.rfind(',')); }

TEST(VerifyCell, ClassicalRow) {
  const auto row = verify_cell(6, 3, 16, {});
  ASSERT_EQ(row.status, CellStatus::computed);
  EXPECT_TRUE(row.passed());
  const auto csv = to_csv(row);
  EXPECT_EQ(csv.substr(0, csv.find(",true")), "6,3,6,63,63");
  EXPECT_EQ(without_ms(csv).substr(0, without_ms(csv).rfind(',')), "6,3,6,63,63,true,31,true,true,true");
}

TEST(VerifyCell, SingleDisk) {
  for (unsigned p = 3; p <= 6; ++p) {
    const auto row = verify_cell(1, p, 16, {});
    EXPECT_TRUE(row.passed());
    EXPECT_EQ(row.report->m, 1u);
    EXPECT_EQ(row.k, 1);
  }
}

TEST(VerifyCell, SkippedOverBudget) {
  const auto row = verify_cell(6, 4, 16, SearchOptions{1024});
  EXPECT_EQ(row.status, CellStatus::skipped);
  EXPECT_TRUE(row.passed());
  EXPECT_EQ(to_csv(row), "6,4,3,17,skipped,skipped,skipped,skipped,skipped,skipped,0,0");
  EXPECT_EQ(to_json(row)["M"], "skipped");
}

TEST(VerifyCell, DeterministicApartFromTiming) {
  const auto a = verify_cell(5, 4, 8, {});
  const auto b = verify_cell(5, 4, 8, {});
  EXPECT_EQ(without_ms(to_csv(a)), without_ms(to_csv(b)));
  auto ja = to_json(a), jb = to_json(b);
  ja.erase("ms");
  jb.erase("ms");
  EXPECT_EQ(ja, jb);
}

TEST(VerifyCsv, HeaderColumns) {
  EXPECT_STREQ(kVerifyCsvHeader, "n,p,r,K,M,match,demolish_len,t31,t32,t41,states_expanded,ms");
}

}  // namespace
}  // namespace hanoi
