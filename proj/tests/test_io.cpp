#include <gtest/gtest.h>

#include "gamefit/error.hpp"
#include "gamefit/io.hpp"
#include "test_support.hpp"

namespace gamefit {
namespace {

using testing::R;
using testing::V;

TEST(Io, RationalsAsStrings) {
  EXPECT_EQ(io::to_json(R("-3/4")), io::Json("-3/4"));
  EXPECT_EQ(io::rational_from_json(io::Json("0.25")), R("1/4"));
  EXPECT_EQ(io::rational_from_json(io::Json(7)), R("7"));
  EXPECT_THROW(io::rational_from_json(io::Json(0.5)), Error);
  EXPECT_THROW(io::rational_from_json(io::Json("1/0")), Error);
}

TEST(Io, GameRoundTrip) {
  const io::ProblemFile f = io::make_game_file(MatrixGame(Matrix{{R("1/3"), -2}, {0, 5}}));
  const io::Json j = io::to_json(f);
  EXPECT_EQ(j["kind"], "game");
  const io::ProblemFile g = io::problem_from_json(j);
  EXPECT_EQ(g.kind, io::ProblemKind::kGame);
  EXPECT_EQ(g.game().payoff(), f.game().payoff());
  EXPECT_EQ(io::dump(io::to_json(g)), io::dump(j));
}

TEST(Io, LpRoundTrip) {
  LinearProgram lp;
  lp.sense = Sense::kMin;
  lp.objective = {R("1"), V({"2", "-1/2"})};
  lp.constraints.push_back({{R("0"), V({"1", "1"})}, Relation::kEq, {R("4"), V({"0", "0"})}});
  lp.constraints.push_back({{R("0"), V({"1", "0"})}, Relation::kGe, {R("0"), V({"0", "1"})}});
  lp.nonnegative = {true, false};
  const io::ProblemFile g = io::problem_from_json(io::to_json(io::make_lp_file(lp)));
  EXPECT_EQ(g.lp(), lp);
}

TEST(Io, ApproxRoundTripWithRecovery) {
  const ApproxProblem p(Norm::kSum, {{R("1"), V({"2"})}, {R("-1"), V({"1/9"})}});
  const io::Json rec = {{"from", "game"}, {"c", "1"}};
  const io::ProblemFile g = io::problem_from_json(io::to_json(io::make_approx_file(p, rec)));
  EXPECT_EQ(g.kind, io::ProblemKind::kL1);
  EXPECT_EQ(g.approx(), p);
  EXPECT_EQ(g.recovery, rec);
}

TEST(Io, KindInferredAndErrors) {
  const io::Json j = io::Json::parse(R"({"payoff": [[1, "-1"], [-1, 1]]})");
  EXPECT_EQ(io::problem_from_json(j).kind, io::ProblemKind::kGame);
  EXPECT_THROW(io::problem_from_json(io::Json::parse(R"({"payoff": [[1], [1, 2]]})")), Error);
  EXPECT_THROW(io::problem_from_json(io::Json::parse(R"({"kind": "banana"})")), Error);
  EXPECT_THROW(io::problem_from_json(io::Json::parse(R"({"kind": "lp"})")), Error);
  EXPECT_EQ(io::parse_kind("cheb"), io::ProblemKind::kChebyshev);
}

}  // namespace
}  // namespace gamefit
