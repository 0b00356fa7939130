// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gamefit/error.hpp"
#include "gamefit/reduce.hpp"
#include "gamefit/simplex.hpp"
#include "gamefit/verify.hpp"
#include "test_support.hpp"

namespace gamefit {
namespace {

using testing::R;
using testing::V;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

// ---------------------------------------------------------------------------
// Shared game corpus for criteria 1 to 5 and 9.

struct GameCase {
  Matrix a;
  Equilibrium direct;
  Symmetrized sym;
  ChebyshevReduction cheb;
  L1Reduction l1;
  Rational cheb_lp_value;
  Rational l1_lp_value;
  MixedStrategy cheb_z;
  MixedStrategy l1_z;
  Equilibrium via_cheb;
  Equilibrium via_l1;
};

std::vector<Matrix> random_games() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::vector<Matrix> out;
  for (int i = 0; i < 50; ++i) {
    const std::size_t m = dim(rng);
    const std::size_t n = dim(rng);
    out.push_back(testing::random_int_matrix(rng, m, n, -9, 9));
  }
  return out;
}

GameCase run_case(const Matrix& a) {
  Symmetrized sym = symmetrize(a, choose_offset(a));
  ChebyshevReduction cheb = game_to_chebyshev(sym.matrix);
  L1Reduction l1 = game_to_l1(sym.matrix);

  const ApproxLp cl = cheb_to_lp(*cheb.problem);
  const LPSolution cs = solve_lp(cl.lp);
  if (!cs.optimal()) throw Error(ErrorCode::kInternal, "chebyshev LP not optimal");
  const Rational cv = cs.as_optimal().value;
  const MixedStrategy cz = chebyshev_argmin_to_strategy(*cheb.problem, cl.map.recover(cs.as_optimal().x), cheb.record);

  const ApproxLp ll = l1_to_lp(*l1.problem);
  const LPSolution ls = solve_lp(ll.lp);
  if (!ls.optimal()) throw Error(ErrorCode::kInternal, "l1 LP not optimal");
  const Rational lv = ls.as_optimal().value;
  const MixedStrategy lz = l1_argmin_to_strategy(*l1.problem, ll.map.recover(ls.as_optimal().x), l1.record);

  Equilibrium ec = extract_equilibrium(cz, sym.record);
  Equilibrium el = extract_equilibrium(lz, sym.record);
  return {a,  solve_game(MatrixGame(a)), sym, cheb, l1, cv, lv, cz, lz, std::move(ec), std::move(el)};
}

const std::vector<GameCase>& corpus() {
  static const std::vector<GameCase> cases = [] {
    std::vector<GameCase> out;
    for (const Matrix& a : random_games()) out.push_back(run_case(a));
    return out;
  }();
  return cases;
}

std::string where(std::size_t i) { return "game #" + std::to_string(i) + ": "; }

// ---------------------------------------------------------------------------

Check chebyshev_pipeline() {
  Check c;
  const auto& cases = corpus();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const GameCase& g = cases[i];
    c.expect(g.cheb_lp_value == 1, where(i) + "SUP optimum " + g.cheb_lp_value.to_string());
    c.expect(verify_equilibrium(MatrixGame(g.a), g.via_cheb), where(i) + "recovered equilibrium fails");
  }
  c.detail << cases.size() << " games, SUP optimum exactly 1, recovered equilibria verified";
  return c;
}

Check l1_pipeline() {
  Check c;
  const auto& cases = corpus();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const GameCase& g = cases[i];
    const Rational n(g.sym.matrix.rows());
    const Rational expected = n * g.l1.record.c + n;
    c.expect(g.l1_lp_value == expected, where(i) + "SUM optimum " + g.l1_lp_value.to_string() + " vs Nc+N " +
                                            expected.to_string());
    c.expect(g.l1.record.optimum() == expected, where(i) + "record optimum");
    c.expect(verify_equilibrium(MatrixGame(g.a), g.via_l1), where(i) + "recovered equilibrium fails");
  }
  c.detail << cases.size() << " games, SUM optimum exactly Nc+N, recovered equilibria verified";
  return c;
}

Check path_consistency() {
  Check c;
  const auto& cases = corpus();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const GameCase& g = cases[i];
    c.expect(verify_equilibrium(MatrixGame(g.a), g.direct), where(i) + "direct equilibrium fails");
    c.expect(g.direct.value == g.via_cheb.value && g.direct.value == g.via_l1.value,
             where(i) + "values " + g.direct.value.to_string() + ", " + g.via_cheb.value.to_string() + ", " +
                 g.via_l1.value.to_string());
  }
  c.detail << cases.size() << " games, direct LP / SUP / SUM values identical";
  return c;
}

Check bijection() {
  Check c;
  const auto& cases = corpus();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const GameCase& g = cases[i];
    const SymmetrizationRecord& rec = g.sym.record;
    for (const MixedStrategy* z : {&g.cheb_z, &g.l1_z}) {
      c.expect(embed_equilibrium(extract_equilibrium(*z, rec), rec) == *z, where(i) + "embed(extract(z)) != z");
    }
    const Equilibrium back = extract_equilibrium(embed_equilibrium(g.direct, rec), rec);
    c.expect(back.row == g.direct.row && back.col == g.direct.col && back.value == g.direct.value,
             where(i) + "extract(embed(e)) != e");
    // The embedded direct solution is optimal for the symmetric game.
    for (const auto& v : g.sym.matrix.times(embed_equilibrium(g.direct, rec).weights())) {
      c.expect(v <= 0, where(i) + "embedded strategy not optimal");
    }
  }
  c.detail << cases.size() << " instances, both compositions are identities";
  return c;
}

Check structural_counts() {
  Check c;
  const auto& cases = corpus();
  std::size_t quoted_differs = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const GameCase& g = cases[i];
    const std::size_t m = g.a.rows();
    const std::size_t n = g.a.cols();
    const CountReport sup = check_reduction_counts(*g.cheb.problem, m, n);
    const CountReport sum = check_reduction_counts(*g.l1.problem, m, n);
    c.expect(sup.ok && sup.actual_functions == 2 * (m + n + 1) + 2 && sup.arity == m + n + 1,
             where(i) + "SUP count " + std::to_string(sup.actual_functions));
    c.expect(sum.ok && sum.actual_functions == 4 * m + 4 * n + 6 && sum.arity == m + n + 1,
             where(i) + "SUM count " + std::to_string(sum.actual_functions));
    quoted_differs += sup.quoted_count_differs;
  }
  c.detail << cases.size() << " games, SUP 2N+2 and SUM 4m+4n+6 functions of N=m+n+1 variables"
           << " (closed-form SUP count 2m+2n+3 differs on " << quoted_differs << ")";
  return c;
}

// ---------------------------------------------------------------------------

LinearProgram make_lp(Sense sense, Vector objective, std::vector<std::pair<Vector, std::pair<Relation, Rational>>> rows,
                      std::vector<bool> nonnegative) {
  LinearProgram lp;
  lp.sense = sense;
  const std::size_t n = objective.size();
  lp.objective = {Rational(0), std::move(objective)};
  for (auto& [coeffs, rel] : rows) {
    lp.constraints.push_back({{Rational(0), std::move(coeffs)}, rel.first, {rel.second, Vector(n)}});
  }
  lp.nonnegative = std::move(nonnegative);
  return lp;
}

std::vector<LinearProgram> hand_built_lps() {
  const auto le = Relation::kLe;
  const auto ge = Relation::kGe;
  const auto eq = Relation::kEq;
  std::vector<LinearProgram> out;
  out.push_back(make_lp(Sense::kMax, V({"1"}), {{V({"1"}), {le, R("1")}}}, {true}));
  out.push_back(make_lp(Sense::kMax, V({"1", "1"}), {{V({"1", "2"}), {le, R("4")}}, {V({"3", "1"}), {le, R("6")}}},
                        {true, true}));
  out.push_back(make_lp(Sense::kMin, V({"1", "1"}), {{V({"1", "1"}), {ge, R("2")}}, {V({"1", "0"}), {le, R("3")}}},
                        {true, true}));
  out.push_back(make_lp(Sense::kMax, V({"2", "3", "1"}),
                        {{V({"1", "1", "1"}), {le, R("4")}}, {V({"1", "2", "0"}), {le, R("3")}},
                         {V({"0", "1", "1"}), {le, R("2")}}},
                        {true, true, true}));
  // Infeasible.
  out.push_back(make_lp(Sense::kMin, V({"1", "1"}), {{V({"1", "1"}), {le, R("1")}}, {V({"1", "1"}), {ge, R("3")}}},
                        {true, true}));
  // Unbounded.
  out.push_back(make_lp(Sense::kMax, V({"1", "-1"}), {{V({"1", "-2"}), {le, R("2")}}}, {true, true}));
  out.push_back(make_lp(Sense::kMax, V({"1", "1"}), {{V({"1", "-1"}), {eq, R("1")}}, {V({"1", "0"}), {le, R("3")}}},
                        {true, true}));
  // min t  s.t.  t >= x - 3, t >= 3 - x, x free.
  out.push_back(make_lp(Sense::kMin, V({"0", "1"}), {{V({"-1", "1"}), {ge, R("-3")}}, {V({"1", "1"}), {ge, R("3")}}},
                        {false, true}));
  out.push_back(make_lp(Sense::kMin, V({"3", "2"}),
                        {{V({"1", "1"}), {ge, R("1/2")}}, {V({"1", "0"}), {le, R("2/3")}}}, {true, true}));
  // Degenerate vertex at the origin.
  out.push_back(make_lp(Sense::kMax, V({"1", "0"}), {{V({"1", "0"}), {le, R("0")}}, {V({"1", "1"}), {le, R("0")}}},
                        {true, true}));
  return out;
}

Check alpha_pipeline() {
  Check c;
  const auto lps = hand_built_lps();
  int statuses[3] = {0, 0, 0};
  for (std::size_t i = 0; i < lps.size(); ++i) {
    const std::string at = "lp #" + std::to_string(i) + ": ";
    const Standardized s = lp_to_standard(lps[i]);
    const LPSolution direct = simplex_solve(s.lp);
    GamePipelineTrace t;
    try {
      t = solve_lp_via_game_traced(lps[i]);
    } catch (const Error& e) {
      c.fail(at + e.what());
      continue;
    }
    ++statuses[static_cast<int>(direct.status())];
    c.expect(direct.status() == t.solution.status(), at + "status " + std::string(to_string(t.solution.status())) +
                                                         " vs " + std::string(to_string(direct.status())));
    if (!direct.optimal() || !t.solution.optimal()) continue;
    c.expect(s.map.value_to_original(direct.as_optimal().value) == t.solution.as_optimal().value,
             at + "value " + t.solution.as_optimal().value.to_string());
    c.expect(t.recovered.has_value(), at + "no recovered strategy");
    if (!t.recovered) continue;
    c.expect((*t.recovered)[t.recovered->size() - 1] >= t.alpha.alpha, at + "last entry below alpha");
    for (const auto& v : t.game.times(t.recovered->weights())) c.expect(v <= 0, at + "M x has a positive entry");
  }
  c.expect(statuses[1] >= 1 && statuses[2] >= 1, "corpus lacks an infeasible or unbounded LP");
  c.detail << lps.size() << " LPs (" << statuses[0] << " optimal, " << statuses[1] << " infeasible, " << statuses[2]
           << " unbounded), statuses and values match, x_N >= alpha and M x <= 0";
  return c;
}

Check naive_reduction() {
  Check c;
  std::mt19937_64 rng(77);
  std::size_t count = 0;
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int rep = 0; rep < 4; ++rep, ++count) {
        std::vector<AffineFunction> fs;
        for (std::size_t i = 0; i < m; ++i) {
          AffineFunction f{testing::random_rational(rng, 5, 3), Vector(n)};
          for (auto& x : f.coeffs) x = testing::random_rational(rng, 4, 2);
          fs.push_back(std::move(f));
        }
        const ApproxProblem p(Norm::kSum, fs);
        const ApproxProblem q = l1_to_cheb_naive(p);
        const std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": ";
        c.expect(q.size() == (std::size_t{1} << (m - 1)), at + "size " + std::to_string(q.size()));
        const LPSolution a = solve_lp(l1_to_lp(p).lp);
        const LPSolution b = solve_lp(cheb_to_lp(q).lp);
        c.expect(a.optimal() && b.optimal() && a.as_optimal().value == b.as_optimal().value, at + "optima differ");
      }
    }
  }
  c.detail << count << " SUM problems with m <= 6, n <= 3: equal optima, 2^(m-1) functions";
  return c;
}

Check oracle_agreement() {
  Check c;
  std::mt19937_64 rng(91);
  int statuses[3] = {0, 0, 0};
  std::uniform_int_distribution<std::size_t> rows(1, 4);
  std::uniform_int_distribution<std::size_t> cols(1, 3);
  for (int i = 0; i < 100; ++i) {
    const StandardLP lp = testing::random_standard_lp(rng, rows(rng), cols(rng));
    const LPSolution a = simplex_solve(lp);
    const LPSolution b = brute_force_lp(lp);
    ++statuses[static_cast<int>(a.status())];
    const std::string at = "lp #" + std::to_string(i) + ": ";
    c.expect(a.status() == b.status(), at + "status differs");
    if (a.optimal() && b.optimal()) c.expect(a.as_optimal().value == b.as_optimal().value, at + "value differs");
  }
  for (int i = 0; i < 100; ++i) {
    const MatrixGame g(testing::random_int_matrix(rng, 3, 3, -2, 2));
    const Equilibrium a = solve_game(g);
    const Equilibrium b = brute_force_game(g);
    const std::string at = "game #" + std::to_string(i) + ": ";
    c.expect(a.value == b.value, at + "value differs");
    c.expect(verify_equilibrium(g, a) && verify_equilibrium(g, b), at + "equilibrium fails");
  }
  c.detail << "100 LPs (" << statuses[0] << " optimal, " << statuses[1] << " infeasible, " << statuses[2]
           << " unbounded) and 100 3x3 games in {-2..2} agree with enumeration";
  return c;
}

Check closing_function_at_zero() {
  Check c;
  std::size_t emitted = 0;
  auto check_problem = [&](const ApproxProblem& p, const std::string& at) {
    ++emitted;
    const Rational at_zero = evaluate_objective(p, Vector(p.arity()));
    c.expect(at_zero > 1, at + "objective at 0 is " + at_zero.to_string());
  };
  const auto& cases = corpus();
  for (std::size_t i = 0; i < cases.size(); ++i) check_problem(*cases[i].cheb.problem, where(i));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const Matrix m = testing::random_skew(rng, 2 + i % 7, 1 + i % 9);
    if (mat_extreme(m).second.is_zero()) continue;
    check_problem(*game_to_chebyshev(m).problem, "skew #" + std::to_string(i) + ": ");
  }

  // Counterexample: the literal closing function -sum x - c + 1 lets x = 0
  // reach the optimum on rock-paper-scissors.
  const ChebyshevReduction rps = game_to_chebyshev(testing::rps());
  std::vector<AffineFunction> literal = rps.problem->functions();
  literal.back() = {Rational(0), V({"-1", "-1", "-1"})};
  const Rational literal_zero = evaluate_objective(ApproxProblem(Norm::kSup, literal), Vector(3));
  const Rational fixed_zero = evaluate_objective(*rps.problem, Vector(3));
  c.expect(literal_zero == 1, "literal closing function at 0 gave " + literal_zero.to_string());
  c.detail << emitted << " SUP problems have objective > 1 at x = 0; rock-paper-scissors at x = 0: literal "
           << literal_zero << ", corrected " << fixed_zero;
  return c;
}

Check symmetric_games() {
  Check c;
  std::mt19937_64 rng(1009);
  for (int i = 0; i < 50; ++i) {
    const Matrix m = testing::random_skew(rng, 2 + i % 8, 9);
    const MatrixGame g(m);
    const Equilibrium e = solve_game(g);
    const std::string at = "skew #" + std::to_string(i) + ": ";
    c.expect(e.value == 0, at + "value " + e.value.to_string());
    c.expect(verify_equilibrium(g, {e.row, e.row, Rational(0)}), at + "row strategy fails as column strategy");
  }
  c.detail << "50 skew-symmetric games: value exactly 0, row strategy optimal for both players";
  return c;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Check()> run;
};

}  // namespace
}  // namespace gamefit

int main() {
  using namespace gamefit;
  const std::vector<Criterion> criteria = {
      {1, "chebyshev pipeline", chebyshev_pipeline},
      {2, "l1 pipeline", l1_pipeline},
      {3, "path consistency", path_consistency},
      {4, "bijection round trip", bijection},
      {5, "structural counts", structural_counts},
      {6, "alpha pipeline", alpha_pipeline},
      {7, "naive l1 reduction", naive_reduction},
      {8, "oracle agreement", oracle_agreement},
      {9, "closing function at 0", closing_function_at_zero},
      {10, "symmetric games", symmetric_games},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2d  %-22s %s (%.2f s)\n", result.ok ? "PASS" : "FAIL", cr.id, cr.name,
                result.detail.str().c_str(), secs);
    std::fflush(stdout);
    failures += !result.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
