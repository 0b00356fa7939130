#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "gamefit/error.hpp"
#include "gamefit/reduce.hpp"
#include "gamefit/simplex.hpp"
#include "gamefit/verify.hpp"

namespace gamefit::cli {
namespace {

using io::Json;
using io::ProblemFile;
using io::ProblemKind;

[[noreturn]] void refuse(ErrorCode code, const std::string& message) { throw Error(code, message); }

Json equilibrium_json(const Equilibrium& e) {
  Json out;
  out["value"] = io::to_json(e.value);
  out["row"] = io::to_json(e.row.weights());
  out["col"] = io::to_json(e.col.weights());
  return out;
}

Json header(ProblemKind kind, std::string_view path) {
  Json out;
  out["kind"] = "solution";
  out["problem"] = std::string(io::to_string(kind));
  out["path"] = std::string(path);
  return out;
}

Json tagged(std::string_view kind, const Json& fields) {
  Json out;
  out["kind"] = std::string(kind);
  for (auto it = fields.begin(); it != fields.end(); ++it) out[it.key()] = it.value();
  return out;
}

Vector head(const Vector& v, std::size_t count) {
  return Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count));
}

// ---------------------------------------------------------------------------
// Game -> fit records.

// Skew-symmetric nonzero games are reduced as they are; anything else is
// symmetrized first.
struct GameFit {
  Matrix payoff;
  std::optional<SymmetrizationRecord> sym;
  Matrix skew;
};

GameFit prepare_game(const Matrix& payoff) {
  GameFit g{payoff, std::nullopt, payoff};
  const bool direct = payoff.rows() == payoff.cols() && payoff.is_skew_symmetric() &&
                      !mat_extreme(payoff).second.is_zero();
  if (!direct) {
    Symmetrized s = symmetrize(payoff, choose_offset(payoff));
    g.skew = std::move(s.matrix);
    g.sym = s.record;
  }
  return g;
}

Equilibrium finish_game(const GameFit& g, const MixedStrategy& z) {
  Equilibrium e = g.sym ? extract_equilibrium(z, *g.sym, g.payoff) : Equilibrium{z, z, Rational(0)};
  if (!verify_equilibrium(MatrixGame(g.payoff), e)) {
    refuse(ErrorCode::kInternal, "recovered strategies do not form an equilibrium");
  }
  return e;
}

Json fit_record(const GameFit& g, const Rational& c, const Rational& optimum, ProblemKind to) {
  Json rec;
  rec["from"] = "game";
  rec["to"] = std::string(io::to_string(to));
  rec["payoff"] = io::to_json(g.payoff);
  rec["symmetrized"] = g.sym.has_value();
  if (g.sym) rec["offset"] = io::to_json(g.sym->offset);
  rec["dimension"] = g.skew.rows();
  rec["c"] = io::to_json(c);
  rec["optimum"] = io::to_json(optimum);
  return rec;
}

GameFit game_fit_from_record(const Json& rec) {
  GameFit g{io::matrix_from_json(rec.at("payoff")), std::nullopt, Matrix()};
  if (rec.at("symmetrized").get<bool>()) {
    Symmetrized s = symmetrize(g.payoff, io::rational_from_json(rec.at("offset")));
    g.skew = std::move(s.matrix);
    g.sym = s.record;
  } else {
    g.skew = g.payoff;
  }
  return g;
}

struct FitReduction {
  ApproxProblem problem;
  Json record;
};

FitReduction game_to_fit(const GameFit& g, bool l1) {
  if (l1) {
    L1Reduction r = game_to_l1(g.skew);
    return {*r.problem, fit_record(g, r.record.c, r.record.optimum(), ProblemKind::kL1)};
  }
  ChebyshevReduction r = game_to_chebyshev(g.skew);
  return {*r.problem, fit_record(g, r.record.c, Rational(1), ProblemKind::kChebyshev)};
}

// Validates a fit minimizer against a game record and pulls back the equilibrium.
Equilibrium fit_to_game(const ApproxProblem& problem, const Vector& x, const Json& rec) {
  const GameFit g = game_fit_from_record(rec);
  const Rational c = io::rational_from_json(rec.at("c"));
  const std::size_t dim = g.skew.rows();
  const MixedStrategy z =
      problem.norm() == Norm::kSup
          ? chebyshev_argmin_to_strategy(problem, x, ChebyshevGameRecord{c, Rational(1) / c, dim})
          : l1_argmin_to_strategy(problem, x, L1GameRecord{c, dim});
  return finish_game(g, z);
}

// ---------------------------------------------------------------------------
// Solving.

Json lp_solution_fields(Json out, const LPSolution& s) {
  out["status"] = std::string(to_string(s.status()));
  switch (s.status()) {
    case LpStatus::kOptimal:
      out["value"] = io::to_json(s.as_optimal().value);
      out["x"] = io::to_json(s.as_optimal().x);
      out["dual"] = io::to_json(s.as_optimal().dual);
      break;
    case LpStatus::kInfeasible:
      out["certificate"] = io::to_json(s.as_infeasible().certificate);
      break;
    case LpStatus::kUnbounded:
      out["ray"] = io::to_json(s.as_unbounded().ray);
      out["point"] = io::to_json(s.as_unbounded().point);
      break;
  }
  return out;
}

Json recover_lp(const LPSolution& s, const Json& rec) {
  const std::string from = rec.at("from").get<std::string>();
  if (from != "game") refuse(ErrorCode::kParse, "unknown recovery record for an lp");
  if (!s.optimal()) refuse(ErrorCode::kInternal, "game LP is not optimal");
  const Matrix payoff = io::matrix_from_json(rec.at("payoff"));
  const LpOptimal& o = s.as_optimal();
  Equilibrium e{validate_strategy(head(o.x, payoff.rows())), validate_strategy(head(o.dual, payoff.cols())),
                o.value};
  if (!verify_equilibrium(MatrixGame(payoff), e)) {
    refuse(ErrorCode::kInternal, "recovered strategies do not form an equilibrium");
  }
  return tagged("game", equilibrium_json(e));
}

Json recover_game(const Equilibrium& e, const Json& rec) {
  if (rec.at("from").get<std::string>() != "lp") refuse(ErrorCode::kParse, "unknown recovery record for a game");
  const ProblemFile source = io::problem_from_json(rec.at("source"));
  const Standardized s = lp_to_standard(source.lp());
  const std::size_t rows = s.lp.A.rows();
  const std::size_t cols = s.lp.A.cols();
  const Rational t = e.row[rows + cols];
  Json out;
  out["kind"] = "lp";
  if (t.is_zero()) {
    out["status"] = "UNDETERMINED";
    out["reason"] = "the strategy puts no weight on the last coordinate; solve the lp with --via lp:game";
    return out;
  }
  Vector xs(cols);
  for (std::size_t j = 0; j < cols; ++j) xs[j] = e.row[rows + j] / t;
  const Vector x = s.map.to_original(xs);
  out["status"] = "OPTIMAL";
  out["value"] = io::to_json(evaluate_affine(source.lp().objective, x));
  out["x"] = io::to_json(x);
  return out;
}

Json recover_approx(const ApproxProblem& problem, const ApproxSolution& sol, const Json& rec) {
  const std::string from = rec.at("from").get<std::string>();
  if (from == "game") {
    return tagged("game", equilibrium_json(fit_to_game(problem, sol.x, rec)));
  }
  if (from == "l1") {
    // The naive reduction preserves the objective pointwise.
    const ProblemFile source = io::problem_from_json(rec.at("source"));
    Json out;
    out["kind"] = "l1";
    out["value"] = io::to_json(evaluate_objective(source.approx(), sol.x));
    out["x"] = io::to_json(sol.x);
    return out;
  }
  refuse(ErrorCode::kParse, "unknown recovery record for an approximation problem");
}

Json recover_from_lp_fit(const LPSolution& s, const Json& rec) {
  // chebyshev/l1 -> lp: keep the first `arity` coordinates.
  if (!s.optimal()) refuse(ErrorCode::kInternal, "fit LP is not optimal");
  const ProblemFile source = io::problem_from_json(rec.at("source"));
  const Vector x = ProjectionMap{rec.at("arity").get<std::size_t>(), rec.at("auxiliary").get<std::size_t>()}
                       .recover(s.as_optimal().x);
  Json out;
  out["kind"] = std::string(io::to_string(source.kind));
  out["value"] = io::to_json(evaluate_objective(source.approx(), x));
  out["x"] = io::to_json(x);
  return out;
}

std::string_view default_path(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kGame:
      return "game:lp";
    case ProblemKind::kLp:
      return "lp:simplex";
    case ProblemKind::kChebyshev:
      return "chebyshev:lp";
    case ProblemKind::kL1:
      return "l1:lp";
  }
  return "";
}

const std::map<std::string, ProblemKind, std::less<>>& path_table() {
  static const std::map<std::string, ProblemKind, std::less<>> table = {
      {"game:lp", ProblemKind::kGame},       {"game:cheb", ProblemKind::kGame},
      {"game:l1", ProblemKind::kGame},       {"lp:simplex", ProblemKind::kLp},
      {"lp:game", ProblemKind::kLp},         {"chebyshev:lp", ProblemKind::kChebyshev},
      {"l1:lp", ProblemKind::kL1},           {"l1:cheb-naive", ProblemKind::kL1},
  };
  return table;
}

Outcome solve_game_file(const ProblemFile& file, const std::string& path) {
  const Matrix& payoff = file.game().payoff();
  Json out = header(file.kind, path);
  Equilibrium e = [&] {
    if (path == "game:lp") return solve_game(file.game());
    const GameFit g = prepare_game(payoff);
    const FitReduction r = game_to_fit(g, path == "game:l1");
    const ApproxSolution sol = solve_approx(r.problem);
    out["reduced_optimum"] = io::to_json(sol.value);
    return fit_to_game(r.problem, sol.x, r.record);
  }();
  out["status"] = "OPTIMAL";
  const Json fields = equilibrium_json(e);
  for (auto it = fields.begin(); it != fields.end(); ++it) out[it.key()] = it.value();
  if (!file.recovery.is_null()) out["recovered"] = recover_game(e, file.recovery);
  return {kExitOk, std::move(out)};
}

Outcome solve_lp_file(const ProblemFile& file, const std::string& path) {
  Json out = header(file.kind, path);
  LPSolution s = LpInfeasible{};
  if (path == "lp:game") {
    const GamePipelineTrace t = solve_lp_via_game_traced(file.lp());
    out["alpha"] = io::to_json(t.alpha.alpha);
    out["modified_value"] = io::to_json(t.modified_value);
    s = t.solution;
  } else {
    s = solve_lp(file.lp());
  }
  out = lp_solution_fields(std::move(out), s);
  if (!file.recovery.is_null()) {
    const std::string from = file.recovery.at("from").get<std::string>();
    out["recovered"] = from == "game" ? recover_lp(s, file.recovery) : recover_from_lp_fit(s, file.recovery);
  }
  return {s.optimal() ? kExitOk : kExitNegative, std::move(out)};
}

Outcome solve_approx_file(const ProblemFile& file, const std::string& path) {
  Json out = header(file.kind, path);
  ApproxSolution sol;
  if (path == "l1:cheb-naive") {
    const ApproxProblem naive = l1_to_cheb_naive(file.approx());
    sol = solve_approx(naive);
    out["reduced_functions"] = naive.size();
    if (evaluate_objective(file.approx(), sol.x) != sol.value) {
      refuse(ErrorCode::kInternal, "naive reduction changed the objective");
    }
  } else {
    sol = solve_approx(file.approx());
  }
  out["status"] = "OPTIMAL";
  out["value"] = io::to_json(sol.value);
  out["x"] = io::to_json(sol.x);
  if (!file.recovery.is_null()) out["recovered"] = recover_approx(file.approx(), sol, file.recovery);
  return {kExitOk, std::move(out)};
}

// ---------------------------------------------------------------------------
// Verification.

struct Verdict {
  bool valid = false;
  std::string reason;
};

Verdict verify_game(const MatrixGame& game, const Json& sol) {
  Equilibrium e{validate_strategy(io::vector_from_json(sol.at("row"))),
                validate_strategy(io::vector_from_json(sol.at("col"))), io::rational_from_json(sol.at("value"))};
  if (verify_equilibrium(game, e)) return {true, ""};
  return {false, "equilibrium inequalities fail"};
}

Verdict verify_lp(const LinearProgram& lp, const Json& sol) {
  const Standardized s = lp_to_standard(lp);
  const std::string status = sol.at("status").get<std::string>();
  LPSolution claim = LpInfeasible{};
  if (status == "OPTIMAL") {
    const Vector x = io::vector_from_json(sol.at("x"));
    if (x.size() != lp.arity()) return {false, "x has the wrong length"};
    const Rational value = io::rational_from_json(sol.at("value"));
    if (!lp.is_feasible(x)) return {false, "x is infeasible"};
    if (evaluate_affine(lp.objective, x) != value) return {false, "value does not match the objective at x"};
    claim = LpOptimal{s.map.to_standard(x), s.map.value_to_standard(value), io::vector_from_json(sol.at("dual"))};
  } else if (status == "INFEASIBLE") {
    claim = LpInfeasible{io::vector_from_json(sol.at("certificate"))};
  } else if (status == "UNBOUNDED") {
    claim = LpUnbounded{io::vector_from_json(sol.at("ray")), io::vector_from_json(sol.at("point"))};
  } else {
    refuse(ErrorCode::kParse, "unknown status " + status);
  }
  if (verify_lp_solution(s.lp, claim)) return {true, ""};
  return {false, "certificate does not verify"};
}

Verdict verify_approx(const ApproxProblem& problem, const Json& sol) {
  const Vector x = io::vector_from_json(sol.at("x"));
  if (x.size() != problem.arity()) return {false, "x has the wrong length"};
  const Rational value = io::rational_from_json(sol.at("value"));
  if (evaluate_objective(problem, x) != value) return {false, "value does not match the objective at x"};
  if (solve_approx(problem).value != value) return {false, "value is not the optimum"};
  return {true, ""};
}

// ---------------------------------------------------------------------------
// Text rendering.

bool scalar_array(const Json& j) {
  for (const auto& x : j) {
    if (x.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_text(const Json& j, const std::string& indent, std::string& out) {
  for (const auto& [key, value] : j.items()) {
    out += indent + key + ":";
    if (value.is_object()) {
      out += "\n";
      render_text(value, indent + "  ", out);
    } else if (value.is_array() && scalar_array(value)) {
      for (const auto& x : value) out += " " + scalar_text(x);
      out += "\n";
    } else if (value.is_array()) {
      out += "\n";
      for (const auto& row : value) {
        if (row.is_array() && scalar_array(row)) {
          out += indent + " ";
          for (const auto& x : row) out += " " + scalar_text(x);
          out += "\n";
        } else if (row.is_object()) {
          render_text(row, indent + "  ", out);
          out += indent + "  --\n";
        } else {
          out += indent + "  " + scalar_text(row) + "\n";
        }
      }
    } else {
      out += " " + scalar_text(value) + "\n";
    }
  }
}

int exit_for(const Error& e) { return e.code() == ErrorCode::kInternal ? kExitInternal : kExitInput; }

}  // namespace

Outcome solve(const ProblemFile& problem, const std::optional<std::string>& via) {
  const std::string path = via.value_or(std::string(default_path(problem.kind)));
  const auto it = path_table().find(path);
  if (it == path_table().end()) refuse(ErrorCode::kInvalidPath, "unknown path token \"" + path + "\"");
  if (it->second != problem.kind) {
    refuse(ErrorCode::kInvalidPath,
           "path \"" + path + "\" does not apply to a " + std::string(io::to_string(problem.kind)) + " problem");
  }
  switch (problem.kind) {
    case ProblemKind::kGame:
      return solve_game_file(problem, path);
    case ProblemKind::kLp:
      return solve_lp_file(problem, path);
    case ProblemKind::kChebyshev:
    case ProblemKind::kL1:
      return solve_approx_file(problem, path);
  }
  refuse(ErrorCode::kInternal, "unhandled problem kind");
}

Outcome reduce(const ProblemFile& problem, std::string_view target) {
  const ProblemKind to = io::parse_kind(target);
  const std::string arrow = std::string(io::to_string(problem.kind)) + " -> " + std::string(io::to_string(to));
  const Json source = io::to_json(problem);

  if (problem.kind == ProblemKind::kGame && (to == ProblemKind::kChebyshev || to == ProblemKind::kL1)) {
    FitReduction r = game_to_fit(prepare_game(problem.game().payoff()), to == ProblemKind::kL1);
    return {kExitOk, io::to_json(io::make_approx_file(std::move(r.problem), std::move(r.record)))};
  }
  if (problem.kind == ProblemKind::kGame && to == ProblemKind::kLp) {
    Json rec;
    rec["from"] = "game";
    rec["to"] = "lp";
    rec["payoff"] = io::to_json(problem.game().payoff());
    return {kExitOk, io::to_json(io::make_lp_file(game_to_lp_pair(problem.game()).row, std::move(rec)))};
  }
  if (problem.kind == ProblemKind::kLp && to == ProblemKind::kGame) {
    const Standardized s = lp_to_standard(problem.lp());
    Json rec;
    rec["from"] = "lp";
    rec["to"] = "game";
    rec["rows"] = s.lp.A.rows();
    rec["cols"] = s.lp.A.cols();
    rec["source"] = source;
    return {kExitOk, io::to_json(io::make_game_file(MatrixGame(standard_lp_to_game(s.lp)), std::move(rec)))};
  }
  if ((problem.kind == ProblemKind::kChebyshev || problem.kind == ProblemKind::kL1) && to == ProblemKind::kLp) {
    ApproxLp r = problem.kind == ProblemKind::kChebyshev ? cheb_to_lp(problem.approx()) : l1_to_lp(problem.approx());
    Json rec;
    rec["from"] = std::string(io::to_string(problem.kind));
    rec["to"] = "lp";
    rec["arity"] = r.map.arity;
    rec["auxiliary"] = r.map.auxiliary;
    rec["source"] = source;
    return {kExitOk, io::to_json(io::make_lp_file(std::move(r.lp), std::move(rec)))};
  }
  if (problem.kind == ProblemKind::kL1 && to == ProblemKind::kChebyshev) {
    Json rec;
    rec["from"] = "l1";
    rec["to"] = "chebyshev";
    rec["method"] = "naive";
    rec["source"] = source;
    return {kExitOk, io::to_json(io::make_approx_file(l1_to_cheb_naive(problem.approx()), std::move(rec)))};
  }
  refuse(ErrorCode::kUnsupportedArrow, "unsupported arrow " + arrow);
}

Outcome verify(const ProblemFile& problem, const Json& solution) {
  if (!solution.is_object() || !solution.contains("problem")) {
    refuse(ErrorCode::kParse, "solution file has no \"problem\" field");
  }
  const std::string kind = solution.at("problem").get<std::string>();
  if (kind != io::to_string(problem.kind)) {
    refuse(ErrorCode::kDimensionMismatch,
           "kind mismatch: problem is " + std::string(io::to_string(problem.kind)) + ", solution is " + kind);
  }
  Verdict v;
  try {
    switch (problem.kind) {
      case ProblemKind::kGame:
        v = verify_game(problem.game(), solution);
        break;
      case ProblemKind::kLp:
        v = verify_lp(problem.lp(), solution);
        break;
      case ProblemKind::kChebyshev:
      case ProblemKind::kL1:
        v = verify_approx(problem.approx(), solution);
        break;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNegativeEntry && e.code() != ErrorCode::kSumNotOne) throw;
    v = {false, e.what()};
  } catch (const nlohmann::json::exception& e) {
    refuse(ErrorCode::kParse, std::string("solution file: ") + e.what());
  }
  Json out;
  out["kind"] = "verification";
  out["problem"] = kind;
  out["valid"] = v.valid;
  if (!v.valid) out["reason"] = v.reason;
  return {v.valid ? kExitOk : kExitNegative, std::move(out)};
}

Outcome demo() {
  const Matrix rps{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  Json out;
  out["kind"] = "demo";
  out["game"] = io::to_json(rps);
  out["equilibrium"] = equilibrium_json(solve_game(MatrixGame(rps)));

  const ChebyshevReduction cheb = game_to_chebyshev(rps);
  const ApproxSolution cs = solve_approx(*cheb.problem);
  std::vector<AffineFunction> literal = cheb.problem->functions();
  literal.back() = AffineFunction{Rational(0), Vector(3, Rational(-1))};
  Json jc;
  jc["functions"] = cheb.problem->size();
  jc["optimum"] = io::to_json(cs.value);
  jc["argmin"] = io::to_json(cs.x);
  jc["strategy"] = io::to_json(chebyshev_argmin_to_strategy(*cheb.problem, cs.x, cheb.record).weights());
  jc["objective_at_zero"] = io::to_json(evaluate_objective(*cheb.problem, Vector(3)));
  jc["literal_closing_objective_at_zero"] =
      io::to_json(evaluate_objective(ApproxProblem(Norm::kSup, literal), Vector(3)));
  out["chebyshev"] = std::move(jc);

  const L1Reduction l1 = game_to_l1(rps);
  const ApproxSolution ls = solve_approx(*l1.problem);
  Json jl;
  jl["functions"] = l1.problem->size();
  jl["optimum"] = io::to_json(ls.value);
  jl["argmin"] = io::to_json(ls.x);
  jl["strategy"] = io::to_json(l1_argmin_to_strategy(*l1.problem, ls.x, l1.record).weights());
  out["l1"] = std::move(jl);

  // max x  s.t.  x <= 1, x >= 0 embeds as the same 3 x 3 game.
  LinearProgram lp;
  lp.sense = Sense::kMax;
  lp.objective = {Rational(0), Vector{Rational(1)}};
  lp.constraints.push_back({{Rational(0), Vector{Rational(1)}}, Relation::kLe, {Rational(1), Vector{Rational(0)}}});
  lp.nonnegative = {true};
  const GamePipelineTrace t = solve_lp_via_game_traced(lp);
  Json ja;
  ja["lp"] = io::to_json(io::make_lp_file(lp));
  ja["game"] = io::to_json(t.game);
  ja["alpha"] = io::to_json(t.alpha.alpha);
  ja["modified"] = io::to_json(t.modified);
  ja["modified_value"] = io::to_json(t.modified_value);
  if (t.recovered) ja["recovered"] = io::to_json(t.recovered->weights());
  ja = lp_solution_fields(std::move(ja), t.solution);
  out["alpha_pipeline"] = std::move(ja);
  return {kExitOk, std::move(out)};
}

std::string render(const Json& document, Format format) {
  if (format == Format::kJson) return io::dump(document);
  std::string out;
  render_text(document, "", out);
  return out;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Exact solver for matrix games, linear programs and Chebyshev / LAD fits", "gamefit"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output,-o", output, "Write to this file instead of stdout");

  std::string input;
  std::string solution;
  std::optional<std::string> via;
  std::string target;

  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
  solve_cmd->add_option("input", input, "Problem file")->required();
  solve_cmd->add_option("--via", via,
                        "Reduction path: game:lp, game:cheb, game:l1, lp:simplex, lp:game, chebyshev:lp, "
                        "l1:lp, l1:cheb-naive");
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Write the reduced problem with its recovery record");
  reduce_cmd->add_option("input", input, "Problem file")->required();
  reduce_cmd->add_option("--to", target, "Target kind: game, lp, chebyshev, l1")->required();
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a solution file against a problem file");
  verify_cmd->add_option("problem", input, "Problem file")->required();
  verify_cmd->add_option("solution", solution, "Solution file")->required();
  CLI::App* demo_cmd = app.add_subcommand("demo", "Run the rock-paper-scissors pipeline");
  for (CLI::App* sub : {solve_cmd, reduce_cmd, verify_cmd, demo_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  Outcome outcome;
  try {
    if (*solve_cmd) {
      outcome = solve(io::problem_from_json(io::read_json(input)), via);
    } else if (*reduce_cmd) {
      outcome = reduce(io::problem_from_json(io::read_json(input)), target);
    } else if (*verify_cmd) {
      outcome = verify(io::problem_from_json(io::read_json(input)), io::read_json(solution));
    } else {
      outcome = demo();
    }
  } catch (const Error& e) {
    std::cerr << "gamefit: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "gamefit: " << e.what() << '\n';
    return kExitInternal;
  }

  const std::string text = render(outcome.document, format == "text" ? Format::kText : Format::kJson);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!(out << text)) {
      std::cerr << "gamefit: cannot write " << output << '\n';
      return kExitInput;
    }
  }
  return outcome.exit_code;
}

}  // namespace gamefit::cli
