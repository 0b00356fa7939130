#include "gamefit/io.hpp"

#include <fstream>
#include <sstream>

#include "gamefit/error.hpp"

namespace gamefit::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Relation parse_relation(const std::string& s) {
  if (s == "<=") return Relation::kLe;
  if (s == ">=") return Relation::kGe;
  if (s == "=" || s == "==") return Relation::kEq;
  bad("unknown relation \"" + s + "\"");
}

Norm parse_norm(const std::string& s) {
  if (s == "sup") return Norm::kSup;
  if (s == "sum") return Norm::kSum;
  bad("unknown norm \"" + s + "\"");
}

ProblemKind infer_kind(const Json& j) {
  if (j.contains("kind")) return parse_kind(j.at("kind").get<std::string>());
  if (j.contains("payoff")) return ProblemKind::kGame;
  if (j.contains("sense")) return ProblemKind::kLp;
  if (j.contains("norm")) {
    return parse_norm(j.at("norm").get<std::string>()) == Norm::kSup ? ProblemKind::kChebyshev
                                                                      : ProblemKind::kL1;
  }
  bad("cannot tell the problem kind");
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kGame: return "game";
    case ProblemKind::kLp: return "lp";
    case ProblemKind::kChebyshev: return "chebyshev";
    case ProblemKind::kL1: return "l1";
  }
  return "?";
}

ProblemKind parse_kind(std::string_view text) {
  if (text == "game") return ProblemKind::kGame;
  if (text == "lp") return ProblemKind::kLp;
  if (text == "chebyshev" || text == "cheb") return ProblemKind::kChebyshev;
  if (text == "l1") return ProblemKind::kL1;
  bad("unknown problem kind \"" + std::string(text) + "\"");
}

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational::parse(j.dump());
  bad("expected a rational string, got " + j.dump());
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vector(i)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a nonempty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  try {
    return Matrix::from_rows(rows);
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json to_json(const AffineFunction& f) {
  Json out;
  out["constant"] = to_json(f.constant);
  out["coeffs"] = to_json(f.coeffs);
  return out;
}

AffineFunction affine_from_json(const Json& j) {
  AffineFunction f;
  f.constant = j.contains("constant") ? rational_from_json(j.at("constant")) : Rational{};
  f.coeffs = vector_from_json(field(j, "coeffs"));
  return f;
}

Json to_json(const ProblemFile& file) {
  Json out;
  out["kind"] = std::string(to_string(file.kind));
  switch (file.kind) {
    case ProblemKind::kGame:
      out["payoff"] = to_json(file.game().payoff());
      break;
    case ProblemKind::kLp: {
      const LinearProgram& lp = file.lp();
      out["sense"] = std::string(to_string(lp.sense));
      out["objective"] = to_json(lp.objective);
      Json cons = Json::array();
      for (const auto& c : lp.constraints) {
        Json jc;
        jc["lhs"] = to_json(c.lhs);
        jc["rel"] = std::string(to_string(c.relation));
        jc["rhs"] = to_json(c.rhs);
        cons.push_back(std::move(jc));
      }
      out["constraints"] = std::move(cons);
      Json flags = Json::array();
      for (std::size_t j = 0; j < lp.arity(); ++j) {
        flags.push_back(!lp.nonnegative.empty() && lp.nonnegative[j]);
      }
      out["nonnegative"] = std::move(flags);
      break;
    }
    case ProblemKind::kChebyshev:
    case ProblemKind::kL1: {
      const ApproxProblem& p = file.approx();
      out["norm"] = std::string(to_string(p.norm()));
      Json fs = Json::array();
      for (const auto& f : p.functions()) fs.push_back(to_json(f));
      out["functions"] = std::move(fs);
      break;
    }
  }
  if (!file.recovery.is_null()) out["recovery"] = file.recovery;
  return out;
}

ProblemFile problem_from_json(const Json& j) {
  if (!j.is_object()) bad("problem file must be a JSON object");
  try {
    const ProblemKind kind = infer_kind(j);
    const Json recovery = j.contains("recovery") ? j.at("recovery") : Json();
    switch (kind) {
      case ProblemKind::kGame:
        return make_game_file(MatrixGame(matrix_from_json(field(j, "payoff"))), recovery);
      case ProblemKind::kLp: {
        LinearProgram lp;
        const std::string sense = field(j, "sense").get<std::string>();
        if (sense != "min" && sense != "max") bad("sense must be \"min\" or \"max\"");
        lp.sense = sense == "min" ? Sense::kMin : Sense::kMax;
        lp.objective = affine_from_json(field(j, "objective"));
        if (j.contains("constraints")) {
          for (const auto& c : j.at("constraints")) {
            lp.constraints.push_back({affine_from_json(field(c, "lhs")),
                                      parse_relation(field(c, "rel").get<std::string>()),
                                      affine_from_json(field(c, "rhs"))});
          }
        }
        if (j.contains("nonnegative")) {
          for (const auto& b : j.at("nonnegative")) lp.nonnegative.push_back(b.get<bool>());
        } else {
          lp.nonnegative.assign(lp.arity(), false);
        }
        lp.check();
        return make_lp_file(std::move(lp), recovery);
      }
      case ProblemKind::kChebyshev:
      case ProblemKind::kL1: {
        const Norm expected = kind == ProblemKind::kChebyshev ? Norm::kSup : Norm::kSum;
        if (j.contains("norm") && parse_norm(j.at("norm").get<std::string>()) != expected) {
          bad("norm does not match problem kind");
        }
        std::vector<AffineFunction> fs;
        for (const auto& f : field(j, "functions")) fs.push_back(affine_from_json(f));
        return make_approx_file(ApproxProblem(expected, std::move(fs)), recovery);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed problem file: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    bad(e.what());
  }
  bad("unreachable");
}

ProblemFile make_game_file(MatrixGame game, Json recovery) {
  return {ProblemKind::kGame, std::move(game), std::move(recovery)};
}

ProblemFile make_lp_file(LinearProgram lp, Json recovery) {
  return {ProblemKind::kLp, std::move(lp), std::move(recovery)};
}

ProblemFile make_approx_file(ApproxProblem problem, Json recovery) {
  const ProblemKind kind =
      problem.norm() == Norm::kSup ? ProblemKind::kChebyshev : ProblemKind::kL1;
  return {kind, std::move(problem), std::move(recovery)};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gamefit::io
