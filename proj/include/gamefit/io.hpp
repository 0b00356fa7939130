#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "gamefit/model.hpp"

namespace gamefit::io {

using Json = nlohmann::ordered_json;

enum class ProblemKind { kGame, kLp, kChebyshev, kL1 };

std::string_view to_string(ProblemKind kind);
ProblemKind parse_kind(std::string_view text);

// A problem as stored on disk. `recovery` carries the record a reduction
// wrote so the solution can be pulled back later; it is null otherwise.
struct ProblemFile {
  ProblemKind kind;
  std::variant<MatrixGame, LinearProgram, ApproxProblem> payload;
  Json recovery;

  const MatrixGame& game() const { return std::get<MatrixGame>(payload); }
  const LinearProgram& lp() const { return std::get<LinearProgram>(payload); }
  const ApproxProblem& approx() const { return std::get<ApproxProblem>(payload); }
};

// Numbers are written as strings in the Rational text syntax. Reading also
// accepts bare JSON integers.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);
Json to_json(const AffineFunction& f);
AffineFunction affine_from_json(const Json& j);

Json to_json(const ProblemFile& file);
ProblemFile problem_from_json(const Json& j);

ProblemFile make_game_file(MatrixGame game, Json recovery = nullptr);
ProblemFile make_lp_file(LinearProgram lp, Json recovery = nullptr);
ProblemFile make_approx_file(ApproxProblem problem, Json recovery = nullptr);

Json read_json(const std::filesystem::path& path);
std::string dump(const Json& j);

}  // namespace gamefit::io
