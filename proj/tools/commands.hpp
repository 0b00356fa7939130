#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "gamefit/io.hpp"

namespace gamefit::cli {

enum class Format { kJson, kText };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // infeasible, unbounded, or failed verification
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

struct Outcome {
  int exit_code = kExitOk;
  io::Json document;  // null when the command failed before producing output
};

Outcome solve(const io::ProblemFile& problem, const std::optional<std::string>& via);
Outcome reduce(const io::ProblemFile& problem, std::string_view target);
Outcome verify(const io::ProblemFile& problem, const io::Json& solution);
Outcome demo();

std::string render(const io::Json& document, Format format);

// Parses argv, runs one command and writes to stdout/stderr or --output.
int run(int argc, const char* const* argv);

}  // namespace gamefit::cli
