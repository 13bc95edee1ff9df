#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace teamfit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A task references a skill that no expert in the pool holds.
struct InfeasibleError : Error {
  InfeasibleError(int task, int skill, const std::string& what)
      : Error(what), task(task), skill(skill) {}
  int task;
  int skill;
};

// Brute-force enumeration refused: instance exceeds the oracle size guard.
struct SizeGuardError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::string file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file(std::move(file)),
        line(line) {}
  std::string file;
  int line;
};

struct GenerationError : Error {
  using Error::Error;
};

// LP solver did not reach a verified optimal basic solution.
struct SolverFailureError : Error {
  using Error::Error;
};

}  // namespace teamfit
