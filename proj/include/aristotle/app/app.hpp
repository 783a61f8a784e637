#pragma once

// Command layer behind the aristotle-orbits executable. Every command builds
// its complete output in memory first, so a failing run never emits partial
// results.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aristotle/dynamics.hpp"

namespace aristotle::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

inline constexpr std::uint64_t kDefaultSeed = 20240617;

enum class Backend { Rational, Float };
enum class Format { Json, Csv, Text };

/// Bad flags, unreadable input, undefined chart. Maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed point input, with 1-based position.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column,
             const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct RunConfig {
  std::string command;
  std::optional<Backend> backend;  ///< unset: command default
  std::uint64_t seed = kDefaultSeed;
  std::optional<Format> format;    ///< unset: json
  std::optional<std::string> out_path;
  std::optional<std::string> input_path;
  std::vector<std::string> points;  ///< inline dual points "p,e,f,k,y"
  double tol = 1e-12;
  std::size_t count = 1000;
  std::vector<std::string> mutations;

  // simulate
  dynamics::Picture picture = dynamics::Picture::Time;
  std::string step = "1/1000";
  std::string range = "0:10";
  std::size_t samples = 11;
  bool closed_form = false;
  bool dual = false;
  std::string k = "1";
  std::string y = "1";
  std::string q0 = "0";
  std::string p0 = "0";
  std::string tau0 = "0";
  std::string e0 = "0";
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string body;
};

CommandResult run_classify(const RunConfig& config);
CommandResult run_invariants(const RunConfig& config);
CommandResult run_simulate(const RunConfig& config);
CommandResult run_verify(const RunConfig& config);
CommandResult run_errata(const RunConfig& config);
CommandResult run_derive_law(const RunConfig& config);

/// Dispatches config.command; writes the body to config.out_path or `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point (flag parsing included).
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aristotle::app
