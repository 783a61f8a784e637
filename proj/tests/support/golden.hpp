#pragma once

// Golden-file manifest shared by the CLI tests, the acceptance binary and the
// update-goldens tool. Each entry runs the CLI in process.

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aristotle/app/app.hpp"

namespace golden {

struct Case {
  std::string name;
  std::vector<std::string> args;
  int exit_code = 0;
  std::optional<std::string> stdout_file;  ///< unset: stdout must be empty
  std::optional<std::string> schema;
};

/// Keeps gtest from dumping the raw bytes of a Case in test names.
inline void PrintTo(const Case& c, std::ostream* os) { *os << c.name; }

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline std::vector<Case> load_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw std::runtime_error("cannot read " + (dir / "manifest.json").string());
  const auto doc = nlohmann::json::parse(in);
  std::vector<Case> cases;
  for (const auto& e : doc.at("cases")) {
    Case c;
    c.name = e.at("name");
    c.args = e.at("args").get<std::vector<std::string>>();
    c.exit_code = e.at("exit");
    if (e.contains("stdout") && !e["stdout"].is_null()) c.stdout_file = e["stdout"];
    if (e.contains("schema")) c.schema = e["schema"];
    cases.push_back(std::move(c));
  }
  return cases;
}

inline Outcome run(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"aristotle-orbits"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.exit_code = aristotle::app::main(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

inline std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace golden
