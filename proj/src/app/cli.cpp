#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "aristotle/app/io.hpp"

namespace aristotle::app {

namespace {

void write_body(const RunConfig& config, const std::string& body, std::ostream& out) {
  if (!config.out_path) {
    out << body;
    return;
  }
  std::ofstream file(*config.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + *config.out_path + "' for writing");
  file << body;
  if (!file) throw UsageError("failed writing '" + *config.out_path + "'");
}

CommandResult dispatch(const RunConfig& config) {
  if (config.command == "classify") return run_classify(config);
  if (config.command == "invariants") return run_invariants(config);
  if (config.command == "simulate") return run_simulate(config);
  if (config.command == "verify") return run_verify(config);
  if (config.command == "errata") return run_errata(config);
  if (config.command == "derive-law") return run_derive_law(config);
  throw UsageError("unknown command '" + config.command + "'");
}

struct Flags {
  std::string backend;
  std::string format;
  std::string picture = "time";
  std::string out;
  std::string in;
  std::vector<std::string> point_flags;
};

void add_common(CLI::App* sub, RunConfig& config, Flags& flags) {
  sub->add_option("--backend", flags.backend, "Numeric backend")
      ->check(CLI::IsMember({"rational", "float"}));
  sub->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--seed", config.seed, "Seed for every randomized check");
  sub->add_option("--out", flags.out, "Write output to this file instead of stdout");
  sub->add_option("--tol", config.tol, "Relative zero tolerance on the float backend")
      ->check(CLI::NonNegativeNumber);
}

void add_points(CLI::App* sub, RunConfig& config, Flags& flags) {
  sub->add_option("--in", flags.in, "Points file (JSON or CSV), '-' for stdin");
  sub->add_option("--point", flags.point_flags, "Inline point p,e,f,k,y (repeatable)");
  sub->add_option("points", config.points, "Inline points p,e,f,k,y or [p, e, f, k, y]");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto result = dispatch(config);
    write_body(config, result.body, out);
    if (result.exit_code == kExitFailure) err << "verification failed\n";
    return result.exit_code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coadjoint orbits, dynamics and formula audit for the extended Aristotle group",
               "aristotle-orbits"};
  app.require_subcommand(1);
  RunConfig config;
  Flags flags;

  auto* classify = app.add_subcommand("classify", "Classify dual points and report invariants");
  add_common(classify, config, flags);
  add_points(classify, config, flags);

  auto* invariants = app.add_subcommand("invariants", "Report orbit invariants of dual points");
  add_common(invariants, config, flags);
  add_points(invariants, config, flags);

  auto* simulate = app.add_subcommand("simulate", "Sample a time or space trajectory");
  add_common(simulate, config, flags);
  add_points(simulate, config, flags);
  simulate->add_option("--picture", flags.picture, "time or space")
      ->check(CLI::IsMember({"time", "space"}));
  simulate->add_option("--step", config.step, "Integrator step");
  simulate->add_option("--range", config.range, "Parameter range A:B");
  simulate->add_option("--samples", config.samples, "Output rows (0: every integrator step)");
  simulate->add_flag("--closed-form", config.closed_form, "Sample the exact solution");
  simulate->add_flag("--dual", config.dual, "Follow the flow on the whole dual space");
  simulate->add_option("--k", config.k, "Hooke constant");
  simulate->add_option("--y", config.y, "Yank");
  simulate->add_option("--q0", config.q0, "Initial position (time picture)");
  simulate->add_option("--p0", config.p0, "Initial momentum");
  simulate->add_option("--tau0", config.tau0, "Initial time coordinate (space picture)");
  simulate->add_option("--e0", config.e0, "Initial energy");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  add_common(verify, config, flags);
  verify->add_option("--count", config.count, "Random samples per check");
  verify->add_option("--mutate", config.mutations, "Inject a known defect by formula id");

  auto* errata = app.add_subcommand("errata", "Audit printed formulas against derived ones");
  add_common(errata, config, flags);
  errata->add_option("--count", config.count, "Random points per finding");

  auto* derive = app.add_subcommand("derive-law", "Reconstruct the product law as polynomials");
  add_common(derive, config, flags);
  derive->add_option("--count", config.count, "Fresh random points for verification");

  // CLI11 splits any "[a,b,...]" argument into a list; a leading space keeps
  // JSON points intact (the point parser trims it again).
  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) {
    std::string a = argv[i];
    if (a.size() > 1 && a.front() == '[' && a.back() == ']') a.insert(a.begin(), ' ');
    args.push_back(std::move(a));
  }

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!flags.backend.empty()) {
    config.backend = flags.backend == "float" ? Backend::Float : Backend::Rational;
  }
  if (!flags.format.empty()) {
    static const std::map<std::string, Format> formats = {
        {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
    config.format = formats.at(flags.format);
  }
  config.picture = flags.picture == "space" ? dynamics::Picture::Space : dynamics::Picture::Time;
  if (!flags.out.empty()) config.out_path = flags.out;
  if (!flags.in.empty()) config.input_path = flags.in;
  config.points.insert(config.points.begin(), flags.point_flags.begin(), flags.point_flags.end());
  return run(config, out, err);
}

}  // namespace aristotle::app
