#include "aristotle/app/io.hpp"

namespace aristotle::app {

namespace {

using dynamics::Picture;

template <Scalar T>
std::pair<T, T> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range expects A:B, got '" + text + "'");
  const T a = parse_scalar<T>(text.substr(0, colon), "--range start");
  const T b = parse_scalar<T>(text.substr(colon + 1), "--range end");
  if (b < a) throw UsageError("--range end precedes start");
  return {a, b};
}

template <Scalar T>
std::vector<std::string> columns(const dynamics::Trajectory<T>& tr) {
  std::vector<std::string> cols = {tr.param_name};
  cols.insert(cols.end(), tr.state_names.begin(), tr.state_names.end());
  cols.push_back(tr.invariant_name);
  cols.push_back("drift");
  return cols;
}

template <Scalar T>
std::string render(const RunConfig& config, const dynamics::Trajectory<T>& tr,
                   const std::optional<T>& step) {
  const auto format = format_or(config, Format::Json);
  if (format == Format::Text) throw UsageError("--format text is not available for simulate");
  if (format == Format::Csv) {
    CsvWriter csv;
    csv.row(columns(tr));
    for (const auto& s : tr.samples) {
      std::vector<std::string> row = {to_text(s.param)};
      for (const auto& v : s.state) row.push_back(to_text(v));
      row.push_back(to_text(s.invariant));
      row.push_back(to_text(s.drift));
      csv.row(row);
    }
    return csv.str();
  }
  json doc = json::object();
  doc["command"] = "simulate";
  doc["backend"] = std::string(ScalarTraits<T>::name);
  doc["picture"] = std::string(dynamics::to_string(tr.picture));
  doc["method"] = tr.method;
  doc["params"] = {{"k", to_json(tr.params.k)}, {"y", to_json(tr.params.y)}};
  if (step) doc["step"] = to_json(*step);
  doc["columns"] = columns(tr);
  json rows = json::array();
  for (const auto& s : tr.samples) {
    json row = json::array({to_json(s.param)});
    for (const auto& v : s.state) row.push_back(to_json(v));
    row.push_back(to_json(s.invariant));
    row.push_back(to_json(s.drift));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return dump(doc);
}

template <Scalar T>
CommandResult simulate_impl(const RunConfig& config) {
  const auto [start, end] = parse_range<T>(config.range);
  if (config.dual) {
    const auto raw = collect_points(config);
    if (raw.size() != 1) throw UsageError("--dual expects exactly one point p,e,f,k,y");
    const auto mu = to_dual<T>(raw.front());
    const auto tr = dynamics::sample_dual_flow(config.picture, mu, start, end, config.samples);
    return {kExitOk, render<T>(config, tr, std::nullopt)};
  }

  const dynamics::OrbitParams<T> params{parse_scalar<T>(config.k, "--k"),
                                        parse_scalar<T>(config.y, "--y")};
  dynamics::InitialState<T> init;
  if (config.picture == Picture::Time) {
    init = {parse_scalar<T>(config.q0, "--q0"), parse_scalar<T>(config.p0, "--p0"),
            parse_scalar<T>(config.e0, "--e0")};
  } else {
    init = {parse_scalar<T>(config.tau0, "--tau0"), parse_scalar<T>(config.e0, "--e0"),
            parse_scalar<T>(config.p0, "--p0")};
  }

  try {
    if (config.closed_form) {
      const auto tr =
          dynamics::sample_closed_form(config.picture, init, params, start, end, config.samples);
      return {kExitOk, render<T>(config, tr, std::nullopt)};
    }
    const T step = parse_scalar<T>(config.step, "--step");
    if (!(T(0) < step)) throw UsageError("--step must be positive");
    const dynamics::IntegratorConfig<T> integrator{step, start, end, config.samples};
    const auto tr = dynamics::integrate(config.picture, init, params, integrator);
    return {kExitOk, render<T>(config, tr, step)};
  } catch (const dynamics::ChartUndefined& e) {
    throw UsageError(std::string(e.what()) + " (rerun with --dual --point p,e,f,k,y)");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

CommandResult run_simulate(const RunConfig& config) {
  if (backend_or(config, Backend::Float) == Backend::Rational) return simulate_impl<Rational>(config);
  return simulate_impl<double>(config);
}

}  // namespace aristotle::app
