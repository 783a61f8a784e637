#include <cmath>

#include "aristotle/app/io.hpp"
#include "aristotle/kernels.hpp"

namespace aristotle::app {

namespace {

const std::vector<std::string> kInvariantColumns = {"Psi", "v", "s", "q", "tau", "U", "pi", "force"};

template <Scalar T>
std::vector<std::optional<T>> invariant_values(const orbits::InvariantSet<T>& inv) {
  return {inv.psi, inv.v, inv.s, inv.q, inv.tau, inv.U, inv.pi, inv.force};
}

template <Scalar T>
json invariant_json(const orbits::InvariantSet<T>& inv) {
  json out = json::object();
  out["k"] = to_json(inv.k);
  out["y"] = to_json(inv.y);
  const auto values = invariant_values(inv);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i]) out[kInvariantColumns[i]] = to_json(*values[i]);
  }
  return out;
}

template <Scalar T>
std::vector<std::string> invariant_fields(const orbits::InvariantSet<T>& inv) {
  std::vector<std::string> fields;
  for (const auto& v : invariant_values(inv)) fields.push_back(v ? to_text(*v) : "");
  return fields;
}

template <Scalar T>
json input_json(const orbits::DualElement<T>& mu) {
  json arr = json::array();
  for (const auto& v : mu.as_array()) arr.push_back(to_json(v));
  return arr;
}

Format table_format(const RunConfig& config) {
  const auto format = format_or(config, Format::Json);
  if (format == Format::Text) throw UsageError("--format text is not available for this command");
  return format;
}

/// Float invariants through the batched kernels; presence follows the
/// tolerance-based zero tests of orbits::invariants.
std::vector<orbits::InvariantSet<double>> batch_invariants(
    const std::vector<orbits::DualElement<double>>& points, double tol) {
  kernels::DualBatch batch;
  for (const auto& mu : points) batch.push_back(mu.p, mu.e, mu.f, mu.k, mu.y);
  std::vector<double> psi(points.size()), energy(points.size()), momentum(points.size());
  kernels::psi(batch, psi);
  kernels::internal_energy(batch, energy);
  kernels::internal_momentum(batch, momentum);

  std::vector<orbits::InvariantSet<double>> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto inv = orbits::invariants(points[i], tol);
    inv.psi = psi[i];
    if (inv.U && !std::isnan(energy[i])) inv.U = energy[i];
    if (inv.pi && !std::isnan(momentum[i])) inv.pi = momentum[i];
    out.push_back(inv);
  }
  return out;
}

template <Scalar T>
CommandResult classify_impl(const RunConfig& config, bool with_class) {
  const auto format = table_format(config);
  std::vector<orbits::DualElement<T>> points;
  for (const auto& raw : collect_points(config)) points.push_back(to_dual<T>(raw));

  std::vector<orbits::InvariantSet<T>> invs;
  if constexpr (std::is_same_v<T, double>) {
    invs = batch_invariants(points, config.tol);
  } else {
    for (const auto& mu : points) invs.push_back(orbits::invariants(mu, config.tol));
  }

  CommandResult result;
  if (format == Format::Json) {
    json doc = json::object();
    doc["command"] = config.command;
    doc["backend"] = std::string(ScalarTraits<T>::name);
    json arr = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      json rec = json::object();
      rec["input"] = input_json(points[i]);
      if (with_class) {
        rec["class"] = std::string(orbits::to_string(orbits::classify(points[i], config.tol)));
        rec["orbit_dimension"] = orbits::orbit_dimension(points[i], config.tol);
      }
      rec["invariants"] = invariant_json(invs[i]);
      arr.push_back(std::move(rec));
    }
    doc["points"] = std::move(arr);
    result.body = dump(doc);
  } else {
    CsvWriter csv;
    std::vector<std::string> header = {"p", "e", "f", "k", "y"};
    if (with_class) {
      header.push_back("class");
      header.push_back("orbit_dimension");
    }
    header.insert(header.end(), kInvariantColumns.begin(), kInvariantColumns.end());
    csv.row(header);
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<std::string> row;
      for (const auto& v : points[i].as_array()) row.push_back(to_text(v));
      if (with_class) {
        row.emplace_back(orbits::to_string(orbits::classify(points[i], config.tol)));
        row.push_back(std::to_string(orbits::orbit_dimension(points[i], config.tol)));
      }
      const auto fields = invariant_fields(invs[i]);
      row.insert(row.end(), fields.begin(), fields.end());
      csv.row(row);
    }
    result.body = csv.str();
  }
  return result;
}

}  // namespace

CommandResult run_classify(const RunConfig& config) {
  if (backend_or(config, Backend::Rational) == Backend::Float) {
    return classify_impl<double>(config, true);
  }
  return classify_impl<Rational>(config, true);
}

CommandResult run_invariants(const RunConfig& config) {
  if (backend_or(config, Backend::Rational) == Backend::Float) {
    return classify_impl<double>(config, false);
  }
  return classify_impl<Rational>(config, false);
}

}  // namespace aristotle::app
