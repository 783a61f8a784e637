#include <iomanip>
#include <sstream>

#include "aristotle/app/io.hpp"
#include "aristotle/polynomial.hpp"
#include "aristotle/rng.hpp"

namespace aristotle::app {

namespace {

using lie::GroupElement;

constexpr std::size_t kVars = 10;
// Products of exponentials in a step-3 nilpotent group are polynomial of
// total degree at most 3 in the coordinates.
constexpr std::size_t kDegree = 3;

const std::vector<std::string> kNames = {"x", "t", "zeta", "a", "b",
                                         "x'", "t'", "zeta'", "a'", "b'"};
const std::vector<std::string> kComponents = {"x", "t", "zeta", "a", "b"};

using Law = GroupElement<Rational> (*)(const GroupElement<Rational>&, const GroupElement<Rational>&);

GroupElement<Rational> law_derived(const GroupElement<Rational>& g, const GroupElement<Rational>& h) {
  return lie::compose(g, h);
}

GroupElement<Rational> law_printed(const GroupElement<Rational>& g, const GroupElement<Rational>& h) {
  return lie::compose_printed(g, h);
}

std::array<Rational, 5> evaluate_law(Law law, std::span<const Rational> v) {
  const GroupElement<Rational> g{v[0], v[1], v[2], v[3], v[4]};
  const GroupElement<Rational> h{v[5], v[6], v[7], v[8], v[9]};
  return law(g, h).as_array();
}

std::vector<Polynomial> reconstruct(Law law) {
  std::vector<Polynomial> out;
  for (std::size_t c = 0; c < kComponents.size(); ++c) {
    out.push_back(interpolate(kVars, kDegree, [&](std::span<const Rational> v) {
      return evaluate_law(law, v)[c];
    }));
  }
  return out;
}

/// Points where some reconstructed component differs from the law.
std::size_t mismatches(Law law, const std::vector<Polynomial>& polys, CounterRng& rng,
                       std::size_t count) {
  std::size_t bad = 0;
  std::vector<Rational> point(kVars);
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& v : point) v = rng.rational();
    const auto want = evaluate_law(law, point);
    for (std::size_t c = 0; c < polys.size(); ++c) {
      if (!(polys[c].evaluate(point) == want[c])) {
        ++bad;
        break;
      }
    }
  }
  return bad;
}

struct Row {
  std::string component;
  std::string monomial;
  Rational derived;
  Rational printed;
  [[nodiscard]] bool agrees() const { return derived == printed; }
};

std::vector<Row> table(const std::vector<Polynomial>& derived, const std::vector<Polynomial>& printed) {
  std::vector<Row> rows;
  const auto order = monomials_up_to(kVars, kDegree);
  for (std::size_t c = 0; c < kComponents.size(); ++c) {
    for (const auto& m : order) {
      const Rational d = derived[c].coefficient(m);
      const Rational p = printed[c].coefficient(m);
      if (d.is_zero() && p.is_zero()) continue;
      rows.push_back({kComponents[c], monomial_name(m, kNames), d, p});
    }
  }
  return rows;
}

std::string verdict(bool agrees) { return agrees ? "CONFIRMS" : "CONTRADICTS"; }

std::string render_text(const std::vector<Polynomial>& derived,
                        const std::vector<Polynomial>& printed, const std::vector<Row>& rows,
                        std::size_t count, std::size_t bad_derived, std::size_t bad_printed) {
  std::ostringstream os;
  os << "Product law (x, t, zeta, a, b)(x', t', zeta', a', b'), exact reconstruction up to "
        "total degree "
     << kDegree << "\n\n";
  for (std::size_t c = 0; c < kComponents.size(); ++c) {
    os << kComponents[c] << "'' derived: " << derived[c].to_string(kNames) << "\n";
    os << std::string(kComponents[c].size(), ' ') << "   printed: " << printed[c].to_string(kNames)
       << "\n";
  }
  os << "\n"
     << std::left << std::setw(10) << "component" << std::setw(14) << "monomial" << std::setw(10)
     << "derived" << std::setw(10) << "printed" << "verdict\n";
  for (const auto& r : rows) {
    os << std::setw(10) << r.component << std::setw(14) << r.monomial << std::setw(10)
       << r.derived.str() << std::setw(10) << r.printed.str() << verdict(r.agrees()) << "\n";
  }
  os << "\nverification: " << count << " random points, " << bad_derived
     << " mismatches (derived), " << bad_printed << " mismatches (printed)\n";
  return os.str();
}

}  // namespace

CommandResult run_derive_law(const RunConfig& config) {
  if (backend_or(config, Backend::Rational) != Backend::Rational) {
    throw UsageError("derive-law is exact; --backend float is not supported");
  }
  const auto derived = reconstruct(&law_derived);
  const auto printed = reconstruct(&law_printed);

  CounterRng rng(config.seed);
  const std::size_t bad_derived = mismatches(&law_derived, derived, rng, config.count);
  const std::size_t bad_printed = mismatches(&law_printed, printed, rng, config.count);
  const int code = bad_derived == 0 && bad_printed == 0 ? kExitOk : kExitFailure;
  const auto rows = table(derived, printed);

  const auto format = format_or(config, Format::Json);
  if (format == Format::Text) {
    return {code, render_text(derived, printed, rows, config.count, bad_derived, bad_printed)};
  }
  if (format == Format::Csv) {
    CsvWriter csv;
    csv.row({"component", "monomial", "derived", "printed", "verdict"});
    for (const auto& r : rows) {
      csv.row({r.component, r.monomial, r.derived.str(), r.printed.str(), verdict(r.agrees())});
    }
    return {code, csv.str()};
  }

  json doc = json::object();
  doc["command"] = "derive-law";
  doc["seed"] = config.seed;
  doc["variables"] = kNames;
  doc["degree_bound"] = kDegree;
  json components = json::array();
  for (std::size_t c = 0; c < kComponents.size(); ++c) {
    json comp = json::object();
    comp["component"] = kComponents[c];
    comp["derived"] = derived[c].to_string(kNames);
    comp["printed"] = printed[c].to_string(kNames);
    comp["verdict"] = verdict(derived[c] == printed[c]);
    json monomials = json::array();
    for (const auto& r : rows) {
      if (r.component != kComponents[c]) continue;
      monomials.push_back({{"monomial", r.monomial},
                           {"derived", r.derived.str()},
                           {"printed", r.printed.str()},
                           {"verdict", verdict(r.agrees())}});
    }
    comp["monomials"] = std::move(monomials);
    components.push_back(std::move(comp));
  }
  doc["components"] = std::move(components);
  doc["verification"] = {{"points", config.count},
                         {"derived_mismatches", bad_derived},
                         {"printed_mismatches", bad_printed},
                         {"passed", code == kExitOk}};
  return {code, dump(doc)};
}

}  // namespace aristotle::app
