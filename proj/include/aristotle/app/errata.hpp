#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aristotle/app/app.hpp"

namespace aristotle::app {

enum class Verdict { Confirms, Contradicts };

std::string_view to_string(Verdict v);

/// A printed formula compared against its derived counterpart. The residual
/// is printed minus derived, per component, at `sample`.
struct ErrataFinding {
  std::string id;
  std::string printed;
  std::string derived;
  Verdict verdict = Verdict::Confirms;
  nlohmann::ordered_json sample;
  std::vector<std::pair<std::string, std::string>> residual;
  std::size_t checked = 0;        ///< seeded random points evaluated
  std::size_t disagreements = 0;  ///< of those, points with nonzero residual
  std::string note;
};

const std::vector<std::string>& errata_assumptions();

/// Always evaluated on the rational backend.
std::vector<ErrataFinding> errata_findings(const RunConfig& config);

}  // namespace aristotle::app
