#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aristotle/app/app.hpp"
#include "aristotle/orbits.hpp"

namespace aristotle::app {

using json = nlohmann::ordered_json;

/// One dual point as written in the input, with its location.
struct RawPoint {
  std::array<std::string, 5> values;
  std::string source;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t entry = 1;  ///< 1-based index within its source
};

/// Accepts a JSON array [p, e, f, k, y], a JSON array of such arrays, or CSV
/// rows "p,e,f,k,y" (optional header "p,e,f,k,y", '#' comments). JSON
/// entries may be numbers or strings such as "3/2".
std::vector<RawPoint> parse_points(std::string_view text, const std::string& source);

/// Converts raw tokens; number errors are reported at the point's position.
template <Scalar T>
orbits::DualElement<T> to_dual(const RawPoint& raw);

/// Inline points from the command line plus --in, in that order.
std::vector<RawPoint> collect_points(const RunConfig& config);

std::string read_file(const std::string& path);

Backend backend_or(const RunConfig& config, Backend fallback);
Format format_or(const RunConfig& config, Format fallback);

/// Rational values become exact strings, doubles become JSON numbers.
template <Scalar T>
json to_json(const T& v) {
  if constexpr (ScalarTraits<T>::exact) {
    return ScalarTraits<T>::to_string(v);
  } else {
    return v;
  }
}

template <Scalar T>
std::string to_text(const T& v) {
  return ScalarTraits<T>::to_string(v);
}

template <Scalar T>
T parse_scalar(const std::string& text, std::string_view what) {
  try {
    return ScalarTraits<T>::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

/// RFC 4180 writer: CRLF line ends, quoting only when required.
class CsvWriter {
 public:
  void row(const std::vector<std::string>& fields);
  [[nodiscard]] const std::string& str() const { return out_; }

 private:
  std::string out_;
};

std::string dump(const json& j);

}  // namespace aristotle::app
