#include "aristotle/app/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace aristotle::app {

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Collects scalar leaves of depth-1 or depth-2 arrays. Leaf positions are
/// not exposed by the parser, so values are located by entry index.
class PointSax : public nlohmann::json_sax<json> {
 public:
  bool null() override { return fail("null is not a number"); }
  bool boolean(bool) override { return fail("boolean is not a number"); }
  bool number_integer(number_integer_t v) override { return leaf(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return leaf(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& s) override { return leaf(s); }
  bool string(string_t& s) override { return leaf(s); }
  bool binary(binary_t&) override { return fail("binary value"); }
  bool start_object(std::size_t) override { return fail("objects are not accepted"); }
  bool key(string_t&) override { return fail("objects are not accepted"); }
  bool end_object() override { return fail("objects are not accepted"); }

  bool start_array(std::size_t) override {
    ++depth_;
    if (depth_ > 2) return fail("arrays nested deeper than two levels");
    if (depth_ == 2) {
      if (flat_) return fail("mixed scalars and arrays");
      nested_ = true;
      current_.clear();
    }
    return true;
  }

  bool end_array() override {
    if (depth_ == 2 || (depth_ == 1 && flat_)) {
      if (current_.size() != 5) {
        return fail("expected 5 components [p, e, f, k, y], got " + std::to_string(current_.size()));
      }
      RawPoint p;
      std::copy(current_.begin(), current_.end(), p.values.begin());
      p.entry = points_.size() + 1;
      points_.push_back(std::move(p));
      current_.clear();
    }
    --depth_;
    return true;
  }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    syntax_offset_ = position;
    message_ = ex.what();
    return false;
  }

  [[nodiscard]] const std::vector<RawPoint>& points() const { return points_; }
  [[nodiscard]] const std::string& message() const { return message_; }
  [[nodiscard]] std::optional<std::size_t> syntax_offset() const { return syntax_offset_; }
  [[nodiscard]] std::size_t failed_entry() const { return points_.size() + 1; }

 private:
  bool leaf(const std::string& text) {
    if (depth_ == 0) return fail("expected an array");
    if (depth_ == 1) {
      if (nested_) return fail("mixed scalars and arrays");
      flat_ = true;
    }
    current_.push_back(text);
    return true;
  }

  bool fail(std::string msg) {
    message_ = std::move(msg);
    return false;
  }

  int depth_ = 0;
  bool flat_ = false;
  bool nested_ = false;
  std::vector<std::string> current_;
  std::vector<RawPoint> points_;
  std::string message_;
  std::optional<std::size_t> syntax_offset_;
};

/// Offsets of each point's opening bracket: the inner arrays of a nested
/// list, or the outer array of a single point.
std::vector<std::size_t> entry_offsets(std::string_view text) {
  std::vector<std::size_t> outer, inner;
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '[') {
      ++depth;
      if (depth == 1) outer.push_back(i);
      if (depth == 2) inner.push_back(i);
    } else if (c == ']') {
      --depth;
    }
  }
  return inner.empty() ? outer : inner;
}

std::vector<RawPoint> parse_json_points(std::string_view text, const std::string& source) {
  PointSax sax;
  const bool ok = json::sax_parse(text.begin(), text.end(), &sax);
  if (!ok) {
    if (sax.syntax_offset()) {
      const auto pos = position_of(text, *sax.syntax_offset() == 0 ? 0 : *sax.syntax_offset() - 1);
      throw ParseError(source, pos.line, pos.column, sax.message());
    }
    // Semantic failure: report the opening bracket of the offending entry.
    const auto offsets = entry_offsets(text);
    const std::size_t entry = sax.failed_entry();
    const std::size_t at = entry <= offsets.size() ? offsets[entry - 1]
                                                   : (offsets.empty() ? 0 : offsets.back());
    const auto pos = position_of(text, at);
    throw ParseError(source, pos.line, pos.column,
                     "entry " + std::to_string(entry) + ": " + sax.message());
  }
  auto points = sax.points();
  const auto offsets = entry_offsets(text);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto pos = position_of(text, i < offsets.size() ? offsets[i] : 0);
    points[i].source = source;
    points[i].line = pos.line;
    points[i].column = pos.column;
  }
  if (points.empty()) {
    const auto pos = position_of(text, offsets.empty() ? 0 : offsets.front());
    throw ParseError(source, pos.line, pos.column, "no points in input");
  }
  return points;
}

std::vector<RawPoint> parse_csv_points(std::string_view text, const std::string& source) {
  std::vector<RawPoint> points;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    const auto end = text.find('\n', offset);
    std::string_view line = text.substr(offset, end == std::string_view::npos ? text.size() - offset
                                                                              : end - offset);
    ++line_no;
    offset = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    if (points.empty() && content == "p,e,f,k,y") continue;

    RawPoint p;
    p.source = source;
    p.line = line_no;
    p.column = 1;
    p.entry = points.size() + 1;
    std::size_t field = 0;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      const auto token = line.substr(start, comma == std::string_view::npos ? line.size() - start
                                                                            : comma - start);
      if (field >= 5) {
        throw ParseError(source, line_no, start + 1, "more than 5 fields");
      }
      const auto value = trim(token);
      if (value.empty()) throw ParseError(source, line_no, start + 1, "empty field");
      p.values[field++] = std::string(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (field != 5) {
      throw ParseError(source, line_no, line.size() + 1,
                       "expected 5 fields p,e,f,k,y, got " + std::to_string(field));
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw ParseError(source, 1, 1, "no points in input");
  return points;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column,
                       const std::string& what)
    : UsageError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::vector<RawPoint> parse_points(std::string_view text, const std::string& source) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '[') return parse_json_points(text, source);
  return parse_csv_points(text, source);
}

template <Scalar T>
orbits::DualElement<T> to_dual(const RawPoint& raw) {
  std::array<T, 5> v;
  for (std::size_t i = 0; i < 5; ++i) {
    try {
      v[i] = ScalarTraits<T>::parse(raw.values[i]);
    } catch (const std::exception& e) {
      throw ParseError(raw.source, raw.line, raw.column,
                       "entry " + std::to_string(raw.entry) + ", component " +
                           std::to_string(i + 1) + ": " + e.what());
    }
  }
  return orbits::DualElement<T>::from_array(v);
}

template orbits::DualElement<Rational> to_dual(const RawPoint&);
template orbits::DualElement<double> to_dual(const RawPoint&);

std::vector<RawPoint> collect_points(const RunConfig& config) {
  std::vector<RawPoint> all;
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    const std::string source = "arg" + std::to_string(i + 1);
    const auto pts = parse_points(config.points[i], source);
    all.insert(all.end(), pts.begin(), pts.end());
  }
  if (config.input_path) {
    const auto pts = parse_points(read_file(*config.input_path), *config.input_path);
    all.insert(all.end(), pts.begin(), pts.end());
  }
  if (all.empty()) throw UsageError("no input points; pass POINT arguments or --in PATH");
  return all;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Backend backend_or(const RunConfig& config, Backend fallback) {
  return config.backend.value_or(fallback);
}

Format format_or(const RunConfig& config, Format fallback) {
  return config.format.value_or(fallback);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ += ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      out_ += f;
    } else {
      out_ += '"';
      for (char c : f) {
        if (c == '"') out_ += '"';
        out_ += c;
      }
      out_ += '"';
    }
  }
  out_ += "\r\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace aristotle::app
