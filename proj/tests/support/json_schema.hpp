#pragma once

// Validator for the subset of JSON Schema used by docs/schemas: type, enum,
// properties, required, additionalProperties, items, min/maxItems,
// minProperties, minimum, maximum, anyOf and $ref into sibling files.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

class Validator {
 public:
  explicit Validator(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Empty on success, otherwise one line per violation.
  std::vector<std::string> validate(const json& doc, const std::string& schema_file) {
    errors_.clear();
    check(doc, load(schema_file), schema_file, "$");
    return errors_;
  }

 private:
  const json& load(const std::string& file) {
    auto it = cache_.find(file);
    if (it != cache_.end()) return it->second;
    std::ifstream in(dir_ / file);
    if (!in) throw std::runtime_error("missing schema " + file);
    return cache_.emplace(file, json::parse(in)).first->second;
  }

  const json& resolve(const std::string& ref, const std::string& current, std::string& file) {
    const auto hash = ref.find('#');
    file = hash == 0 ? current : ref.substr(0, hash);
    const json& root = load(file);
    if (hash == std::string::npos) return root;
    return root.at(json::json_pointer(ref.substr(hash + 1)));
  }

  static bool has_type(const json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    if (type == "null") return v.is_null();
    return false;
  }

  void fail(const std::string& path, const std::string& what) { errors_.push_back(path + ": " + what); }

  void check(const json& v, const json& s, const std::string& file, const std::string& path) {
    if (s.contains("$ref")) {
      std::string target;
      const json& sub = resolve(s["$ref"], file, target);
      check(v, sub, target, path);
    }
    if (s.contains("type") && !has_type(v, s["type"])) {
      fail(path, "expected " + s["type"].get<std::string>());
      return;
    }
    if (s.contains("enum")) {
      bool found = false;
      for (const auto& e : s["enum"]) found = found || e == v;
      if (!found) fail(path, "value " + v.dump() + " not in enum");
    }
    if (s.contains("anyOf")) {
      bool any = false;
      for (const auto& alt : s["anyOf"]) {
        Validator probe(dir_);
        probe.cache_ = cache_;
        probe.check(v, alt, file, path);
        any = any || probe.errors_.empty();
      }
      if (!any) fail(path, "matches no alternative");
    }
    if (v.is_number()) {
      if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) fail(path, "below minimum");
      if (s.contains("maximum") && v.get<double>() > s["maximum"].get<double>()) fail(path, "above maximum");
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) fail(path, "too few items");
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) fail(path, "too many items");
      if (s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i)
          check(v[i], s["items"], file, path + "[" + std::to_string(i) + "]");
      }
    }
    if (v.is_object()) {
      if (s.contains("minProperties") && v.size() < s["minProperties"].get<std::size_t>())
        fail(path, "too few properties");
      if (s.contains("required")) {
        for (const auto& r : s["required"])
          if (!v.contains(r.get<std::string>())) fail(path, "missing " + r.get<std::string>());
      }
      const json props = s.value("properties", json::object());
      for (const auto& [key, value] : v.items()) {
        const std::string sub = path + "." + key;
        if (props.contains(key)) {
          check(value, props[key], file, sub);
        } else if (s.contains("additionalProperties")) {
          const auto& extra = s["additionalProperties"];
          if (extra.is_boolean()) {
            if (!extra.get<bool>()) fail(sub, "unexpected property");
          } else {
            check(value, extra, file, sub);
          }
        }
      }
    }
  }

  std::filesystem::path dir_;
  std::map<std::string, json> cache_;
  std::vector<std::string> errors_;
};

}  // namespace schema_check
