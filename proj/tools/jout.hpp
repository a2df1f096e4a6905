#pragma once

#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gfrac::cli {

/// Deterministic JSON emitter: keys keep insertion order, doubles are
/// rendered with %.17g, output uses LF line endings. Identical trees give
/// byte-identical text.
class JsonValue {
 public:
  static JsonValue number(double v) {
    JsonValue j;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    j.scalar_ = buf;
    return j;
  }
  static JsonValue integer(long long v) {
    JsonValue j;
    j.scalar_ = std::to_string(v);
    return j;
  }
  static JsonValue boolean(bool v) {
    JsonValue j;
    j.scalar_ = v ? "true" : "false";
    return j;
  }
  static JsonValue null() {
    JsonValue j;
    j.scalar_ = "null";
    return j;
  }
  static JsonValue str(const std::string& s) {
    JsonValue j;
    j.scalar_ = quote(s);
    return j;
  }
  static JsonValue array() {
    JsonValue j;
    j.is_array_ = true;
    return j;
  }
  static JsonValue object() {
    JsonValue j;
    j.is_object_ = true;
    return j;
  }

  JsonValue& push(JsonValue v) {
    items_.emplace_back("", std::move(v));
    return *this;
  }
  JsonValue& field(const std::string& key, JsonValue v) {
    items_.emplace_back(key, std::move(v));
    return *this;
  }

  std::string dump(int indent = 0) const {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string pad2(static_cast<std::size_t>(indent) + 2, ' ');
    if (is_object_ || is_array_) {
      const char open = is_object_ ? '{' : '[';
      const char close = is_object_ ? '}' : ']';
      if (items_.empty()) return std::string(1, open) + close;
      std::string out(1, open);
      out += '\n';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        out += pad2;
        if (is_object_) out += quote(items_[i].first) + ": ";
        out += items_[i].second.dump(indent + 2);
        if (i + 1 < items_.size()) out += ',';
        out += '\n';
      }
      out += pad + close;
      return out;
    }
    return scalar_;
  }

 private:
  static std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
      }
    }
    out += '"';
    return out;
  }

  std::string scalar_ = "null";
  bool is_array_ = false;
  bool is_object_ = false;
  std::vector<std::pair<std::string, JsonValue>> items_;
};

}  // namespace gfrac::cli
