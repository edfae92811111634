#pragma once

#include <string>
#include <utility>
#include <vector>

namespace iso {

/// Ordered JSON document tree. Object members keep insertion order so that a
/// report serializes to the same bytes on every run; numbers are formatted at
/// construction time (17 significant digits) for the same reason.
class JsonValue {
 public:
  enum class Kind { Null, Bool, Number, String, Array, Object };

  JsonValue() : kind_(Kind::Null) {}

  static JsonValue boolean(bool b);
  static JsonValue number(double v);          // throws InternalError if non-finite
  static JsonValue integer(long long v);
  static JsonValue integer(unsigned long long v);
  static JsonValue string(std::string s);
  static JsonValue array();
  static JsonValue object();

  Kind kind() const { return kind_; }
  bool isScalar() const {
    return kind_ != Kind::Array && kind_ != Kind::Object;
  }

  /// Appends to an array. Throws InternalError on other kinds.
  void push(JsonValue item);
  /// Adds or replaces an object member, preserving first-insertion order.
  void set(const std::string& key, JsonValue value);

  bool asBool() const { return boolValue_; }
  /// Preformatted text of a number (exactly what the writer emits).
  const std::string& numberText() const { return text_; }
  const std::string& asString() const { return text_; }
  const std::vector<JsonValue>& items() const { return items_; }
  const std::vector<std::pair<std::string, JsonValue>>& members() const {
    return members_;
  }

 private:
  Kind kind_;
  bool boolValue_ = false;
  std::string text_;  // number text or string payload
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;
};

/// Serializes with two-space indentation and LF newlines, ending in a newline.
std::string writeJson(const JsonValue& root);

/// %.17g; rejects NaN and infinities so they can never reach a report.
std::string formatNumber(double v);

/// RFC-4180 style field quoting (only when the field needs it).
std::string csvField(const std::string& field);
std::string csvRow(const std::vector<std::string>& fields);

/// Indented key/value rendering of the JSON tree. `color` adds ANSI accents;
/// callers should pass false when NO_COLOR is set or output is not a tty.
std::string renderHuman(const JsonValue& root, bool color);

}  // namespace iso
