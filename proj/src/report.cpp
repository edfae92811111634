#include "iso/report.hpp"

#include <cmath>
#include <cstdio>

#include "iso/errors.hpp"

namespace iso {

JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.kind_ = Kind::Bool;
  v.boolValue_ = b;
  return v;
}

JsonValue JsonValue::number(double value) {
  JsonValue v;
  v.kind_ = Kind::Number;
  v.text_ = formatNumber(value);
  return v;
}

JsonValue JsonValue::integer(long long value) {
  JsonValue v;
  v.kind_ = Kind::Number;
  v.text_ = std::to_string(value);
  return v;
}

JsonValue JsonValue::integer(unsigned long long value) {
  JsonValue v;
  v.kind_ = Kind::Number;
  v.text_ = std::to_string(value);
  return v;
}

JsonValue JsonValue::string(std::string s) {
  JsonValue v;
  v.kind_ = Kind::String;
  v.text_ = std::move(s);
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::Array;
  return v;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Object;
  return v;
}

void JsonValue::push(JsonValue item) {
  if (kind_ != Kind::Array) throw InternalError("push on non-array JSON value");
  items_.push_back(std::move(item));
}

void JsonValue::set(const std::string& key, JsonValue value) {
  if (kind_ != Kind::Object) throw InternalError("set on non-object JSON value");
  for (auto& member : members_) {
    if (member.first == key) {
      member.second = std::move(value);
      return;
    }
  }
  members_.emplace_back(key, std::move(value));
}

std::string formatNumber(double v) {
  if (!std::isfinite(v)) {
    throw InternalError("non-finite value reached report serialization");
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string out = buf;
  if (out == "-0") out = "0";
  return out;
}

namespace {

void appendEscaped(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void writeValue(const JsonValue& v, int indent, std::string& out) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  const std::string childPad(static_cast<size_t>(indent + 1) * 2, ' ');
  switch (v.kind()) {
    case JsonValue::Kind::Null:
      out += "null";
      break;
    case JsonValue::Kind::Bool:
      out += v.asBool() ? "true" : "false";
      break;
    case JsonValue::Kind::Number:
      out += v.numberText();
      break;
    case JsonValue::Kind::String:
      appendEscaped(v.asString(), out);
      break;
    case JsonValue::Kind::Array: {
      if (v.items().empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (size_t i = 0; i < v.items().size(); ++i) {
        out += childPad;
        writeValue(v.items()[i], indent + 1, out);
        if (i + 1 < v.items().size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += ']';
      break;
    }
    case JsonValue::Kind::Object: {
      if (v.members().empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      for (size_t i = 0; i < v.members().size(); ++i) {
        out += childPad;
        appendEscaped(v.members()[i].first, out);
        out += ": ";
        writeValue(v.members()[i].second, indent + 1, out);
        if (i + 1 < v.members().size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += '}';
      break;
    }
  }
}

}  // namespace

std::string writeJson(const JsonValue& root) {
  std::string out;
  writeValue(root, 0, out);
  out += '\n';
  return out;
}

std::string csvField(const std::string& field) {
  bool needsQuotes = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needsQuotes = true;
      break;
    }
  }
  if (!needsQuotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string csvRow(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csvField(fields[i]);
  }
  out += '\n';
  return out;
}

namespace {

const char* kKeyColor = "\x1b[36m";
const char* kTrueColor = "\x1b[32m";
const char* kFalseColor = "\x1b[31m";
const char* kReset = "\x1b[0m";

std::string scalarText(const JsonValue& v, bool color) {
  switch (v.kind()) {
    case JsonValue::Kind::Null:
      return "null";
    case JsonValue::Kind::Bool:
      if (color) {
        return std::string(v.asBool() ? kTrueColor : kFalseColor) +
               (v.asBool() ? "true" : "false") + kReset;
      }
      return v.asBool() ? "true" : "false";
    case JsonValue::Kind::Number:
      return v.numberText();
    case JsonValue::Kind::String:
      return v.asString();
    default:
      throw InternalError("scalarText on composite JSON value");
  }
}

bool allScalar(const JsonValue& array) {
  for (const JsonValue& item : array.items()) {
    if (!item.isScalar()) return false;
  }
  return true;
}

std::string inlineArray(const JsonValue& array, bool color) {
  std::string out = "[";
  for (size_t i = 0; i < array.items().size(); ++i) {
    if (i > 0) out += ", ";
    out += scalarText(array.items()[i], color);
  }
  out += "]";
  return out;
}

void renderNode(const JsonValue& v, int indent, bool color, std::string& out);

void renderMember(const std::string& key, const JsonValue& v, int indent,
                  bool color, std::string& out) {
  out.append(static_cast<size_t>(indent) * 2, ' ');
  if (color) out += kKeyColor;
  out += key;
  if (color) out += kReset;
  out += ':';
  if (v.isScalar()) {
    out += ' ';
    out += scalarText(v, color);
    out += '\n';
  } else if (v.kind() == JsonValue::Kind::Array && v.items().empty()) {
    out += " (none)\n";
  } else if (v.kind() == JsonValue::Kind::Array && allScalar(v)) {
    out += ' ';
    out += inlineArray(v, color);
    out += '\n';
  } else if (v.kind() == JsonValue::Kind::Object && v.members().empty()) {
    out += " {}\n";
  } else {
    out += '\n';
    renderNode(v, indent + 1, color, out);
  }
}

void renderNode(const JsonValue& v, int indent, bool color, std::string& out) {
  if (v.kind() == JsonValue::Kind::Object) {
    for (const auto& member : v.members()) {
      renderMember(member.first, member.second, indent, color, out);
    }
    return;
  }
  if (v.kind() == JsonValue::Kind::Array) {
    for (const JsonValue& item : v.items()) {
      if (item.isScalar()) {
        out.append(static_cast<size_t>(indent) * 2, ' ');
        out += "- ";
        out += scalarText(item, color);
        out += '\n';
      } else {
        // Composite list items render their body indented one extra level,
        // with a dash marking the start of each element.
        out.append(static_cast<size_t>(indent) * 2, ' ');
        out += "-\n";
        renderNode(item, indent + 1, color, out);
      }
    }
    return;
  }
  out.append(static_cast<size_t>(indent) * 2, ' ');
  out += scalarText(v, color);
  out += '\n';
}

}  // namespace

std::string renderHuman(const JsonValue& root, bool color) {
  std::string out;
  renderNode(root, 0, color, out);
  return out;
}

}  // namespace iso
