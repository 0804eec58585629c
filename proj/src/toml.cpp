#include "indrep/toml.hpp"

#include <cctype>
#include <sstream>

namespace indrep::toml {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Cursor over one logical line.
struct Scanner {
  const std::string& s;
  std::size_t pos = 0;
  int line;

  void skip_space() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= s.size();
  }
  char peek() {
    skip_space();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(line, std::string("expected '") + c + "'");
    ++pos;
  }
};

bool is_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string scan_key(Scanner& sc) {
  sc.skip_space();
  std::string key;
  while (sc.pos < sc.s.size() && is_key_char(sc.s[sc.pos])) key += sc.s[sc.pos++];
  if (key.empty()) fail(sc.line, "expected a key");
  return key;
}

std::vector<std::string> scan_path(Scanner& sc) {
  std::vector<std::string> path{scan_key(sc)};
  while (sc.peek() == '.') {
    ++sc.pos;
    path.push_back(scan_key(sc));
  }
  return path;
}

Value scan_value(Scanner& sc);

Value scan_scalar(Scanner& sc) {
  Value v;
  v.line = sc.line;
  const char c = sc.peek();
  if (c == '"') {
    ++sc.pos;
    v.kind = Value::Kind::String;
    while (sc.pos < sc.s.size() && sc.s[sc.pos] != '"') v.text += sc.s[sc.pos++];
    if (sc.pos >= sc.s.size()) fail(sc.line, "unterminated string");
    ++sc.pos;
    return v;
  }
  if (std::isalpha(static_cast<unsigned char>(c))) {
    const std::string word = scan_key(sc);
    if (word == "true" || word == "false") {
      v.kind = Value::Kind::Boolean;
      v.boolean = word == "true";
      return v;
    }
    fail(sc.line, "bare word '" + word + "' (strings need quotes)");
  }
  if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
    std::string digits;
    if (c == '+' || c == '-') digits += sc.s[sc.pos++];
    while (sc.pos < sc.s.size() &&
           std::isdigit(static_cast<unsigned char>(sc.s[sc.pos])))
      digits += sc.s[sc.pos++];
    if (digits.empty() || digits == "+" || digits == "-")
      fail(sc.line, "malformed integer");
    v.kind = Value::Kind::Integer;
    v.integer = std::stoll(digits);
    return v;
  }
  fail(sc.line, "unrecognized value");
}

Value scan_value(Scanner& sc) {
  if (sc.peek() != '[') return scan_scalar(sc);
  Value v;
  v.line = sc.line;
  v.kind = Value::Kind::Array;
  sc.expect('[');
  if (sc.peek() == ']') {
    ++sc.pos;
    return v;
  }
  while (true) {
    v.array.push_back(scan_scalar(sc));
    const char c = sc.peek();
    if (c == ',') {
      ++sc.pos;
      continue;
    }
    if (c == ']') {
      ++sc.pos;
      return v;
    }
    fail(sc.line, "expected ',' or ']' in array");
  }
}

// Strips a trailing comment, respecting quoted strings.
std::string strip_comment(const std::string& raw) {
  bool quoted = false;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == '"') quoted = !quoted;
    if (raw[k] == '#' && !quoted) return raw.substr(0, k);
  }
  return raw;
}

Table* navigate(Table& root, const std::vector<std::string>& path,
                std::size_t count, int line) {
  Table* t = &root;
  for (std::size_t k = 0; k < count; ++k) {
    auto [it, created] = t->subtables.try_emplace(path[k]);
    if (created) it->second.line = line;
    t = &it->second;
  }
  return t;
}

}  // namespace

Table parse(const std::string& text) {
  Table root;
  Table* current = &root;
  std::istringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string body = strip_comment(raw);
    Scanner sc{body, 0, line};
    if (sc.done()) continue;

    if (sc.peek() == '[') {
      ++sc.pos;
      const bool is_array = sc.peek() == '[';
      if (is_array) ++sc.pos;
      const auto path = scan_path(sc);
      sc.expect(']');
      if (is_array) sc.expect(']');
      if (!sc.done()) fail(line, "trailing characters after table header");
      Table* parent = navigate(root, path, path.size() - 1, line);
      if (is_array) {
        if (parent->subtables.contains(path.back()))
          fail(line, "'" + path.back() + "' is already a table");
        auto& vec = parent->table_arrays[path.back()];
        vec.emplace_back();
        vec.back().line = line;
        current = &vec.back();
      } else {
        if (parent->subtables.contains(path.back()) ||
            parent->table_arrays.contains(path.back()))
          fail(line, "table '" + path.back() + "' defined twice");
        Table& t = parent->subtables[path.back()];
        t.line = line;
        current = &t;
      }
      continue;
    }

    const std::string key = scan_key(sc);
    sc.expect('=');
    Value v = scan_value(sc);
    if (!sc.done()) fail(line, "trailing characters after value");
    if (!current->values.emplace(key, std::move(v)).second)
      fail(line, "key '" + key + "' defined twice");
  }
  return root;
}

}  // namespace indrep::toml
