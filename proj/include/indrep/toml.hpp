#pragma once

#include <map>
#include <string>
#include <vector>

#include "indrep/errors.hpp"

namespace indrep::toml {

/// Scalar or flat-array value of the problem-file grammar.
struct Value {
  enum class Kind { Integer, Boolean, String, Array };
  Kind kind = Kind::Integer;
  long long integer = 0;
  bool boolean = false;
  std::string text;
  std::vector<Value> array;
  int line = 0;
};

struct Table {
  std::map<std::string, Value> values;
  std::map<std::string, Table> subtables;
  std::map<std::string, std::vector<Table>> table_arrays;
  int line = 0;

  bool empty() const {
    return values.empty() && subtables.empty() && table_arrays.empty();
  }
};

/// Parses the TOML-syntax subset used by problem files: comments, [table]
/// and [[array-of-tables]] headers with dotted paths, and key = value lines
/// carrying integers, booleans, quoted strings, or flat arrays of those.
/// Throws ParseError with the offending line number.
Table parse(const std::string& text);

}  // namespace indrep::toml
