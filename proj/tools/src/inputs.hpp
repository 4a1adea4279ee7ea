#pragma once

#include <string>

#include "qcoh/error.hpp"
#include "qcoh/io.hpp"

namespace qcoh::cli {

/// A description read from a file, or given inline when the argument starts with '{'.
struct Input {
  std::string label;   ///< file name as given, or "<inline>"
  std::string sha256;  ///< digest of the raw bytes
  io::Json value;
};

/// Relative file names are resolved against base_dir when it is nonempty.
/// Errors name the file and the byte offset of the offending token.
Input load_input(const std::string& ref, const std::string& base_dir);

/// Runs `parse` and prefixes any library error with the input label.
template <class F>
auto parse_from(const Input& in, F&& parse) {
  try {
    return parse(in.value);
  } catch (const Error& e) {
    std::string what = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
    throw Error(e.kind(), in.label + ": " + what);
  }
}

}  // namespace qcoh::cli
