#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/io.hpp"

namespace qcoh::cli {

/// One parsed invocation.
struct Job {
  std::string command;  ///< e.g. "ext" or "extension build"
  Field field;
  bool machine = false;
  std::string base_dir;  ///< for relative input names inside a batch manifest

  std::string sheaf, source, target, complex, left, right, decomposition, manifest;
  std::int64_t n = 0, deg = 0, offset = 0;
  bool has_offset = false;
  std::string y = "0", z = "0", seed;
};

struct Report {
  io::Json result = io::Json::object();
  std::vector<std::string> lines;               ///< text rendering
  std::map<std::string, std::string> inputs;    ///< role -> SHA-256
  std::string summary;                          ///< one-line result for batch tables
  int exit_code = 0;
  std::string diagnostic;                       ///< set when exit_code != 0
};

/// Runs a single non-batch command. Library errors propagate as qcoh::Error.
Report run_job(const Job& job);

std::string format_list(const std::vector<std::int64_t>& v);

}  // namespace qcoh::cli
