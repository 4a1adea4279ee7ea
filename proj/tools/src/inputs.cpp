#include "inputs.hpp"

#include <filesystem>
#include <fstream>
#include <algorithm>
#include <sstream>

#include "digest.hpp"
#include "qcoh/error.hpp"

namespace qcoh::cli {

namespace {

/// The text just before a byte offset (where the parser gave up), for diagnostics.
std::string excerpt(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  if (end == 0) return "<start of input>";
  std::size_t begin = end > 12 ? end - 12 : 0;
  if (auto nl = text.rfind('\n', end - 1); nl != std::string::npos && nl >= begin) begin = nl + 1;
  return "'" + text.substr(begin, end - begin) + "'";
}

}  // namespace

Input load_input(const std::string& ref, const std::string& base_dir) {
  Input in;
  std::string text;
  if (!ref.empty() && ref.front() == '{') {
    in.label = "<inline>";
    text = ref;
  } else {
    std::filesystem::path p(ref);
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    in.label = ref;
    std::ifstream f(p, std::ios::binary);
    if (!f) throw Error(ErrorKind::Parse, ref + ": cannot open file");
    std::stringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  in.sha256 = sha256_hex(text);
  try {
    in.value = io::Json::parse(text);
  } catch (const io::Json::parse_error& e) {
    std::string reason = e.what();
    if (auto at = reason.find("parse error"); at != std::string::npos) reason = reason.substr(at);
    throw Error(ErrorKind::Parse, in.label + ": malformed JSON near " + excerpt(text, e.byte) + " (" + reason + ")");
  }
  return in;
}

}  // namespace qcoh::cli
