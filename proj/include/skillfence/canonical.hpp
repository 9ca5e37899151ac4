#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "skillfence/errors.hpp"

namespace skillfence {

// nlohmann::json keeps object keys in std::map order, so a compact dump is
// already canonical: sorted keys, no insignificant whitespace. All files the
// toolkit writes go through canonical_dump so byte-level comparisons (delta
// round trips, golden files, rerun determinism) are meaningful.
using Json = nlohmann::json;

inline std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

inline Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + path.string());
  return j;
}

inline void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, canonical_dump(j));
}

}  // namespace skillfence
