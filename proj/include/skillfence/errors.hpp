#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skillfence {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (dictionary lines, CSV rows, JSON documents).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& msg) : Error(msg), line_(-1) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A phrase contains words with no dictionary entry and no override.
class OovError : public Error {
 public:
  explicit OovError(std::vector<std::string> words)
      : Error(format(words)), words_(std::move(words)) {}

  const std::vector<std::string>& words() const { return words_; }

 private:
  static std::string format(const std::vector<std::string>& words) {
    std::string msg = "out-of-vocabulary words:";
    for (const auto& w : words) msg += " " + w;
    return msg;
  }

  std::vector<std::string> words_;
};

// Inputs violate a structural contract (duplicate ids, version mismatch, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace skillfence
