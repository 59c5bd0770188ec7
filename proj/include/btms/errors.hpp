#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace btms {

// Bad user input: shapes, domains, schema violations, unknown ids.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem and serialization failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incomplete score matrices and other ranking failures.
struct RankingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolyParseError : ValidationError {
  PolyParseError(const std::string& what, std::size_t pos)
      : ValidationError(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

}  // namespace btms
