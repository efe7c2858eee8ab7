#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spikegraph {

enum class Errc {
  SelfLoop,
  Malformed,
  UnknownVertex,
  DisconnectedGraph,
  MaxTicksExceeded,
  NotAnEdge,
  NotAClique,
  UnknownRoutine,
  DirectedNotSupported,
  InvalidArgument,
};

std::string_view to_string(Errc code);

/// Every library failure is reported as an Error carrying a machine-readable
/// code. Parse errors additionally carry the 1-based input line.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace spikegraph
