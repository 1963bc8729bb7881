#pragma once

#include <stdexcept>
#include <string>

namespace deptree {

/// What disqualified an edge list from being a tree. Each defect is
/// reported separately so corpus readers can log precise skip reasons.
enum class TreeDefect {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  WrongEdgeCount,
  DisconnectedOrCyclic,
};

inline const char* to_cstring(TreeDefect d) {
  switch (d) {
    case TreeDefect::SelfLoop: return "self-loop";
    case TreeDefect::DuplicateEdge: return "duplicate-edge";
    case TreeDefect::VertexOutOfRange: return "vertex-out-of-range";
    case TreeDefect::WrongEdgeCount: return "wrong-edge-count";
    case TreeDefect::DisconnectedOrCyclic: return "disconnected-or-cyclic";
  }
  return "unknown";
}

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeDefect defect, const std::string& what)
      : std::runtime_error(what), defect_(defect) {}

  TreeDefect defect() const noexcept { return defect_; }

 private:
  TreeDefect defect_;
};

/// Input-format violation. line is 1-based within the stream being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(long line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

}  // namespace deptree
