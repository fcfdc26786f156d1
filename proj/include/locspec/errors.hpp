#pragma once

#include <stdexcept>
#include <string>

namespace locspec {

/// Malformed input document (edge list, vertex set file, CLI set syntax).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural violation: self-loop, duplicate edge, disconnected graph,
/// index out of range.
struct GraphError : std::runtime_error {
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// A quantity the theory guarantees came out wrong numerically.  Signals a
/// tolerance misconfiguration (or a genuine bug), never a property of the
/// input graph.
struct InternalInconsistency : std::runtime_error {
  explicit InternalInconsistency(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace locspec
