#pragma once

#include <stdexcept>
#include <string>

namespace tspanner {

enum class Errc {
  LoopEdge,
  VertexOutOfRange,
  Disconnected,
  NotSpanningTree,
  InstanceTooLarge,
  NotOuterplanar,
  NotACycle,
  InvalidPartition,
  PreconditionViolated,
  ParseError,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

enum class OuterplanarityReason {
  NoDegree2Vertex,
  CrossingChords,
  TooManyEdges,
  // A 2-vertex separation pair was collapsed from both sides before the
  // reduction finished, or the final edge does not close a Hamiltonian cycle.
  NotHamiltonian,
};

const char* to_string(OuterplanarityReason reason);

class NotOuterplanar : public Error {
 public:
  explicit NotOuterplanar(OuterplanarityReason reason)
      : Error(Errc::NotOuterplanar, std::string("graph is not outerplanar: ") + to_string(reason)),
        reason_(reason) {}

  OuterplanarityReason reason() const noexcept { return reason_; }

 private:
  OuterplanarityReason reason_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tspanner
