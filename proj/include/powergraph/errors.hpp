#pragma once

#include <stdexcept>
#include <string>

namespace powergraph {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A multiplication table fails one of the group axioms.
class NotAGroup : public Error {
 public:
  explicit NotAGroup(const std::string& what) : Error(what) {}
};

// An element handed to a group operation does not belong to the group
// (wrong family, index out of range, or a rational outside the subgroup).
class ElementNotInGroup : public Error {
 public:
  explicit ElementNotInGroup(const std::string& what) : Error(what) {}
};

// Requested window would exceed the configured resource cap.
class WindowTooLarge : public Error {
 public:
  explicit WindowTooLarge(const std::string& what) : Error(what) {}
};

// A vertex label or index is not present in a graph.
class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& what) : Error(what) {}
};

// A claimed partition does not partition the vertex set, or violates the
// some-pair/every-pair adjacency consistency required of twin quotients.
class PartitionMismatch : public Error {
 public:
  explicit PartitionMismatch(const std::string& what) : Error(what) {}
};

// A map claimed to be an isomorphism fails verification.
class NotAnIsomorphism : public Error {
 public:
  explicit NotAnIsomorphism(const std::string& what) : Error(what) {}
};

// An operation that only makes sense for infinite-order elements was handed
// a component containing elements of finite order.
class TorsionComponent : public Error {
 public:
  explicit TorsionComponent(const std::string& what) : Error(what) {}
};

// Structural hypothesis of a decision procedure does not hold for the input.
class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

// A pair of vertices required to be adjacent is not.
class NotAdjacent : public Error {
 public:
  explicit NotAdjacent(const std::string& what) : Error(what) {}
};

// The group family does not support the requested operation.
class UnsupportedFamily : public Error {
 public:
  explicit UnsupportedFamily(const std::string& what) : Error(what) {}
};

// A documented precondition of an operation is violated.
class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

// Malformed configuration input (CLI flags, JSON group descriptions).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace powergraph
