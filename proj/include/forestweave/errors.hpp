#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forestweave {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based; 0 when the input has no lines.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("parse error at line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class LoopError : public Error {
 public:
  explicit LoopError(std::size_t v)
      : Error("loop at vertex " + std::to_string(v)), vertex_(v) {}
  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  EmptyGraph() : Error("graph has no vertices") {}
};

class BadLength : public Error {
 public:
  using Error::Error;
};

class LabelOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Edge list that is not a tree (cycle, disconnected, bad labels).
class InvalidTree : public Error {
 public:
  using Error::Error;
};

class NotEnoughVertices : public Error {
 public:
  using Error::Error;
};

class InfeasibleSpec : public Error {
 public:
  using Error::Error;
};

class CorpusParseError : public Error {
 public:
  using Error::Error;
};

/// The host graph does not satisfy n >= d + p and min degree >= d.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(bool degree_short, bool n_short, std::size_t n,
                      std::size_t min_degree, std::size_t d, std::size_t p);

  bool degree_short() const { return degree_short_; }
  bool n_short() const { return n_short_; }
  /// "degree_short" when the degree bound fails, otherwise "n_short".
  const char* reason() const { return degree_short_ ? "degree_short" : "n_short"; }
  std::size_t order() const { return n_; }
  std::size_t min_degree() const { return min_degree_; }
  std::size_t d() const { return d_; }
  std::size_t p() const { return p_; }

 private:
  bool degree_short_;
  bool n_short_;
  std::size_t n_, min_degree_, d_, p_;
};

/// A step of the construction could not be carried out although its
/// preconditions were established. Always a bug, never an expected outcome.
class InternalLogicError : public Error {
 public:
  using Error::Error;
};

class ExtensionStuck : public InternalLogicError {
 public:
  explicit ExtensionStuck(std::size_t tree_vertex)
      : InternalLogicError("greedy extension stuck at tree vertex " +
                           std::to_string(tree_vertex)),
        tree_vertex_(tree_vertex) {}
  std::size_t tree_vertex() const { return tree_vertex_; }

 private:
  std::size_t tree_vertex_;
};

class CountingBreach : public InternalLogicError {
 public:
  using InternalLogicError::InternalLogicError;
};

class InvalidOpportunity : public InternalLogicError {
 public:
  using InternalLogicError::InternalLogicError;
};

class NoLeafAnchor : public InternalLogicError {
 public:
  using InternalLogicError::InternalLogicError;
};

/// Replaying a certificate diverged from the recorded route.
class CertificateMismatch : public InternalLogicError {
 public:
  using InternalLogicError::InternalLogicError;
};

}  // namespace forestweave
