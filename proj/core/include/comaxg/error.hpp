#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace comaxg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AxiomKind { NoIdentity, NotLatinSquare, NotAssociative, NoInverse };

const char* to_string(AxiomKind kind);

/// A multiplication table failed a group axiom. The witness holds the
/// element indices of the first failing instance (row/column, triple, ...).
class AxiomViolation : public Error {
 public:
  AxiomViolation(AxiomKind kind, std::vector<std::size_t> witness);

  AxiomKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  AxiomKind kind_;
  std::vector<std::size_t> witness_;
};

class ClosureCapExceeded : public Error {
 public:
  explicit ClosureCapExceeded(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class SubgroupCapExceeded : public Error {
 public:
  explicit SubgroupCapExceeded(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class CertificateCapExceeded : public Error {
 public:
  CertificateCapExceeded(std::size_t cap, std::size_t vertex_count);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class EmptyGeneratorSet : public Error {
 public:
  EmptyGeneratorSet() : Error("empty generator set") {}
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class NoSuchPrime : public Error {
 public:
  explicit NoSuchPrime(std::size_t p);
};

/// Raised for invariants that have no value on the given input
/// (e.g. the intersection number of the trivial group).
class Undefined : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace comaxg
