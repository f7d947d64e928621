#include "comaxg/error.hpp"

#include <sstream>

namespace comaxg {

const char* to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::NoIdentity: return "no-identity";
    case AxiomKind::NotLatinSquare: return "not-latin-square";
    case AxiomKind::NotAssociative: return "not-associative";
    case AxiomKind::NoInverse: return "no-inverse";
  }
  return "unknown";
}

namespace {

std::string axiom_message(AxiomKind kind, const std::vector<std::size_t>& witness) {
  std::ostringstream out;
  out << "axiom violation (" << to_string(kind) << ")";
  if (!witness.empty()) {
    out << " at";
    for (std::size_t w : witness) out << ' ' << w;
  }
  return out.str();
}

}  // namespace

AxiomViolation::AxiomViolation(AxiomKind kind, std::vector<std::size_t> witness)
    : Error(axiom_message(kind, witness)), kind_(kind), witness_(std::move(witness)) {}

ClosureCapExceeded::ClosureCapExceeded(std::size_t cap)
    : Error("closure cap of " + std::to_string(cap) + " elements exceeded"), cap_(cap) {}

SubgroupCapExceeded::SubgroupCapExceeded(std::size_t cap)
    : Error("subgroup cap of " + std::to_string(cap) + " subgroups exceeded"), cap_(cap) {}

CertificateCapExceeded::CertificateCapExceeded(std::size_t cap, std::size_t vertex_count)
    : Error("graph has " + std::to_string(vertex_count) + " vertices; certificate cap is " +
            std::to_string(cap)),
      cap_(cap) {}

NoSuchPrime::NoSuchPrime(std::size_t p)
    : Error(std::to_string(p) + " does not divide the group order") {}

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      detail_(std::move(message)),
      line_(line),
      column_(column) {}

}  // namespace comaxg
