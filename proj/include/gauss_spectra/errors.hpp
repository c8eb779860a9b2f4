#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gauss_spectra {

// Base for all domain errors.  name() is the stable identifier the CLI prints
// before exiting with status 1; what() carries the full message.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

// A Gauss code whose letters do not pair up into chords.
struct MalformedCode : DomainError {
  explicit MalformedCode(const std::string& d) : DomainError("MalformedCode", d) {}
};

// A state string with characters outside {o,u,x}.
struct MalformedState : DomainError {
  explicit MalformedState(const std::string& d) : DomainError("MalformedState", d) {}
};

// A state whose length does not match the diagram it is applied to.
struct PartitionMismatch : DomainError {
  explicit PartitionMismatch(const std::string& d) : DomainError("PartitionMismatch", d) {}
};

// Pretzel parameters with two or more even entries (a link, not a knot).
struct InvalidPretzel : DomainError {
  explicit InvalidPretzel(const std::string& d) : DomainError("InvalidPretzel", d) {}
};

// Pretzel parameters containing a zero twist count.
struct ZeroParameter : DomainError {
  explicit ZeroParameter(const std::string& d) : DomainError("ZeroParameter", d) {}
};

// Double cover requested along a chord that is not unoriented in the state.
struct NotUnoriented : DomainError {
  explicit NotUnoriented(const std::string& d) : DomainError("NotUnoriented", d) {}
};

// A double cover whose total count came out odd; the halving step is invalid.
struct OddCoverCount : DomainError {
  explicit OddCoverCount(const std::string& d) : DomainError("OddCoverCount", d) {}
};

// GF(2) counting requires a full state (no erased chords).
struct HasErasedChords : DomainError {
  explicit HasErasedChords(const std::string& d) : DomainError("HasErasedChords", d) {}
};

// Kernel vectors are only defined for states without unoriented chords.
struct HasUnoriented : DomainError {
  explicit HasUnoriented(const std::string& d) : DomainError("HasUnoriented", d) {}
};

struct OutOfRange : DomainError {
  explicit OutOfRange(const std::string& d) : DomainError("OutOfRange", d) {}
};

struct EdgeExists : DomainError {
  explicit EdgeExists(const std::string& d) : DomainError("EdgeExists", d) {}
};

// An edge-addition identity applied where its preconditions fail.
struct HypothesisViolated : DomainError {
  explicit HypothesisViolated(const std::string& d) : DomainError("HypothesisViolated", d) {}
};

// Zero-root multiplicity of the zero polynomial is undefined.
struct ZeroPolynomial : DomainError {
  explicit ZeroPolynomial(const std::string& d) : DomainError("ZeroPolynomial", d) {}
};

}  // namespace gauss_spectra
