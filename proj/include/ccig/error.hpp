#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccig {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multiplication table fails a group axiom; `witness` holds the offending
/// triple (a, b, c) for associativity, or (a, 0, 0) for identity/inverse.
class NotAGroup : public Error {
 public:
  NotAGroup(const std::string& what, std::array<std::size_t, 3> witness)
      : Error(what), witness(witness) {}
  std::array<std::size_t, 3> witness;
};

/// Subset handed to quotient() is not a normal subgroup. witness = (g, n)
/// with g n g^-1 outside the subset (or n1 n2 outside it when not closed).
class NotNormal : public Error {
 public:
  NotNormal(const std::string& what, std::array<std::size_t, 2> witness)
      : Error(what), witness(witness) {}
  std::array<std::size_t, 2> witness;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};
class ParamOutOfRange : public Error {
 public:
  using Error::Error;
};
class CapExceeded : public Error {
 public:
  using Error::Error;
};
class NotAUnit : public Error {
 public:
  using Error::Error;
};
class PrimeSearchFailed : public Error {
 public:
  using Error::Error;
};
class VerificationFailed : public Error {
 public:
  using Error::Error;
};
class Mismatch : public Error {
 public:
  using Error::Error;
};
class NotSymmetricFunction : public Error {
 public:
  using Error::Error;
};
class NotAClassFunction : public Error {
 public:
  using Error::Error;
};
class InvalidConnectionSet : public Error {
 public:
  using Error::Error;
};
/// Cyclotomic value has a nonzero irrational part; `canonical_form` renders it.
class NotRational : public Error {
 public:
  explicit NotRational(const std::string& canonical_form)
      : Error("value is not rational: " + canonical_form), canonical_form(canonical_form) {}
  std::string canonical_form;
};
class NonIntegralColourFunction : public Error {
 public:
  using Error::Error;
};

}  // namespace ccig
