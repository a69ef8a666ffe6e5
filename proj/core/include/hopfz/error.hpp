#pragma once

#include <stdexcept>
#include <string>

namespace hopfz {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different alphabets.
class AlphabetError : public Error {
public:
  using Error::Error;
};

/// A computation needs degrees beyond the presentation's truncation degree.
class TruncationError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

/// Rejected at construction: non-homogeneous coproduct, unknown letter, etc.
class PresentationError : public Error {
public:
  using Error::Error;
};

/// Integral cohomology with torsion where a free module is required.
class TorsionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace hopfz
