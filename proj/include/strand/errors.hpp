#pragma once
#include <stdexcept>
#include <string>

namespace strand {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* input text could not be parsed */
struct ParseError : Error {
  using Error::Error;
};

/* catalog name not recognized */
struct UnknownAlgebra : Error {
  using Error::Error;
};

/* algebra requires a different characteristic than the requested p */
struct CharMismatch : Error {
  using Error::Error;
};

/* band parameter mu outside the extended domain of the algebra */
struct MuOutOfDomain : Error {
  using Error::Error;
};

/* semantically invalid request (bad vertex, not a string word, ...) */
struct DomainError : Error {
  using Error::Error;
};

/* algebra construction failed (no stabilization within the hard cap, ...) */
struct BuildError : Error {
  using Error::Error;
};

/* broken internal invariant; indicates a bug, not bad input */
struct InternalError : Error {
  using Error::Error;
};

}  // namespace strand
