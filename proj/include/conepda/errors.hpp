#ifndef CONEPDA_ERRORS_HPP
#define CONEPDA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conepda {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A path operation reached a vertex whose outgoing edges have not been
// materialized yet; the caller must grow the explored ball first.
struct FrontierEscape : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  using Error::Error;
};
struct NotConnected : Error {
  using Error::Error;
};
struct NotCertified : Error {
  using Error::Error;
};
struct InsufficientDepth : Error {
  using Error::Error;
};
struct EmptyImage : Error {
  using Error::Error;
};
struct InvalidTable : Error {
  using Error::Error;
};
struct EmptyLanguage : Error {
  using Error::Error;
};
struct InvalidDerivation : Error {
  using Error::Error;
};
struct NotInLanguage : Error {
  using Error::Error;
};
struct LanguageMismatch : Error {
  using Error::Error;
};
struct NotWellDefined : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ResourceLimit : Error {
  using Error::Error;
};

}  // namespace conepda

#endif
