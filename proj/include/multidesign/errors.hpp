#pragma once

#include <stdexcept>
#include <string>

namespace multidesign {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class InvalidBlock : public Error {
 public:
  using Error::Error;
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

class UnknownCatalogKey : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a search request is malformed (multigraph host, missing budget,
// bound that fails the mod-3 arithmetic).
class SearchRequestError : public Error {
 public:
  using Error::Error;
};

}  // namespace multidesign
