#pragma once

#include <stdexcept>
#include <string>

namespace laver {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the structure's domain (element out of range, bad position, ...).
struct DomainError : Error {
  using Error::Error;
};

// Memory/tuple-count budget exceeded while building or enumerating.
struct ResourceError : Error {
  using Error::Error;
};

// Step budget exhausted inside a witness builder or the comparator.
struct FuelError : Error {
  FuelError(std::string stage_, const std::string& what)
      : Error(what), stage(std::move(stage_)) {}
  std::string stage;
};

// Position is not a redex of the requested direction.
struct RewriteError : Error {
  using Error::Error;
};

// Malformed input file or term string.
struct FormatError : Error {
  using Error::Error;
};

}  // namespace laver
