#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "vp25/core/species.hpp"

namespace vp25 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad argument, wrong shape).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but degenerate for the requested quantity.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// The charge support reaches the edge of the convolution domain.
class DomainTooSmall : public Error {
 public:
  using Error::Error;
};

class MarkerEscape : public Error {
 public:
  MarkerEscape(Species species, std::size_t index, double x, double y)
      : Error("marker " + std::to_string(index) + " of species " + std::string(name_of(species)) +
              " left the grid at (" + std::to_string(x) + ", " + std::to_string(y) + ")"),
        species_(species),
        index_(index) {}

  Species species() const { return species_; }
  std::size_t index() const { return index_; }

 private:
  Species species_;
  std::size_t index_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace vp25
