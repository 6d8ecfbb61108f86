#pragma once

#include <stdexcept>
#include <string>

namespace hw {

// Invalid caller input: out-of-range parameters, dimension mismatches,
// insufficient Fock cutoff. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical invariant broke (normalization drift, trace drift, imaginary
// residue). The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hw
