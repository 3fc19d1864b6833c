#pragma once

#include <stdexcept>
#include <string>

namespace apm {

// A numerical self-check failed (quadrature misconfigured, CRT overflow, ...).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace apm
