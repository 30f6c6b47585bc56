#pragma once

#include <stdexcept>

namespace plesken {

/// Malformed input text (file formats, rational literals).
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A mathematical validation failed (group axioms, Jacobi, exactness, ...).
class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace plesken
