#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

// Malformed or out-of-contract input (bad dimensions, mixed fields, non-matroid, ...).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Two independent computations of the same quantity disagreed. Never expected.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// A request the library refuses, e.g. an enumeration above the size cap.
class UnsupportedError : public std::runtime_error {
public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hlab
