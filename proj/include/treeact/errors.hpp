#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeact {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class singular_matrix_error : public error {
public:
  using error::error;
};

class undefined_valuation_error : public error {
public:
  using error::error;
};

// Raised by the word parser; position is a 0-based offset into the input.
class parse_error : public error {
public:
  parse_error(const std::string& msg, std::size_t position)
      : error(msg + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

class degenerate_parameter_error : public error {
public:
  using error::error;
};

class invalid_prime_error : public error {
public:
  using error::error;
};

// |det| has a prime factor other than 2 or 3: element lies outside PGL2(Z[1/6]).
class smoothness_error : public error {
public:
  using error::error;
};

class io_error : public error {
public:
  using error::error;
};

class frontier_version_error : public error {
public:
  using error::error;
};

class frontier_corruption_error : public error {
public:
  using error::error;
};

class budget_exceeded_error : public error {
public:
  budget_exceeded_error(const std::string& msg, unsigned last_completed_layer)
      : error(msg), last_completed_layer(last_completed_layer) {}
  unsigned last_completed_layer;
};

}  // namespace treeact
