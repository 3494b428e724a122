#pragma once

#include <stdexcept>

namespace gaussiso {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct InvalidPolygon : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCClass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gaussiso
