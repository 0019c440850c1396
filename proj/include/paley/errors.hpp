#ifndef PALEY_ERRORS_HPP
#define PALEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paley {

// Input outside a hard resource bound (sieve limit, table width, enumeration size).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paley

#endif
