#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace argbound {

enum class ErrorKind {
  pole,              // s too close to 1
  non_convergence,   // term budget or subdivision limit exhausted
  near_singularity,  // |zeta| below the floor, or digamma at a pole
  domain,            // argument outside the documented domain
  resource,          // request exceeds the configured memory budget
  table_too_small,   // Mangoldt table does not reach X^2
  parse,             // malformed zero-table line
  order_violation,   // zero table not strictly ascending
  empty_file,        // zero table with no ordinates
  table_exhausted,   // t beyond the last ordinate
  coverage,          // zero table too short for a truncated sum
  at_ordinate,       // t within zero_exclusion_eps of an ordinate
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace argbound
