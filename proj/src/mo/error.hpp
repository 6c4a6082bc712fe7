#pragma once

#include <stdexcept>
#include <string>

namespace mo {

// Failure categories surfaced through the C API as status codes.
enum class Errc {
  parse,
  invalid_argument,
  cycle_detected,
  duplicate_element,
  size_limit,
  empty_shape,
  var_mismatch,
  duplicate_node,
  negative_dilation,
  outside_order_cone,
  not_natural_labeling,
  region_violation,
  not_an_extension,
  gap_not_positive,
  quotient_cycle,
  contradictory_marks,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mo
