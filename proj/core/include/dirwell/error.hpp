#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dirwell {

// Error taxonomy for everything that can go wrong on the input or numeric
// side. The CLI maps any Error to exit code 1; the code is also embedded in
// the message so scripted callers can match on it.
enum class Errc {
  schema_violation,
  unknown_builtin,
  non_unit_generator,
  anchor_infeasible,
  dimension_mismatch,
  degenerate_region,
  no_finite_value,
  gradient_undefined,
  evaluation_error,
  precondition_violation,
  nonconvergence,
  unsupported_configuration,
  io_error,
  bad_argument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace dirwell
