#include "dirwell/error.hpp"

namespace dirwell {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::schema_violation: return "schema_violation";
    case Errc::unknown_builtin: return "unknown_builtin";
    case Errc::non_unit_generator: return "non_unit_generator";
    case Errc::anchor_infeasible: return "anchor_infeasible";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::degenerate_region: return "degenerate_region";
    case Errc::no_finite_value: return "no_finite_value";
    case Errc::gradient_undefined: return "gradient_undefined";
    case Errc::evaluation_error: return "evaluation_error";
    case Errc::precondition_violation: return "precondition_violation";
    case Errc::nonconvergence: return "nonconvergence";
    case Errc::unsupported_configuration: return "unsupported_configuration";
    case Errc::io_error: return "io_error";
    case Errc::bad_argument: return "bad_argument";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace dirwell
