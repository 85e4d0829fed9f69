#pragma once

#include <string>

#include "dirwell/problem.hpp"

namespace dirwell {

// Parses a problem document (JSON text). When f names a builtin, catalog
// defaults fill every omitted field and explicit fields override them.
// Throws Error with Errc::schema_violation, unknown_builtin,
// non_unit_generator, anchor_infeasible or degenerate_region.
Problem parse_problem(const std::string& json_text);

// parse_problem applied to the contents of a file; missing or unreadable
// files raise Errc::io_error.
Problem load_problem(const std::string& path);

// Canonical document for a problem: every field explicit, keys in schema
// order, numbers at full precision. parse_problem(serialize_problem(p))
// reproduces p.
std::string serialize_problem(const Problem& p);

}  // namespace dirwell
