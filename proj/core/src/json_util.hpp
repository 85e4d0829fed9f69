#pragma once

// Internal helpers shared by the document and report serializers. Not
// installed; the vendored JSON header stays out of the public interface.

#include <string>
#include <vector>

#include <initializer_list>

#include "json.hpp"

#include "dirwell/expr.hpp"
#include "dirwell/feasible_set.hpp"
#include "dirwell/objective.hpp"
#include "dirwell/problem.hpp"
#include "dirwell/types.hpp"

namespace dirwell::jsonio {

using json = nlohmann::ordered_json;

// Text -> JSON with parse failures mapped to Errc::schema_violation.
json parse_text(const std::string& text);

// File -> text, Errc::io_error on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Field access with schema errors naming the offending key.
const json& require(const json& j, const char* key);
double number_at(const json& j, const char* key);
int int_at(const json& j, const char* key);
void check_keys(const json& j, const char* what, std::initializer_list<const char*> allowed);

Vec vec_from(const json& a, const char* what);
json vec_to(const Vec& v);
Mat mat_from(const json& a, const char* what);
json mat_to(const Mat& m);

Expr expr_from(const json& j);
json expr_to(const Expr& e);
std::vector<Expr> expr_list_from(const json& a, const char* what);

// dim_hint 0 lets array lengths fix the dimension; whole_space requires it.
FeasibleSet feasible_from(const json& j, int dim_hint);
json feasible_to(const FeasibleSet& s);

Objective objective_from(const json& j);
json objective_to(const Objective& o);

DirectionSet directions_from(const json& j, int dim);
json directions_to(const DirectionSet& m);

// Document-level parse; extra_keys widens the accepted top-level fields so
// extended documents (variational inequalities) can share the code path.
Problem problem_from(const json& j, std::initializer_list<const char*> extra_keys = {});
json problem_to(const Problem& p);

}  // namespace dirwell::jsonio
