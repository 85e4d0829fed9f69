#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirwell/expr.hpp"
#include "dirwell/feasible_set.hpp"
#include "dirwell/types.hpp"

namespace dirwell {

// Scalar objective, possibly extended-valued (+inf outside a declared closed
// finite region). Values are computed from either a named builtin or an
// expression tree; gradients come from a closed form, user-supplied gradient
// expressions, or central finite differences as a last resort.
class Objective {
 public:
  Objective() = default;

  // Resolves a catalog builtin by name. Throws Errc::unknown_builtin.
  static Objective builtin(const std::string& name);

  // Expression-backed objective. `grad` holds one expression per coordinate
  // when an analytic gradient is available. `finite_region` declares the
  // closed set on which the objective is finite; outside it the value is
  // +inf and the objective reports itself as extended.
  static Objective from_expr(Expr f, std::optional<std::vector<Expr>> grad = std::nullopt,
                             std::optional<FeasibleSet> finite_region = std::nullopt);

  // Value at x, +inf allowed. Overflow to +inf of an otherwise finite
  // objective sets *overflow when the caller passes a flag. NaN and -inf
  // raise Errc::evaluation_error.
  double value(const Vec& x, bool* overflow = nullptr) const;

  // Gradient at x. Uses the closed form or gradient expressions when
  // present, otherwise central differences with step 1e-6 * (1 + |x|).
  // Throws Errc::gradient_undefined for objectives without a pointwise
  // derivative and when the difference stencil leaves the finite region.
  Vec gradient(const Vec& x) const;

  bool differentiable() const { return differentiable_; }
  bool extended() const { return finite_region_.has_value(); }

  // Required dimension; 0 means any positive dimension is accepted. For a
  // bare expression the value is the highest coordinate index in use plus
  // one and evaluation at larger dimensions is allowed.
  int dim() const { return dim_; }
  bool dim_exact() const { return dim_exact_; }

  bool is_builtin() const { return !builtin_name_.empty(); }
  const std::string& builtin_name() const { return builtin_name_; }
  const Expr* expr() const { return expr_.has_value() ? &*expr_ : nullptr; }
  const std::vector<Expr>* gradient_exprs() const {
    return grad_.has_value() ? &*grad_ : nullptr;
  }
  const FeasibleSet* finite_region() const {
    return finite_region_.has_value() ? &*finite_region_ : nullptr;
  }

  static const std::vector<std::string>& builtin_names();

 private:
  enum class Builtin {
    kNone,
    kX2Exp,      // x^2 e^{-x}, 1-D
    kL1W5,       // sum |x_i| / i over five coordinates
    kExpDir,     // e^x, 1-D
    kQuad,       // |x|^2, any dimension
    kDoubleWell, // (x^2 - 1)^2, 1-D
    kPolyMax1,   // x, 1-D
    kL2Fin2,     // x_1 + x_2 on the line x_2 = 0, +inf elsewhere
  };

  double raw_value(const Vec& x) const;
  Vec finite_difference_gradient(const Vec& x) const;

  Builtin kind_ = Builtin::kNone;
  std::string builtin_name_;
  std::optional<Expr> expr_;
  std::optional<std::vector<Expr>> grad_;
  std::optional<FeasibleSet> finite_region_;
  int dim_ = 0;
  bool dim_exact_ = false;
  bool differentiable_ = false;
};

}  // namespace dirwell
