#include "dirwell/objective.hpp"

#include <cmath>
#include <limits>

#include "dirwell/error.hpp"

namespace dirwell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dim(const Objective& o, const Vec& x) {
  if (x.size() == 0) fail(Errc::dimension_mismatch, "objective evaluated at empty point");
  const int n = static_cast<int>(x.size());
  if (o.dim_exact() ? n != o.dim() : n < o.dim())
    fail(Errc::dimension_mismatch, "point dimension does not match objective");
}

}  // namespace

Objective Objective::builtin(const std::string& name) {
  Objective o;
  o.builtin_name_ = name;
  if (name == "x2exp") {
    o.kind_ = Builtin::kX2Exp;
    o.dim_ = 1;
    o.differentiable_ = true;
  } else if (name == "l1w_5") {
    o.kind_ = Builtin::kL1W5;
    o.dim_ = 5;
    o.differentiable_ = false;
  } else if (name == "expdir") {
    o.kind_ = Builtin::kExpDir;
    o.dim_ = 1;
    o.differentiable_ = true;
  } else if (name == "quad") {
    o.kind_ = Builtin::kQuad;
    o.dim_ = 0;
    o.differentiable_ = true;
  } else if (name == "doublewell") {
    o.kind_ = Builtin::kDoubleWell;
    o.dim_ = 1;
    o.differentiable_ = true;
  } else if (name == "polymax1") {
    o.kind_ = Builtin::kPolyMax1;
    o.dim_ = 1;
    o.differentiable_ = true;
  } else if (name == "l2fin2") {
    o.kind_ = Builtin::kL2Fin2;
    o.dim_ = 2;
    o.differentiable_ = false;
    std::vector<Vec> normals(2, Vec::Zero(2));
    normals[0][1] = 1.0;
    normals[1][1] = -1.0;
    o.finite_region_ = FeasibleSet::halfspaces(std::move(normals), {0.0, 0.0});
  } else {
    fail(Errc::unknown_builtin, "no builtin objective named '" + name + "'");
  }
  o.dim_exact_ = o.dim_ > 0;
  return o;
}

Objective Objective::from_expr(Expr f, std::optional<std::vector<Expr>> grad,
                               std::optional<FeasibleSet> finite_region) {
  Objective o;
  o.expr_ = std::move(f);
  o.dim_ = o.expr_->min_dimension();
  if (grad.has_value()) {
    if (grad->empty()) fail(Errc::bad_argument, "gradient expression list is empty");
    if (o.dim_ > static_cast<int>(grad->size()))
      fail(Errc::dimension_mismatch, "gradient has fewer coordinates than the objective uses");
    o.dim_ = static_cast<int>(grad->size());
    o.dim_exact_ = true;
    o.grad_ = std::move(grad);
  }
  if (finite_region.has_value()) {
    if (o.dim_exact_ ? o.dim_ != finite_region->dim() : o.dim_ > finite_region->dim())
      fail(Errc::dimension_mismatch, "finite region dimension does not match objective");
    o.dim_ = finite_region->dim();
    o.dim_exact_ = true;
    o.finite_region_ = std::move(finite_region);
  }
  // Differentiable when a gradient is supplied; otherwise only for smooth
  // expressions that are finite everywhere.
  o.differentiable_ =
      o.grad_.has_value() || (o.expr_->smooth() && !o.finite_region_.has_value());
  return o;
}

double Objective::raw_value(const Vec& x) const {
  switch (kind_) {
    case Builtin::kX2Exp:
      return x[0] * x[0] * std::exp(-x[0]);
    case Builtin::kL1W5: {
      double s = 0.0;
      for (int i = 0; i < 5; ++i) s += std::abs(x[i]) / static_cast<double>(i + 1);
      return s;
    }
    case Builtin::kExpDir:
      return std::exp(x[0]);
    case Builtin::kQuad:
      return x.squaredNorm();
    case Builtin::kDoubleWell: {
      const double w = x[0] * x[0] - 1.0;
      return w * w;
    }
    case Builtin::kPolyMax1:
      return x[0];
    case Builtin::kL2Fin2:
      return x[0] + x[1];
    case Builtin::kNone:
      break;
  }
  if (!expr_.has_value()) fail(Errc::evaluation_error, "objective has no definition");
  return expr_->eval(x);
}

double Objective::value(const Vec& x, bool* overflow) const {
  check_dim(*this, x);
  if (finite_region_.has_value() && !finite_region_->contains(x)) return kInf;
  const double v = raw_value(x);
  if (std::isnan(v)) fail(Errc::evaluation_error, "objective evaluated to NaN");
  if (v == -kInf) fail(Errc::evaluation_error, "objective evaluated to -inf");
  if (v == kInf && overflow != nullptr) *overflow = true;
  return v;
}

Vec Objective::finite_difference_gradient(const Vec& x) const {
  const double h = 1e-6 * (1.0 + x.norm());
  Vec g(x.size());
  Vec probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double fp = value(probe);
    probe[i] = x[i] - h;
    const double fm = value(probe);
    probe[i] = x[i];
    if (!std::isfinite(fp) || !std::isfinite(fm))
      fail(Errc::gradient_undefined, "difference stencil leaves the finite region");
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

Vec Objective::gradient(const Vec& x) const {
  check_dim(*this, x);
  if (!differentiable_)
    fail(Errc::gradient_undefined, "objective has no pointwise derivative");
  switch (kind_) {
    case Builtin::kX2Exp: {
      Vec g(1);
      g[0] = std::exp(-x[0]) * x[0] * (2.0 - x[0]);
      return g;
    }
    case Builtin::kExpDir: {
      Vec g(1);
      g[0] = std::exp(x[0]);
      return g;
    }
    case Builtin::kQuad:
      return 2.0 * x;
    case Builtin::kDoubleWell: {
      Vec g(1);
      g[0] = 4.0 * x[0] * (x[0] * x[0] - 1.0);
      return g;
    }
    case Builtin::kPolyMax1: {
      Vec g(1);
      g[0] = 1.0;
      return g;
    }
    case Builtin::kL1W5:
    case Builtin::kL2Fin2:
      fail(Errc::gradient_undefined, "objective has no pointwise derivative");
    case Builtin::kNone:
      break;
  }
  if (grad_.has_value()) {
    Vec g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double gi = (*grad_)[static_cast<std::size_t>(i)].eval(x);
      if (!std::isfinite(gi)) fail(Errc::evaluation_error, "gradient expression not finite");
      g[i] = gi;
    }
    return g;
  }
  return finite_difference_gradient(x);
}

const std::vector<std::string>& Objective::builtin_names() {
  static const std::vector<std::string> names = {
      "x2exp", "l1w_5", "expdir", "quad", "doublewell", "polymax1", "l2fin2"};
  return names;
}

}  // namespace dirwell
