#pragma once

#include <memory>
#include <vector>

#include "dirwell/types.hpp"

namespace dirwell {

/**
 * Immutable scalar expression tree over a point's coordinates.
 *
 * Supported node kinds: constants, single coordinates, sum/difference/
 * product/quotient, real powers, exp, abs, min/max over all coordinates,
 * and weighted coordinate sums. Evaluation is pure; division by zero or a
 * fractional power of a negative base surfaces as NaN and is rejected by
 * the objective layer.
 */
class Expr {
 public:
  enum class Op {
    kConst,
    kCoord,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kPow,
    kExp,
    kAbs,
    kCoordMin,
    kCoordMax,
    kWSum,
  };

  static Expr constant(double value);
  static Expr coord(int index);
  static Expr add(std::vector<Expr> args);
  static Expr sub(Expr a, Expr b);
  static Expr mul(std::vector<Expr> args);
  static Expr div(Expr a, Expr b);
  static Expr pow(Expr base, double exponent);
  static Expr exp(Expr a);
  static Expr abs(Expr a);
  static Expr coord_min();
  static Expr coord_max();
  static Expr weighted_sum(std::vector<double> weights);

  double eval(const Vec& x) const;

  // True when every node is differentiable everywhere (no abs or coordinate
  // extrema); used to decide whether finite differences are trustworthy.
  bool smooth() const;

  // Smallest point dimension this expression is defined on.
  int min_dimension() const;

  // Introspection for serialization.
  Op op() const;
  double value() const;                      // kConst value or kPow exponent
  int index() const;                         // kCoord
  const std::vector<double>& weights() const;  // kWSum
  std::size_t arity() const;
  Expr child(std::size_t i) const;

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace dirwell
