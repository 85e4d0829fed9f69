#include "dirwell/expr.hpp"

#include <algorithm>
#include <cmath>

#include "dirwell/error.hpp"

namespace dirwell {

struct Expr::Node {
  Op op;
  double value = 0.0;  // constant or power exponent
  int index = 0;
  std::vector<double> weights;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {
using NodePtr = std::shared_ptr<const Expr::Node>;
}

Expr Expr::constant(double value) {
  auto n = std::make_shared<Node>();
  n->op = Op::kConst;
  n->value = value;
  return Expr(n);
}

Expr Expr::coord(int index) {
  if (index < 0) fail(Errc::bad_argument, "coordinate index must be nonnegative");
  auto n = std::make_shared<Node>();
  n->op = Op::kCoord;
  n->index = index;
  return Expr(n);
}

Expr Expr::add(std::vector<Expr> args) {
  if (args.empty()) fail(Errc::bad_argument, "add needs at least one argument");
  auto n = std::make_shared<Node>();
  n->op = Op::kAdd;
  for (Expr& a : args) n->kids.push_back(std::move(a.node_));
  return Expr(n);
}

Expr Expr::sub(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->op = Op::kSub;
  n->kids = {std::move(a.node_), std::move(b.node_)};
  return Expr(n);
}

Expr Expr::mul(std::vector<Expr> args) {
  if (args.empty()) fail(Errc::bad_argument, "mul needs at least one argument");
  auto n = std::make_shared<Node>();
  n->op = Op::kMul;
  for (Expr& a : args) n->kids.push_back(std::move(a.node_));
  return Expr(n);
}

Expr Expr::div(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->op = Op::kDiv;
  n->kids = {std::move(a.node_), std::move(b.node_)};
  return Expr(n);
}

Expr Expr::pow(Expr base, double exponent) {
  auto n = std::make_shared<Node>();
  n->op = Op::kPow;
  n->value = exponent;
  n->kids = {std::move(base.node_)};
  return Expr(n);
}

Expr Expr::exp(Expr a) {
  auto n = std::make_shared<Node>();
  n->op = Op::kExp;
  n->kids = {std::move(a.node_)};
  return Expr(n);
}

Expr Expr::abs(Expr a) {
  auto n = std::make_shared<Node>();
  n->op = Op::kAbs;
  n->kids = {std::move(a.node_)};
  return Expr(n);
}

Expr Expr::coord_min() {
  auto n = std::make_shared<Node>();
  n->op = Op::kCoordMin;
  return Expr(n);
}

Expr Expr::coord_max() {
  auto n = std::make_shared<Node>();
  n->op = Op::kCoordMax;
  return Expr(n);
}

Expr Expr::weighted_sum(std::vector<double> weights) {
  if (weights.empty()) fail(Errc::bad_argument, "weighted sum needs weights");
  auto n = std::make_shared<Node>();
  n->op = Op::kWSum;
  n->weights = std::move(weights);
  return Expr(n);
}

namespace {

double eval_node(const Expr::Node& n, const Vec& x) {
  switch (n.op) {
    case Expr::Op::kConst:
      return n.value;
    case Expr::Op::kCoord:
      if (n.index >= x.size()) fail(Errc::dimension_mismatch, "coordinate index out of range");
      return x[n.index];
    case Expr::Op::kAdd: {
      double s = 0.0;
      for (const auto& k : n.kids) s += eval_node(*k, x);
      return s;
    }
    case Expr::Op::kSub:
      return eval_node(*n.kids[0], x) - eval_node(*n.kids[1], x);
    case Expr::Op::kMul: {
      double p = 1.0;
      for (const auto& k : n.kids) p *= eval_node(*k, x);
      return p;
    }
    case Expr::Op::kDiv:
      return eval_node(*n.kids[0], x) / eval_node(*n.kids[1], x);
    case Expr::Op::kPow:
      return std::pow(eval_node(*n.kids[0], x), n.value);
    case Expr::Op::kExp:
      return std::exp(eval_node(*n.kids[0], x));
    case Expr::Op::kAbs:
      return std::abs(eval_node(*n.kids[0], x));
    case Expr::Op::kCoordMin:
      if (x.size() == 0) fail(Errc::dimension_mismatch, "coord_min on empty point");
      return x.minCoeff();
    case Expr::Op::kCoordMax:
      if (x.size() == 0) fail(Errc::dimension_mismatch, "coord_max on empty point");
      return x.maxCoeff();
    case Expr::Op::kWSum: {
      if (static_cast<std::size_t>(x.size()) < n.weights.size())
        fail(Errc::dimension_mismatch, "weighted sum has more weights than coordinates");
      double s = 0.0;
      for (std::size_t i = 0; i < n.weights.size(); ++i)
        s += n.weights[i] * x[static_cast<Eigen::Index>(i)];
      return s;
    }
  }
  fail(Errc::evaluation_error, "corrupt expression node");
}

bool smooth_node(const Expr::Node& n) {
  switch (n.op) {
    case Expr::Op::kAbs:
    case Expr::Op::kCoordMin:
    case Expr::Op::kCoordMax:
      return false;
    default:
      break;
  }
  for (const auto& k : n.kids)
    if (!smooth_node(*k)) return false;
  return true;
}

int min_dim_node(const Expr::Node& n) {
  int d = 0;
  if (n.op == Expr::Op::kCoord) d = n.index + 1;
  if (n.op == Expr::Op::kWSum) d = static_cast<int>(n.weights.size());
  if (n.op == Expr::Op::kCoordMin || n.op == Expr::Op::kCoordMax) d = 1;
  for (const auto& k : n.kids) d = std::max(d, min_dim_node(*k));
  return d;
}

}  // namespace

double Expr::eval(const Vec& x) const { return eval_node(*node_, x); }
bool Expr::smooth() const { return smooth_node(*node_); }
int Expr::min_dimension() const { return min_dim_node(*node_); }

Expr::Op Expr::op() const { return node_->op; }
double Expr::value() const { return node_->value; }
int Expr::index() const { return node_->index; }
const std::vector<double>& Expr::weights() const { return node_->weights; }
std::size_t Expr::arity() const { return node_->kids.size(); }
Expr Expr::child(std::size_t i) const { return Expr(node_->kids.at(i)); }

}  // namespace dirwell
