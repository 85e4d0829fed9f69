#include "dirwell/problem_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include "dirwell/catalog.hpp"
#include "dirwell/error.hpp"
#include "dirwell/rng.hpp"
#include "json_util.hpp"

namespace dirwell {
namespace jsonio {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::schema_violation, "document is not valid JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(Errc::io_error, "cannot read '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(Errc::io_error, "cannot write '" + path + "'");
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(Errc::schema_violation, std::string("missing required field '") + key + "'");
  return *it;
}

double number_at(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number())
    fail(Errc::schema_violation, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

int int_at(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer())
    fail(Errc::schema_violation, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

void check_keys(const json& j, const char* what, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok)
      fail(Errc::schema_violation, std::string(what) + " has unknown field '" + it.key() + "'");
  }
}

Vec vec_from(const json& a, const char* what) {
  if (!a.is_array() || a.empty())
    fail(Errc::schema_violation, std::string(what) + " must be a nonempty array of numbers");
  Vec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number())
      fail(Errc::schema_violation, std::string(what) + " must contain only numbers");
    v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
  }
  return v;
}

json vec_to(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Mat mat_from(const json& a, const char* what) {
  if (!a.is_array() || a.empty())
    fail(Errc::schema_violation, std::string(what) + " must be a nonempty array of rows");
  const std::size_t rows = a.size();
  std::size_t cols = 0;
  Mat m;
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = vec_from(a[r], what);
    if (r == 0) {
      cols = static_cast<std::size_t>(row.size());
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (static_cast<std::size_t>(row.size()) != cols) {
      fail(Errc::schema_violation, std::string(what) + " rows have unequal lengths");
    }
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

json mat_to(const Mat& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(vec_to(m.row(r).transpose()));
  return a;
}

std::vector<Expr> expr_list_from(const json& a, const char* what) {
  if (!a.is_array() || a.empty())
    fail(Errc::schema_violation, std::string(what) + " must be a nonempty array");
  std::vector<Expr> out;
  out.reserve(a.size());
  for (const json& e : a) out.push_back(expr_from(e));
  return out;
}

Expr expr_from(const json& j) {
  if (j.is_number()) return Expr::constant(j.get<double>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.size() >= 2 && s[0] == 'x') {
      try {
        std::size_t pos = 0;
        const int idx = std::stoi(s.substr(1), &pos);
        if (pos == s.size() - 1 && idx >= 0) return Expr::coord(idx);
      } catch (const std::exception&) {
      }
    }
    fail(Errc::schema_violation, "unrecognized expression shorthand '" + s + "'");
  }
  if (!j.is_object())
    fail(Errc::schema_violation, "expression must be a number, 'x<i>' or an object");
  const json& opj = require(j, "op");
  if (!opj.is_string()) fail(Errc::schema_violation, "expression 'op' must be a string");
  const std::string op = opj.get<std::string>();

  if (op == "const") {
    check_keys(j, "const expression", {"op", "value"});
    return Expr::constant(number_at(j, "value"));
  }
  if (op == "coord") {
    check_keys(j, "coord expression", {"op", "index"});
    const int idx = int_at(j, "index");
    if (idx < 0) fail(Errc::schema_violation, "coordinate index must be nonnegative");
    return Expr::coord(idx);
  }
  if (op == "add" || op == "mul") {
    check_keys(j, "expression", {"op", "args"});
    std::vector<Expr> args = expr_list_from(require(j, "args"), "'args'");
    if (args.size() < 2) fail(Errc::schema_violation, "'" + op + "' needs at least two operands");
    return op == "add" ? Expr::add(std::move(args)) : Expr::mul(std::move(args));
  }
  if (op == "sub" || op == "div") {
    check_keys(j, "expression", {"op", "args"});
    std::vector<Expr> args = expr_list_from(require(j, "args"), "'args'");
    if (args.size() != 2) fail(Errc::schema_violation, "'" + op + "' needs exactly two operands");
    return op == "sub" ? Expr::sub(args[0], args[1]) : Expr::div(args[0], args[1]);
  }
  if (op == "pow") {
    check_keys(j, "pow expression", {"op", "base", "exponent"});
    return Expr::pow(expr_from(require(j, "base")), number_at(j, "exponent"));
  }
  if (op == "exp" || op == "abs") {
    check_keys(j, "expression", {"op", "arg"});
    Expr a = expr_from(require(j, "arg"));
    return op == "exp" ? Expr::exp(std::move(a)) : Expr::abs(std::move(a));
  }
  if (op == "coord_min" || op == "coord_max") {
    check_keys(j, "expression", {"op"});
    return op == "coord_min" ? Expr::coord_min() : Expr::coord_max();
  }
  if (op == "wsum") {
    check_keys(j, "wsum expression", {"op", "weights"});
    const Vec w = vec_from(require(j, "weights"), "'weights'");
    return Expr::weighted_sum(std::vector<double>(w.data(), w.data() + w.size()));
  }
  fail(Errc::schema_violation, "unknown expression op '" + op + "'");
}

json expr_to(const Expr& e) {
  json j;
  switch (e.op()) {
    case Expr::Op::kConst:
      j["op"] = "const";
      j["value"] = e.value();
      return j;
    case Expr::Op::kCoord:
      j["op"] = "coord";
      j["index"] = e.index();
      return j;
    case Expr::Op::kAdd:
    case Expr::Op::kMul:
    case Expr::Op::kSub:
    case Expr::Op::kDiv: {
      switch (e.op()) {
        case Expr::Op::kAdd: j["op"] = "add"; break;
        case Expr::Op::kMul: j["op"] = "mul"; break;
        case Expr::Op::kSub: j["op"] = "sub"; break;
        default: j["op"] = "div"; break;
      }
      json args = json::array();
      for (std::size_t i = 0; i < e.arity(); ++i) args.push_back(expr_to(e.child(i)));
      j["args"] = std::move(args);
      return j;
    }
    case Expr::Op::kPow:
      j["op"] = "pow";
      j["base"] = expr_to(e.child(0));
      j["exponent"] = e.value();
      return j;
    case Expr::Op::kExp:
    case Expr::Op::kAbs:
      j["op"] = e.op() == Expr::Op::kExp ? "exp" : "abs";
      j["arg"] = expr_to(e.child(0));
      return j;
    case Expr::Op::kCoordMin:
      j["op"] = "coord_min";
      return j;
    case Expr::Op::kCoordMax:
      j["op"] = "coord_max";
      return j;
    case Expr::Op::kWSum: {
      j["op"] = "wsum";
      json w = json::array();
      for (double v : e.weights()) w.push_back(v);
      j["weights"] = std::move(w);
      return j;
    }
  }
  fail(Errc::schema_violation, "unserializable expression node");
}

FeasibleSet feasible_from(const json& j, int dim_hint) {
  if (!j.is_object()) fail(Errc::schema_violation, "feasible set must be an object");
  const json& shapej = require(j, "shape");
  if (!shapej.is_string()) fail(Errc::schema_violation, "feasible 'shape' must be a string");
  const std::string shape = shapej.get<std::string>();

  if (shape == "whole_space") {
    check_keys(j, "whole_space set", {"shape"});
    if (dim_hint <= 0)
      fail(Errc::schema_violation, "whole_space needs a problem dimension for context");
    return FeasibleSet::whole_space(dim_hint);
  }
  if (shape == "box") {
    check_keys(j, "box set", {"shape", "lo", "hi"});
    Vec lo = vec_from(require(j, "lo"), "box 'lo'");
    Vec hi = vec_from(require(j, "hi"), "box 'hi'");
    if (lo.size() != hi.size() || (dim_hint > 0 && static_cast<int>(lo.size()) != dim_hint))
      fail(Errc::schema_violation, "box bounds have the wrong dimension");
    for (Eigen::Index i = 0; i < lo.size(); ++i)
      if (lo[i] > hi[i]) fail(Errc::schema_violation, "box has lo > hi on an axis");
    return FeasibleSet::box(std::move(lo), std::move(hi));
  }
  if (shape == "halfspaces") {
    check_keys(j, "halfspace set", {"shape", "normals", "offsets"});
    const json& normalsj = require(j, "normals");
    if (!normalsj.is_array() || normalsj.empty())
      fail(Errc::schema_violation, "'normals' must be a nonempty array");
    std::vector<Vec> normals;
    normals.reserve(normalsj.size());
    for (const json& row : normalsj) {
      normals.push_back(vec_from(row, "halfspace normal"));
      if (dim_hint > 0 && static_cast<int>(normals.back().size()) != dim_hint)
        fail(Errc::schema_violation, "halfspace normal has the wrong dimension");
    }
    const Vec offs = vec_from(require(j, "offsets"), "'offsets'");
    if (static_cast<std::size_t>(offs.size()) != normals.size())
      fail(Errc::schema_violation, "'offsets' length must match 'normals'");
    return FeasibleSet::halfspaces(std::move(normals),
                                   std::vector<double>(offs.data(), offs.data() + offs.size()));
  }
  if (shape == "ball") {
    check_keys(j, "ball set", {"shape", "center", "radius"});
    Vec center = vec_from(require(j, "center"), "ball 'center'");
    if (dim_hint > 0 && static_cast<int>(center.size()) != dim_hint)
      fail(Errc::schema_violation, "ball center has the wrong dimension");
    const double radius = number_at(j, "radius");
    if (!(radius >= 0.0)) fail(Errc::schema_violation, "ball radius must be nonnegative");
    return FeasibleSet::ball(std::move(center), radius);
  }
  fail(Errc::schema_violation, "unknown feasible shape '" + shape + "'");
}

json feasible_to(const FeasibleSet& s) {
  json j;
  switch (s.shape()) {
    case FeasibleSet::Shape::kWholeSpace:
      j["shape"] = "whole_space";
      return j;
    case FeasibleSet::Shape::kBox:
      j["shape"] = "box";
      j["lo"] = vec_to(s.lo());
      j["hi"] = vec_to(s.hi());
      return j;
    case FeasibleSet::Shape::kHalfspaces: {
      j["shape"] = "halfspaces";
      json normals = json::array();
      for (const Vec& n : s.normals()) normals.push_back(vec_to(n));
      j["normals"] = std::move(normals);
      json offsets = json::array();
      for (double b : s.offsets()) offsets.push_back(b);
      j["offsets"] = std::move(offsets);
      return j;
    }
    case FeasibleSet::Shape::kBall:
      j["shape"] = "ball";
      j["center"] = vec_to(s.center());
      j["radius"] = s.radius();
      return j;
  }
  fail(Errc::schema_violation, "unserializable feasible set");
}

Objective objective_from(const json& j) {
  if (!j.is_object()) fail(Errc::schema_violation, "objective must be an object");
  if (j.contains("builtin")) {
    check_keys(j, "builtin objective", {"builtin"});
    const json& name = j["builtin"];
    if (!name.is_string()) fail(Errc::schema_violation, "'builtin' must be a string");
    return Objective::builtin(name.get<std::string>());
  }
  check_keys(j, "objective", {"expr", "grad", "finite_region"});
  Expr f = expr_from(require(j, "expr"));
  std::optional<std::vector<Expr>> grad;
  if (j.contains("grad")) grad = expr_list_from(j["grad"], "'grad'");
  std::optional<FeasibleSet> region;
  if (j.contains("finite_region")) {
    const int hint = grad.has_value() ? static_cast<int>(grad->size()) : 0;
    region = feasible_from(j["finite_region"], hint);
  }
  return Objective::from_expr(std::move(f), std::move(grad), std::move(region));
}

json objective_to(const Objective& o) {
  json j;
  if (o.is_builtin()) {
    j["builtin"] = o.builtin_name();
    return j;
  }
  if (o.expr() == nullptr) fail(Errc::schema_violation, "objective has no definition");
  j["expr"] = expr_to(*o.expr());
  if (o.gradient_exprs() != nullptr) {
    json g = json::array();
    for (const Expr& e : *o.gradient_exprs()) g.push_back(expr_to(e));
    j["grad"] = std::move(g);
  }
  if (o.finite_region() != nullptr) j["finite_region"] = feasible_to(*o.finite_region());
  return j;
}

DirectionSet directions_from(const json& j, int dim) {
  if (!j.is_object()) fail(Errc::schema_violation, "'M' must be an object");
  check_keys(j, "'M'", {"generators", "full_sphere", "tol"});
  bool full_sphere = false;
  if (j.contains("full_sphere")) {
    if (!j["full_sphere"].is_boolean())
      fail(Errc::schema_violation, "'full_sphere' must be a boolean");
    full_sphere = j["full_sphere"].get<bool>();
  }
  if (full_sphere) {
    if (j.contains("generators"))
      fail(Errc::schema_violation, "'M' cannot combine full_sphere with generators");
    if (j.contains("tol"))
      fail(Errc::schema_violation, "'tol' applies only to the generator form of 'M'");
    return DirectionSet::sphere(dim);
  }
  const json& gensj = require(j, "generators");
  if (!gensj.is_array() || gensj.empty())
    fail(Errc::schema_violation, "'generators' must be a nonempty array");
  std::vector<Vec> gens;
  gens.reserve(gensj.size());
  for (const json& row : gensj) {
    gens.push_back(vec_from(row, "generator"));
    if (static_cast<int>(gens.back().size()) != dim)
      fail(Errc::schema_violation, "generator has the wrong dimension");
  }
  double tol = 1e-9;
  if (j.contains("tol")) {
    tol = number_at(j, "tol");
    if (!(tol > 0.0)) fail(Errc::schema_violation, "'tol' must be positive");
  }
  return DirectionSet::from_generators(std::move(gens), tol);
}

json directions_to(const DirectionSet& m) {
  json j;
  if (m.full_sphere) {
    j["full_sphere"] = true;
    return j;
  }
  json gens = json::array();
  for (const Vec& g : m.generators) gens.push_back(vec_to(g));
  j["generators"] = std::move(gens);
  j["tol"] = m.tol_cone;
  return j;
}

namespace {

bool constant_bounds(const Vec& v) {
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (v[i] != v[0]) return false;
  return true;
}

// The sample box must meet the feasible set somewhere, or every cloud is
// empty. Probed on a deterministic grid; the anchor settles it when inside.
bool box_meets_feasible(const Problem& p) {
  if (p.feasible.shape() == FeasibleSet::Shape::kWholeSpace) return true;
  if (p.anchor.has_value() && p.in_box(*p.anchor) && p.feasible.contains(*p.anchor)) return true;
  const int dim = p.dimension;
  Vec center = 0.5 * (p.box_lo + p.box_hi);
  if (p.feasible.contains(center)) return true;
  int k = 7;
  while (k > 3 && std::pow(static_cast<double>(k), dim) > 2e5) k -= 2;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  Vec x(dim);
  long probes = 0;
  while (true) {
    for (int i = 0; i < dim; ++i) {
      const double frac = k == 1 ? 0.0 : static_cast<double>(idx[static_cast<std::size_t>(i)]) /
                                             static_cast<double>(k - 1);
      x[i] = p.box_lo[i] + frac * (p.box_hi[i] - p.box_lo[i]);
    }
    if (p.feasible.contains(x)) return true;
    if (++probes > 200000) return false;
    int carry = 0;
    while (carry < dim && ++idx[static_cast<std::size_t>(carry)] == k) {
      idx[static_cast<std::size_t>(carry)] = 0;
      ++carry;
    }
    if (carry == dim) return false;
  }
}

// Document-supplied gradient expressions must track finite differences at
// seeded interior points; builtins carry closed forms covered by tests.
void check_gradient_consistency(const Problem& p, const Objective& o, const char* label) {
  if (o.gradient_exprs() == nullptr) return;
  auto rng = make_rng(p.seed, "grad-check");
  const Vec lo = p.box_lo + 0.05 * (p.box_hi - p.box_lo);
  const Vec hi = p.box_hi - 0.05 * (p.box_hi - p.box_lo);
  int checked = 0;
  for (int attempt = 0; attempt < 400 && checked < 20; ++attempt) {
    const Vec x = uniform_point(rng, lo, hi);
    const double h = 1e-6 * (1.0 + x.norm());
    Vec fd(p.dimension);
    Vec analytic;
    bool usable = true;
    try {
      Vec probe = x;
      for (int i = 0; i < p.dimension && usable; ++i) {
        probe[i] = x[i] + h;
        const double fp = o.value(probe);
        probe[i] = x[i] - h;
        const double fm = o.value(probe);
        probe[i] = x[i];
        if (!std::isfinite(fp) || !std::isfinite(fm)) usable = false;
        else fd[i] = (fp - fm) / (2.0 * h);
      }
      if (usable) analytic = o.gradient(x);
    } catch (const Error&) {
      usable = false;
    }
    if (!usable) continue;
    if ((analytic - fd).norm() > 1e-5 * (1.0 + analytic.norm()))
      fail(Errc::precondition_violation,
           std::string(label) + " gradient expressions disagree with finite differences");
    ++checked;
  }
}

void check_objective_dim(const Objective& o, int dim, const char* label) {
  const bool ok = o.dim_exact() ? o.dim() == dim : o.dim() <= dim;
  if (!ok)
    fail(Errc::schema_violation,
         std::string(label) + " dimension does not match the problem dimension");
}

}  // namespace

Problem problem_from(const json& j, std::initializer_list<const char*> extra_keys) {
  if (!j.is_object()) fail(Errc::schema_violation, "problem document must be a JSON object");
  static constexpr const char* kBaseKeys[] = {"dimension", "feasible", "f", "g", "M",
                                              "anchor",    "sample_box", "budget", "seed"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : kBaseKeys)
      if (it.key() == k) ok = true;
    for (const char* k : extra_keys)
      if (it.key() == k) ok = true;
    if (!ok)
      fail(Errc::schema_violation, "problem document has unknown field '" + it.key() + "'");
  }

  const json& fj = require(j, "f");
  if (!fj.is_object()) fail(Errc::schema_violation, "'f' must be an object");

  Problem p;
  const bool from_catalog = fj.contains("builtin");
  if (from_catalog) {
    check_keys(fj, "builtin objective", {"builtin"});
    if (!fj["builtin"].is_string()) fail(Errc::schema_violation, "'builtin' must be a string");
    p = catalog_problem(fj["builtin"].get<std::string>());
  } else {
    p.f = objective_from(fj);
    p.source = "document";
  }

  if (j.contains("dimension")) {
    const int dim = int_at(j, "dimension");
    if (dim <= 0) fail(Errc::schema_violation, "'dimension' must be positive");
    if (from_catalog && dim != p.dimension) {
      // Only dimension-generic builtins can be re-dimensioned; defaults that
      // cannot be broadcast must be stated explicitly.
      if (p.f.dim_exact())
        fail(Errc::schema_violation, "'dimension' conflicts with the builtin objective");
      p.dimension = dim;
      p.feasible = FeasibleSet::whole_space(dim);
      if (p.directions.full_sphere) {
        p.directions = DirectionSet::sphere(dim);
      } else if (!j.contains("M")) {
        fail(Errc::schema_violation, "dimension override requires an explicit 'M'");
      }
      if (p.anchor.has_value()) {
        if (p.anchor->isZero(0.0)) p.anchor = Vec::Zero(dim);
        else if (!j.contains("anchor"))
          fail(Errc::schema_violation, "dimension override requires an explicit 'anchor'");
      }
      if (constant_bounds(p.box_lo) && constant_bounds(p.box_hi)) {
        p.box_lo = Vec::Constant(dim, p.box_lo[0]);
        p.box_hi = Vec::Constant(dim, p.box_hi[0]);
      } else if (!j.contains("sample_box")) {
        fail(Errc::schema_violation, "dimension override requires an explicit 'sample_box'");
      }
    }
    p.dimension = dim;
  } else if (!from_catalog) {
    fail(Errc::schema_violation, "missing required field 'dimension'");
  }
  const int dim = p.dimension;

  if (j.contains("feasible")) p.feasible = feasible_from(j["feasible"], dim);
  else if (!from_catalog) p.feasible = FeasibleSet::whole_space(dim);

  if (j.contains("M")) p.directions = directions_from(j["M"], dim);
  else if (!from_catalog) fail(Errc::schema_violation, "missing required field 'M'");

  if (j.contains("g")) p.g = objective_from(j["g"]);

  if (j.contains("anchor")) {
    Vec a = vec_from(j["anchor"], "'anchor'");
    if (static_cast<int>(a.size()) != dim)
      fail(Errc::schema_violation, "'anchor' has the wrong dimension");
    p.anchor = std::move(a);
  }

  if (j.contains("sample_box")) {
    const json& b = j["sample_box"];
    if (!b.is_object()) fail(Errc::schema_violation, "'sample_box' must be an object");
    check_keys(b, "'sample_box'", {"lo", "hi"});
    Vec lo = vec_from(require(b, "lo"), "sample_box 'lo'");
    Vec hi = vec_from(require(b, "hi"), "sample_box 'hi'");
    if (static_cast<int>(lo.size()) != dim || static_cast<int>(hi.size()) != dim)
      fail(Errc::schema_violation, "'sample_box' has the wrong dimension");
    for (int i = 0; i < dim; ++i)
      if (lo[i] > hi[i]) fail(Errc::schema_violation, "'sample_box' has lo > hi on an axis");
    p.box_lo = std::move(lo);
    p.box_hi = std::move(hi);
  } else if (!from_catalog) {
    fail(Errc::schema_violation, "missing required field 'sample_box'");
  }

  if (j.contains("budget")) p.budget = int_at(j, "budget");
  else if (!from_catalog) fail(Errc::schema_violation, "missing required field 'budget'");
  if (p.budget < 100) fail(Errc::schema_violation, "'budget' must be at least 100");

  if (j.contains("seed")) {
    const json& s = j["seed"];
    if (!s.is_number_integer())
      fail(Errc::schema_violation, "'seed' must be a nonnegative integer");
    if (!s.is_number_unsigned() && s.get<long long>() < 0)
      fail(Errc::schema_violation, "'seed' must be a nonnegative integer");
    p.seed = s.get<std::uint64_t>();
  } else if (!from_catalog) {
    p.seed = 1;
  }

  check_objective_dim(p.f, dim, "objective");
  if (p.g.has_value()) check_objective_dim(*p.g, dim, "'g'");
  if (p.directions.dim != dim)
    fail(Errc::schema_violation, "'M' has the wrong dimension");

  if (p.anchor.has_value() && !p.feasible.contains(*p.anchor))
    fail(Errc::anchor_infeasible, "anchor lies outside the feasible set");

  if (!box_meets_feasible(p))
    fail(Errc::degenerate_region, "sample box does not meet the feasible set");

  check_gradient_consistency(p, p.f, "objective");
  if (p.g.has_value()) check_gradient_consistency(p, *p.g, "'g'");
  return p;
}

json problem_to(const Problem& p) {
  json j;
  j["dimension"] = p.dimension;
  j["feasible"] = feasible_to(p.feasible);
  j["f"] = objective_to(p.f);
  if (p.g.has_value()) j["g"] = objective_to(*p.g);
  j["M"] = directions_to(p.directions);
  if (p.anchor.has_value()) j["anchor"] = vec_to(*p.anchor);
  json box;
  box["lo"] = vec_to(p.box_lo);
  box["hi"] = vec_to(p.box_hi);
  j["sample_box"] = std::move(box);
  j["budget"] = p.budget;
  j["seed"] = p.seed;
  return j;
}

}  // namespace jsonio

Problem parse_problem(const std::string& json_text) {
  return jsonio::problem_from(jsonio::parse_text(json_text));
}

Problem load_problem(const std::string& path) {
  return parse_problem(jsonio::read_file(path));
}

std::string serialize_problem(const Problem& p) {
  return jsonio::problem_to(p).dump(2) + "\n";
}

}  // namespace dirwell
