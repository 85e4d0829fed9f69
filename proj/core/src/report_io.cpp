#include "dirwell/report_io.hpp"

#include <charconv>
#include <cmath>

#include "json_util.hpp"

namespace dirwell {

namespace {

using jsonio::json;

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json vec_list(const std::vector<Vec>& vs) {
  json a = json::array();
  for (const Vec& v : vs) a.push_back(jsonio::vec_to(v));
  return a;
}

json spot_to_json(const SpotCheck& s) {
  json j;
  j["pass"] = s.pass;
  j["violation"] = num(s.violation);
  if (!s.pass) {
    j["witness_a"] = jsonio::vec_to(s.witness_a);
    j["witness_b"] = jsonio::vec_to(s.witness_b);
    j["witness_s"] = s.witness_s;
  }
  return j;
}

json tolerances_json() {
  json j;
  j["abs"] = kTolAbs;
  j["rel"] = kTolRel;
  return j;
}

json sweep_to_json(const SweepReport& s) {
  json j;
  j["verdict"] = to_string(s.verdict);
  j["floor"] = s.floor;
  j["epsilons"] = s.epsilons;
  json diams = json::array();
  for (double d : s.diameters) diams.push_back(num(d));
  j["diameters"] = diams;
  json rs = json::array();
  for (double r : s.r_values) rs.push_back(num(r));
  j["r_values"] = rs;
  j["member_counts"] = s.member_counts;
  return j;
}

json profile_to_json(const AdmissibleProfile& prof) {
  json j;
  j["kind"] = prof.which == ProfileKind::c0 ? "c0" : "c1";
  j["ts"] = prof.ts;
  json cs = json::array();
  for (double c : prof.c_values) cs.push_back(num(c));
  j["c_values"] = cs;
  j["slice_counts"] = prof.slice_counts;
  j["c_at_zero"] = prof.c_at_zero;
  j["tau_adm"] = prof.tau_adm;
  j["verdict"] = to_string(prof.verdict);
  return j;
}

}  // namespace

std::string csv_preamble(const std::string& title, const std::string& source, int dimension,
                         std::uint64_t seed, double spacing, const std::vector<double>* schedule) {
  std::string out;
  out += "# " + title + "\n";
  out += "# source: " + source + "\n";
  out += "# dimension: " + std::to_string(dimension) + "\n";
  out += "# seed: " + std::to_string(seed) + "\n";
  out += "# spacing: " + format_double(spacing) + "\n";
  if (schedule != nullptr) {
    out += "# schedule: ";
    for (std::size_t i = 0; i < schedule->size(); ++i) {
      if (i > 0) out += ",";
      out += format_double((*schedule)[i]);
    }
    out += "\n";
  }
  out += "# tolerance_abs: " + format_double(kTolAbs) + "\n";
  out += "# tolerance_rel: " + format_double(kTolRel) + "\n";
  out += "# scope: within the sampled window\n";
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string report_to_json(const WellPosednessReport& r, const Problem& p) {
  json j;
  j["kind"] = "wellposedness-report";
  j["source"] = p.source;
  j["dimension"] = p.dimension;
  j["seed"] = p.seed;
  j["budget"] = p.budget;
  j["anchor"] = jsonio::vec_to(p.anchor_point());
  j["spacing"] = r.spacing;
  j["schedule"] = r.schedule;
  j["tolerances"] = tolerances_json();
  j["scope"] = r.window_note;
  j["surrogate_inf"] = num(r.surrogate_inf);
  json hyp;
  hyp["convexity"] = spot_to_json(r.convexity);
  hyp["subhomogeneity"] = spot_to_json(r.subhomogeneity);
  hyp["anchor_is_argmin"] = r.anchor_is_argmin;
  j["hypotheses"] = hyp;

  json fams = json::array();
  for (const FamilyOutcome& fo : r.families) {
    json f;
    f["family"] = family_name(fo.family);
    f["applicable"] = fo.applicable;
    if (!fo.applicable) f["reason"] = fo.reason;
    if (fo.sweep.has_value()) f["sweep"] = sweep_to_json(*fo.sweep);
    fams.push_back(f);
  }
  j["families"] = fams;

  j["profile"] = r.profile.has_value() ? profile_to_json(*r.profile) : json(nullptr);
  if (r.crosscheck.has_value()) {
    json c;
    c["profile"] = to_string(r.crosscheck->profile);
    c["sweep"] = to_string(r.crosscheck->sweep);
    c["agreement"] = to_string(r.crosscheck->agreement);
    j["crosscheck"] = c;
  } else {
    j["crosscheck"] = nullptr;
  }

  json agree = json::array();
  for (const AgreementEntry& e : r.agreement) {
    json g;
    g["a"] = family_name(e.a);
    g["b"] = family_name(e.b);
    g["relation"] = to_string(e.relation);
    agree.push_back(g);
  }
  j["agreement"] = agree;
  j["verdict"] = to_string(r.overall);
  return j.dump(2) + "\n";
}

std::string ekeland_to_json(const EkelandResult& r, const EkelandVerification& v, const Problem& p,
                            double spacing) {
  json j;
  j["kind"] = "ekeland-run";
  j["source"] = p.source;
  j["dimension"] = p.dimension;
  j["seed"] = p.seed;
  j["spacing"] = spacing;
  j["schedule"] = nullptr;  // the construction takes a single epsilon
  j["tolerances"] = tolerances_json();
  j["scope"] = "within the sampled window";
  j["epsilon"] = r.epsilon;
  j["sqrt_epsilon"] = std::sqrt(r.epsilon);
  j["start"] = jsonio::vec_to(r.start);
  j["x_eps"] = jsonio::vec_to(r.x_eps);
  j["iterations"] = r.iterations;
  j["trace"] = vec_list(r.trace);
  j["residual_i"] = num(r.residual_i);
  j["residual_ii"] = num(r.residual_ii);
  j["violations_iii"] = r.violations_iii;
  json ver;
  ver["pass"] = v.pass;
  ver["residual_i"] = num(v.residual_i);
  ver["residual_ii"] = num(v.residual_ii);
  ver["violations_iii"] = v.violations_iii;
  ver["telescoping_worst"] = num(v.telescoping_worst);
  ver["telescoping_ok"] = v.telescoping_ok;
  j["verification"] = ver;
  return j.dump(2) + "\n";
}

std::string vi_report_to_json(const VIReport& r, const VIProblem& vi) {
  const Problem& p = vi.base;
  json j;
  j["kind"] = "vi-report";
  j["source"] = p.source;
  j["dimension"] = p.dimension;
  j["seed"] = p.seed;
  j["anchor"] = jsonio::vec_to(p.anchor_point());
  j["spacing"] = r.spacing;
  j["schedule"] = r.schedule;
  j["tolerances"] = tolerances_json();
  j["scope"] = r.window_note;
  json field;
  field["monotone"] = spot_to_json(r.monotone);
  field["hemicontinuity"] = r.hemicontinuity;
  j["field"] = field;
  j["candidate_found"] = r.candidate_found;
  j["candidate"] = r.candidate_found ? jsonio::vec_to(r.candidate) : json(nullptr);
  if (r.candidate_found) {
    json s;
    s["verdict"] = to_string(r.rp_sweep.verdict);
    s["floor"] = r.rp_sweep.floor;
    s["epsilons"] = r.rp_sweep.epsilons;
    json diams = json::array();
    for (double d : r.rp_sweep.diameters) diams.push_back(num(d));
    s["diameters"] = diams;
    s["member_counts"] = r.rp_sweep.member_counts;
    j["rp_sweep"] = s;
  } else {
    j["rp_sweep"] = nullptr;
  }
  j["solutions"] = vec_list(r.solutions);
  j["cluster_count"] = r.cluster_count;
  j["cluster_diameter"] = num(r.cluster_diameter);
  j["unique_solution"] = r.unique_solution;
  j["minty_rate"] = p.g.has_value() ? json(nullptr) : json(r.minty_rate);
  j["verdict"] = to_string(r.verdict);
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepReport& s, const Problem& p, double spacing) {
  std::string out = csv_preamble("family " + family_name(s.family) + " diameter sweep", p.source,
                                 p.dimension, p.seed, spacing, &s.epsilons);
  out += "# floor: " + format_double(s.floor) + "\n";
  out += "# verdict: " + to_string(s.verdict) + "\n";
  out += "epsilon,diameter,r_value,members_count\n";
  for (std::size_t i = 0; i < s.epsilons.size(); ++i) {
    out += format_double(s.epsilons[i]) + "," + format_double(s.diameters[i]) + "," +
           format_double(s.r_values[i]) + "," + std::to_string(s.member_counts[i]) + "\n";
  }
  return out;
}

std::string profile_to_csv(const AdmissibleProfile& prof, const Problem& p, double spacing) {
  const std::string kind = prof.which == ProfileKind::c0 ? "c0" : "c1";
  std::string out = csv_preamble(kind + " admissibility profile", p.source, p.dimension, p.seed,
                                 spacing, nullptr);
  out += "# tau_adm: " + format_double(prof.tau_adm) + "\n";
  out += "# c_at_zero: " + format_double(prof.c_at_zero) + "\n";
  out += "# verdict: " + to_string(prof.verdict) + "\n";
  out += "t,c_value,members_count\n";
  for (std::size_t i = 0; i < prof.ts.size(); ++i) {
    out += format_double(prof.ts[i]) + "," + format_double(prof.c_values[i]) + "," +
           std::to_string(prof.slice_counts[i]) + "\n";
  }
  return out;
}

std::string vi_sweep_to_csv(const VIReport& r, const VIProblem& vi) {
  std::string out = csv_preamble("strong-set diameter sweep at the candidate", vi.base.source,
                                 vi.base.dimension, vi.base.seed, r.spacing, &r.schedule);
  out += "# floor: " + format_double(r.rp_sweep.floor) + "\n";
  out += "# verdict: " + to_string(r.rp_sweep.verdict) + "\n";
  out += "epsilon,diameter,members_count\n";
  for (std::size_t i = 0; i < r.rp_sweep.epsilons.size(); ++i) {
    out += format_double(r.rp_sweep.epsilons[i]) + "," + format_double(r.rp_sweep.diameters[i]) +
           "," + std::to_string(r.rp_sweep.member_counts[i]) + "\n";
  }
  return out;
}

}  // namespace dirwell
