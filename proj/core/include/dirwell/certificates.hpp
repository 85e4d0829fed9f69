#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dirwell/problem.hpp"
#include "dirwell/sample_cloud.hpp"
#include "dirwell/spot_checks.hpp"
#include "dirwell/types.hpp"

namespace dirwell {

// Certificate families. L is the epsilon level set around the surrogate
// infimum; G/H/P quantify over the per-point region D_x; the primed
// variants quantify over the anchor region D_anchor (the cloud); Q is the
// anchor-directional gradient set.
enum class Family { L, G, Gp, H, Hp, P, Pp, Q };

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct FamilyParams {
  Family family = Family::L;
  double epsilon = 0.0;
  Vec anchor;
  double surrogate_inf = 0.0;
};

enum class SweepVerdict { shrinks, does_not_shrink, inconclusive };
enum class OverallVerdict { well_posed, not_well_posed, inconclusive };
enum class ProfileVerdict { admissible, not_admissible, inconclusive };
enum class Agreement { agree, disagree, inconclusive };

std::string to_string(SweepVerdict v);
std::string to_string(OverallVerdict v);
std::string to_string(ProfileVerdict v);
std::string to_string(Agreement v);

struct SweepReport {
  Family family = Family::L;
  std::vector<double> epsilons;
  std::vector<double> diameters;
  std::vector<double> r_values;
  std::vector<std::size_t> member_counts;
  SweepVerdict verdict = SweepVerdict::inconclusive;
  double floor = 0.0;  // shrink threshold used by the verdict rule
  std::string window_note;
};

enum class ProfileKind { c0, c1 };

struct AdmissibleProfile {
  ProfileKind which = ProfileKind::c0;
  std::vector<double> ts;
  std::vector<double> c_values;  // +inf where the slice misses the window
  std::vector<std::size_t> slice_counts;
  double c_at_zero = 0.0;
  double tau_adm = 0.0;
  ProfileVerdict verdict = ProfileVerdict::inconclusive;
};

// Membership tests. The unprimed G/H/P draw their quantifier set around x
// on demand; the primed ones and L/Q read the supplied cloud.
bool member_L(const Problem& p, const Vec& x, const FamilyParams& prm);
bool member_G(const Problem& p, const SampleCloud& cloud, const Vec& x, double epsilon);
bool member_Gp(const Problem& p, const Vec& x, const FamilyParams& prm, const SampleCloud& cloud);
bool member_H(const Problem& p, const SampleCloud& cloud, const Vec& x, double epsilon);
bool member_Hp(const Problem& p, const Vec& x, const FamilyParams& prm, const SampleCloud& cloud);
bool member_P(const Problem& p, const SampleCloud& cloud, const Vec& x, double epsilon);
bool member_Pp(const Problem& p, const Vec& x, const FamilyParams& prm, const SampleCloud& cloud);
bool member_Q(const Problem& p, const Vec& x, const FamilyParams& prm);

// Finite sample of the region D_x reachable from x, at most cap points.
// With a full-sphere direction set this is the whole cloud, which makes
// the unprimed and primed quantifiers coincide exactly.
std::vector<Vec> sample_domain_of(const Problem& p, const SampleCloud& cloud, const Vec& x,
                                  std::size_t cap = 256);

inline const std::vector<double> kDefaultSchedule{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
inline const std::vector<double> kDefaultProfileGrid{0.25, 0.5, 1.0, 2.0};

// Collects the member subset of the cloud at every epsilon in the
// schedule (strictly decreasing, at least 4 values) and applies the
// shrink rule: shrinks when diameters never grow and the last one is at
// most max(4*spacing, 1e-6); does-not-shrink when the last diameter
// exceeds ten times that floor; inconclusive in between.
SweepReport diameter_sweep(const Problem& p, const SampleCloud& cloud, Family family,
                           const std::vector<double>& schedule);
SweepReport diameter_sweep(const Problem& p, Family family, const std::vector<double>& schedule);

// Lower envelope of f - f(anchor) (or of the gradient pairing for c1)
// over the slice at travel time t from the anchor, per grid value.
AdmissibleProfile c_profile(const Problem& p, const SampleCloud& cloud, ProfileKind which,
                            const std::vector<double>& ts);

struct ScalingCheck {
  bool pass = true;
  double s = 0.0;  // violating pair when failed
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Checks c0(s) <= (s/t) c0(t) for every grid pair s < t, 1e-6 relative.
ScalingCheck scaling_inequality_check(const AdmissibleProfile& profile);

struct RadiusBoundResult {
  struct Entry {
    double t = 0.0;
    double c_value = 0.0;
    double r = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool ok = false;
    bool skipped = false;
    std::string note;
  };
  bool pass = true;
  std::vector<Entry> entries;
};

// Verifies r(c0(t)) = half the L-diameter at epsilon = c0(t) lies in
// [t/2 - 2*spacing, t + 2*spacing]; grid points with c0 = +inf or c0 <= 0
// are skipped with a note.
RadiusBoundResult radius_bound_check(const SampleCloud& cloud, const AdmissibleProfile& profile);

struct CrosscheckResult {
  ProfileVerdict profile = ProfileVerdict::inconclusive;
  SweepVerdict sweep = SweepVerdict::inconclusive;
  Agreement agreement = Agreement::inconclusive;
};

// The admissibility route and the level-set route must tell the same
// story: admissible matches shrinks, not-admissible matches
// does-not-shrink, anything else is inconclusive.
CrosscheckResult admissibility_crosscheck(const Problem& p, const SampleCloud& cloud,
                                          const std::vector<double>& schedule = kDefaultSchedule,
                                          const std::vector<double>& ts = kDefaultProfileGrid);

struct FamilyOutcome {
  Family family = Family::L;
  bool applicable = false;
  std::string reason;  // why the family was skipped
  std::optional<SweepReport> sweep;
};

struct AgreementEntry {
  Family a = Family::L;
  Family b = Family::L;
  Agreement relation = Agreement::inconclusive;
};

struct WellPosednessReport {
  double spacing = 0.0;
  std::vector<double> schedule;
  SpotCheck convexity;
  SpotCheck subhomogeneity;
  bool anchor_is_argmin = false;
  double surrogate_inf = 0.0;
  std::vector<FamilyOutcome> families;
  std::optional<AdmissibleProfile> profile;
  std::optional<CrosscheckResult> crosscheck;
  std::vector<AgreementEntry> agreement;
  OverallVerdict overall = OverallVerdict::inconclusive;
  std::string window_note;
};

// Runs every applicable certificate at the given schedule: the L sweep
// always, G' under a passing convexity check, H' and Q with a gradient on
// top, P' when a composite term is present, plus the admissibility
// crosscheck when the profile hypotheses hold. Disagreement between
// applicable certificates dominates the overall verdict.
WellPosednessReport wellposedness_report(const Problem& p,
                                         const std::vector<double>& schedule = kDefaultSchedule);

}  // namespace dirwell
