// Acceptance run: one PASS/FAIL line per criterion on parameter sets A, B, C.
// The process succeeds when every criterion passes except those listed in
// kUnattainable, which are still evaluated and reported as FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "dkap/appell.hpp"
#include "dkap/audit.hpp"
#include "dkap/operators.hpp"
#include "dkap/pascal_measure.hpp"
#include "dkap/table.hpp"

namespace dkap {
namespace {

constexpr unsigned kDigits = 60;

// d/dx K_n = n K_{n-1} cannot hold: K_n has leading coefficient p^n.
const std::set<int> kUnattainable{2};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct NamedSet {
  const char* name;
  Params params;
};

std::vector<NamedSet> sets() {
  return {{"A", Params::make(Rat(-1, 2), Rat(2), Rat(3, 5), Rat(3))},
          {"B", Params::make(Rat(-1), Rat(1, 2), Rat(1, 2), Rat(1))},
          {"C", Params::make(Rat(-1, 4), Rat(3), Rat(7, 10), Rat(5, 2))}};
}

Config config_for(const Params& params, int n_max) {
  Config c = default_config();
  c.params = params;
  c.n_max = n_max;
  c.series_order = std::max(16, n_max + 2);
  c.precision_digits = kDigits;
  return c;
}

bool same(const PolyFamily& a, const PolyFamily& b) { return a.members == b.members; }

Outcome cross_construction() {
  Outcome out;
  for (const auto& [name, pr] : sets()) {
    const PolyFamily ref = K_series(10, pr);
    const PolyFamily ps = P_series(10, pr);
    const std::string tag = std::string(" on ") + name;
    out.require(same(ref, K_epsilon(10, pr)), "K_epsilon" + tag);
    out.require(same(ref, K_from_P(ps, pr)), "K_from_P" + tag);
    out.require(same(ref, K_bell(10, pr, BellVariant::corrected)), "K_bell" + tag);
    out.require(same(ref, K_stirling(ps, pr, StirlingBounds::oracle)), "K_stirling" + tag);
  }
  return out;
}

Outcome companion_exactness() {
  Outcome out;
  for (const auto& [name, pr] : sets()) {
    const std::string tag = std::string(" on ") + name;
    const PolyFamily ps8 = P_series(8, pr);
    const PolyFamily ks8 = K_series(8, pr);
    out.require(same(ps8, P_bell(8, pr)), "P_bell" + tag);
    out.require(same(ps8, P_from_K(ks8, pr)), "P_from_K" + tag);
    out.require(same(ps8, P_from_K_stirling2(ks8, pr)), "P_from_K_stirling2" + tag);

    const PolyFamily ps = P_series(12, pr);
    const PolyFamily ks = K_series(12, pr);
    int p_fail = -1, k_fail = -1;
    for (int n = 1; n <= 12; ++n) {
      if (p_fail < 0 && derivative(ps[n]) != ps[n - 1] * n) p_fail = n;
      if (k_fail < 0 && derivative(ks[n]) != ks[n - 1] * n) k_fail = n;
    }
    out.require(p_fail < 0, "P' = nP fails at n=" + std::to_string(p_fail) + tag);
    out.require(k_fail < 0, "K' = nK fails at n=" + std::to_string(k_fail) + tag);
  }
  return out;
}

Outcome identities() {
  Outcome out;
  for (const auto& [name, pr] : sets()) {
    const std::string tag = std::string(" on ") + name;
    const PolyFamily ks = K_series(10, pr);
    out.require(same(ks, K_from_P(P_series(10, pr), pr)), "P1" + tag);
    for (int n = 0; n <= 10; ++n) {
      if (monomial_from_K(n, ks, pr) != XPoly::monomial(n)) out.require(false, "P2 at n=" + std::to_string(n) + tag);
      if (n <= 8 && !addition_P3(n, ks, pr, P3Variant::corrected).is_zero()) {
        out.require(false, "P3 at n=" + std::to_string(n) + tag);
      }
      if (!addition_P4(n, ks, pr).is_zero()) out.require(false, "P4 at n=" + std::to_string(n) + tag);
    }
  }
  return out;
}

Outcome measure_consistency() {
  Outcome out;
  for (const auto& [name, pr] : sets()) {
    const std::string tag = std::string(" on ") + name;
    const MeasureModel model(pr, kDigits, 10);
    ScopedPrecision guard(kDigits);
    Real mass = 0;
    for (const Real& v : model.pmf_table()) mass += v;
    out.require(mass <= 1 && mass >= 1 - pow10_neg(20), "pmf mass " + to_string(mass, 25) + tag);
    const auto moments = moments_exact(8, pr);
    for (int m = 0; m <= 8; ++m) {
      const Real exact = to_real(moments[static_cast<std::size_t>(m)]);
      if (abs(model.moment_truncated_sum(m) - exact) / exact > pow10_neg(20)) {
        out.require(false, "moment m=" + std::to_string(m) + tag);
      }
    }
    for (int n = 0; n <= 10; ++n) {
      if (abs(model.mixture_pmf(n) - model.canonical_pmf(n)) > pow10_neg(15)) {
        out.require(false, "mixture pmf n=" + std::to_string(n) + tag);
      }
    }
  }
  return out;
}

Outcome mixture_laplace() {
  Outcome out;
  for (const auto& [name, pr] : sets()) {
    const MeasureModel model(pr, kDigits, 0);
    ScopedPrecision guard(kDigits);
    for (const Rat& s : {Rat(1, 2), Rat(1), Rat(2)}) {
      const Real sr = to_real(s);
      const Real gap = abs(model.mixture_laplace(sr) - deg_exp(-sr, pr));
      out.require(gap <= pow10_neg(15), "s=" + to_string(s) + " gap " + to_string(gap, 3) + " on " + name);
    }
  }
  return out;
}

Outcome monte_carlo() {
  Outcome out;
  const Params pr = sets()[0].params;
  const MeasureModel model(pr, kDigits, 0);
  const auto draws = sample(1000000, default_config().seed, pr);
  const SampleSummary s = summarize(draws, model);
  const double exact_mean = moment_exact(1, pr).convert_to<double>();
  const double gap_se = std::fabs(s.mean - exact_mean) / s.standard_error;
  char buf[160];
  std::snprintf(buf, sizeof buf, "TV %.5f, mean %.5f vs %.5f (%.2f SE)", s.total_variation, s.mean, exact_mean, gap_se);
  out.require(s.total_variation < 0.005 && gap_se <= 5.0, buf);
  if (out.pass) out.detail = buf;
  return out;
}

Outcome classical_limit() {
  Outcome out;
  for (const auto& [name, base] : sets()) {
    const PolyFamily classical = classical_K(6, base.p, base.r);
    std::vector<Rat> gaps;
    for (long denom : {10000L, 100000L, 1000000L}) {
      const PolyFamily kd = K_series(6, Params::make(Rat(-1, denom), Rat(1), base.p, base.r));
      Rat worst(0);
      for (int n = 0; n <= 6; ++n) {
        worst = std::max(worst, max_abs_coeff(kd[n] - classical[n]) / max_abs_coeff(classical[n]));
      }
      gaps.push_back(worst);
    }
    const std::string tag = std::string(" on ") + name;
    out.require(gaps[2] <= Rat(1, 10000), "relative gap " + to_string(to_real(gaps[2]), 3) + tag);
    for (std::size_t i = 1; i < gaps.size(); ++i) {
      const Rat ratio = gaps[i - 1] / gaps[i];
      out.require(ratio >= 9 && ratio <= 11, "ratio " + to_string(to_real(ratio), 4) + tag);
    }
  }
  return out;
}

ChaosVector unit(int n) {
  std::vector<Rat> v(static_cast<std::size_t>(n) + 1, Rat(0));
  v.back() = 1;
  return ChaosVector(std::move(v));
}

Outcome operators() {
  Outcome out;
  for (const auto& [name, pr] : sets()) {
    const std::string tag = std::string(" on ") + name;
    for (int n = 0; n <= 8; ++n) {
      for (const Rat& z : {Rat(2), Rat(1, 3), Rat(-1)}) {
        if (scale_expansion(unit(n), z, pr, RhoVariant::corrected) != scale_substitution(unit(n), z, pr)) {
          out.require(false, "scaling n=" + std::to_string(n) + " z=" + to_string(z) + tag);
        }
      }
    }
    std::vector<Rat> mixed;
    for (int i = 0; i <= 8; ++i) mixed.push_back(Rat(i % 2 == 0 ? i + 1 : -(i + 1), i + 2));
    const ChaosVector v(mixed);
    for (const auto& [y, y2] : std::vector<std::pair<Rat, Rat>>{{Rat(1, 3), Rat(-5, 2)}, {Rat(2), Rat(7, 4)}}) {
      out.require(translate(translate(v, y2, pr), y, pr) == translate(v, y + y2, pr), "group law" + tag);
    }
    for (const Rat& y : {Rat(1), Rat(-2, 3)}) {
      out.require(translation_series_residual(pr, y, 12) == 0, "series e^{yz} y=" + to_string(y) + tag);
    }
  }
  return out;
}

Outcome audit_completeness() {
  Outcome out;
  const Config config = config_for(sets()[0].params, 10);
  const AuditReport report = run_audit(config);
  out.require(to_csv(report.to_table()) == to_csv(run_audit(config).to_table()), "audit not deterministic");
  std::set<std::string> ids;
  for (const auto& e : report.entries) {
    out.require(ids.insert(e.formula_id).second, "duplicate " + e.formula_id);
    // Rational identities must be exact; floating-point ones carry their own tolerance.
    const bool exact_residual = e.residual.find('e') == std::string::npos;
    if (e.kind == EntryKind::canonical) {
      const bool ok = exact_residual ? e.status == Status::exact_match : e.status != Status::mismatch;
      out.require(ok, e.formula_id + " is " + status_name(e.status));
    }
  }
  for (const char* id : {"epsilon.closed-form.printed", "pmf.literal.mass", "moments.literal.canonical", "example.c2",
                         "example.k1", "example.k2", "stirling1.bounds.printed", "k.route.bell.literal",
                         "scaling.expansion.printed", "p3.addition.printed"}) {
    out.require(ids.count(id) == 1, std::string("missing ") + id);
  }
  out.require(report.canonical_ok(), "exit status would be 1");
  if (out.pass) out.detail = std::to_string(report.entries.size()) + " entries";
  return out;
}

Outcome non_orthogonality() {
  Outcome out;
  for (const auto& [name, pr] : sets()) {
    const MeasureModel model(pr, kDigits, 0);
    ScopedPrecision guard(kDigits);
    const Real s = to_real(Rat(1, 10)), t = to_real(Rat(1, 5));
    const Real closed = model.joint_laplace(s, t);
    out.require(abs(closed - model.joint_laplace_sum(s, t)) <= pow10_neg(15), std::string("oracle on ") + name);
    const Real spread = abs(closed - model.joint_laplace(to_real(Rat(1, 50)), Real(1)));
    out.require(spread > pow10_neg(6), std::string("spread on ") + name);
    out.detail += (out.detail.empty() ? "" : ", ") + std::string(name) + " spread " + to_string(spread, 4);
  }
  return out;
}

}  // namespace
}  // namespace dkap

int main() {
  using namespace dkap;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"cross-construction exactness", cross_construction},
      {"Appell/companion exactness", companion_exactness},
      {"P1-P4 identities", identities},
      {"measure consistency", measure_consistency},
      {"mixture Laplace identity", mixture_laplace},
      {"Monte Carlo", monte_carlo},
      {"classical limit", classical_limit},
      {"operators", operators},
      {"audit completeness", audit_completeness},
      {"non-orthogonality", non_orthogonality},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].second();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s) [%.1fs]%s%s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    if (!o.pass && !kUnattainable.count(id)) ++unexpected;
    if (!o.pass && kUnattainable.count(id)) std::printf("  criterion %d is documented as unattainable\n", id);
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
