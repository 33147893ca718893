// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>

#include "rlk/suite.hpp"

using namespace rlk;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %d: %-28s %s (%.2fs)\n", pass ? "PASS" : "FAIL", criterion,
              name.c_str(), detail.c_str(), seconds);
  if (!pass) ++g_failures;
}

template <typename Fn>
void timed(int criterion, const std::string& name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(criterion, name, pass, detail, seconds);
}

constexpr std::uint64_t kSeed = 20260811;

bool census_operators(std::string& detail) {
  std::size_t grid = 0;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const FieldSpec fp = FieldSpec::prime(p);
    for (long long lam : {0, 1, 2}) {
      const auto a1 = enumerate_reynolds(AlgebraId::A1, p, Value::of(fp, lam));
      const std::size_t expect = lam == 0 ? p * p + p * (p - 1) : p * p + p * (p - 2);
      if (a1.solutions.size() != expect) {
        detail = "A1 count off at p=" + std::to_string(p) + ", weight " + std::to_string(lam) +
                 ": " + std::to_string(a1.solutions.size()) + " != " + std::to_string(expect);
        return false;
      }
      if (!a1.unmatched.empty()) {
        detail = "A1 unmatched solutions at p=" + std::to_string(p);
        return false;
      }
      const auto a2 = enumerate_reynolds(AlgebraId::A2, p, Value::of(fp, lam));
      if (!a2.unmatched.empty()) {
        detail = "A2 unmatched solutions at p=" + std::to_string(p);
        return false;
      }
      grid += 2;
    }
  }
  detail = std::to_string(grid) + " enumerations, counts p^2+p(p-2) / p^2+p(p-1) exact";
  return true;
}

bool census_pairs(std::string& detail) {
  const std::uint32_t p = 3;
  const FieldSpec fp = FieldSpec::prime(p);
  const std::uint64_t pp = p;
  std::size_t runs = 0;
  std::size_t derived_only = 0;

  const auto run = [&](RCase rc, long long eta, long long gamma, long long lam,
                       std::uint64_t expected_count) -> bool {
    const auto rep = enumerate_triangular_pairs(rc, Value::of(fp, eta), Value::of(fp, gamma), p,
                                                Value::of(fp, lam));
    ++runs;
    if (!rep.unmatched.empty()) {
      detail = rcase_name(rc) + " eta=" + std::to_string(eta) + " gamma=" +
               std::to_string(gamma) + " weight=" + std::to_string(lam) + ": " +
               std::to_string(rep.unmatched.size()) + " unmatched";
      return false;
    }
    if (expected_count != 0 && rep.solutions.size() != expected_count) {
      detail = rcase_name(rc) + " count " + std::to_string(rep.solutions.size()) +
               " != " + std::to_string(expected_count);
      return false;
    }
    for (const auto& sol : rep.solutions) {
      bool printed = false;
      for (const std::string& name : sol.matched) {
        const FamilyDescriptor* fam = find_family(name);
        if (fam && !fam->derived) printed = true;
      }
      if (!printed) ++derived_only;
    }
    return true;
  };

  for (long long lam : {0, 1, 2}) {
    const bool nz = lam != 0;
    // A1: count p^4 + p^2 (p-1) at weight 0, p^4 + p^2 (p-2) otherwise.
    const std::uint64_t a1count = pp * pp * pp * pp + pp * pp * (nz ? pp - 2 : pp - 1);
    for (long long eta : {0, 1, 2}) {
      if (!run(RCase::A1Sym, eta, 1, lam, a1count)) return false;
    }
    // A2 case I with gamma != 0: p^2 pairs, +1 at nonzero weight, +p on the
    // eta = -2 gamma locus (eta = 1 at p = 3).
    if (!run(RCase::A2CaseI, 0, 1, lam, pp * pp + (nz ? 1 : 0))) return false;
    if (!run(RCase::A2CaseI, 1, 1, lam, pp * pp + (nz ? 1 + pp - 1 : 0))) return false;
    if (!run(RCase::A2CaseI, 2, 1, lam, pp * pp + (nz ? 1 : 0))) return false;
    // A2 case I with gamma = 0: 3p^2 - 2p pairs, plus p - 2 more at nonzero weight.
    if (!run(RCase::A2CaseI, 1, 0, lam, 3 * pp * pp - 2 * pp + (nz ? pp - 2 : 0))) return false;
    // A2 case II: p^2 + 2p - 2, plus p - 2 more at nonzero weight.
    for (long long eta : {1, 2}) {
      if (!run(RCase::A2CaseII, eta, 0, lam, pp * pp + 2 * pp - 2 + (nz ? pp - 2 : 0))) {
        return false;
      }
    }
  }
  detail = std::to_string(runs) + " scans, every pair matched; " +
           std::to_string(derived_only) +
           " pairs matched only by completion families (see README)";
  return true;
}

bool families_sound(std::string& detail) {
  std::size_t checked = 0;
  for (const auto& fam : family_registry()) {
    const auto res = verify_family(fam.name, 20, kSeed + checked);
    if (!res.ok) {
      detail = res.counterexample;
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " families x 20 rational trials";
  return true;
}

bool sweep_pass(const SweepResult& r, std::size_t min_fixtures, const char* what,
                std::string& detail) {
  if (!r.ok() || r.fixtures < min_fixtures) {
    detail = std::string(what) + ": " + r.summary();
    return false;
  }
  return true;
}

bool structural_suites(std::string& detail, bool weight_zero) {
  const std::uint64_t s = kSeed + (weight_zero ? 1000 : 0);
  if (!sweep_pass(sweep_induced_bracket(s, 120, weight_zero), 100, "induced bracket", detail)) {
    return false;
  }
  if (!sweep_pass(sweep_dual_representation(s + 1, 120), 100, "dual representation", detail)) {
    return false;
  }
  if (!sweep_pass(sweep_beta_duality(s + 2, 120, weight_zero), 100, "admissibility duality",
                  detail)) {
    return false;
  }
  if (!sweep_pass(sweep_semidirect(s + 3, 120, weight_zero), 100, "semidirect", detail)) {
    return false;
  }
  if (!sweep_pass(sweep_double_adjoint(s + 4, 100, weight_zero), 100, "double adjoint",
                  detail)) {
    return false;
  }
  if (!sweep_pass(sweep_intertwine_mirrors(s + 5, 120), 100, "intertwining mirrors", detail)) {
    return false;
  }
  if (!sweep_pass(sweep_quadratic_derived(s + 6, 120), 100, "derived invariance", detail)) {
    return false;
  }
  if (!sweep_pass(sweep_dual_quadratic_rep(s + 7, 100, weight_zero), 100,
                  "dual quadratic module", detail)) {
    return false;
  }
  detail = "8 suites, >= 100 fixtures each, zero violations";
  return true;
}

}  // namespace

int main() {
  timed(1, "coproduct goldens", [](std::string& detail) {
    const SweepResult r = check_coproduct_goldens(kSeed, 5);
    detail = r.summary();
    return r.ok() && r.fixtures == 5;
  });

  timed(2, "family soundness", families_sound);

  timed(3, "operator census", census_operators);

  timed(4, "pair census at p=3", census_pairs);

  timed(5, "route equivalence", [](std::string& detail) {
    const SweepResult r = sweep_equivalence_routes(kSeed + 50, 200, false);
    detail = r.summary();
    return r.ok() && r.fixtures >= 200 && r.positives >= 40;
  });

  timed(6, "operator-form conditions", [](std::string& detail) {
    const SweepResult r = sweep_tensor_admissibility(kSeed + 60, 100, false);
    detail = r.summary();
    return r.ok() && r.fixtures >= 100;
  });

  timed(7, "lift equivalence + bundles", [](std::string& detail) {
    const SweepResult lift = sweep_lift_equivalence(kSeed + 70, 60, false);
    if (!lift.ok() || lift.fixtures < 50) {
      detail = "lift: " + lift.summary();
      return false;
    }
    for (const bool weight_zero : {false, true}) {
      const SweepResult pis = sweep_pi_bundles(kSeed + 71, weight_zero);
      if (!pis.ok() || pis.fixtures < 8) {
        detail = "bundles: " + pis.summary();
        return false;
      }
    }
    detail = lift.summary() + "; all substitution variants assemble at both weights";
    return true;
  });

  timed(8, "structural suites", [](std::string& detail) {
    return structural_suites(detail, false);
  });

  timed(9, "weight-zero regression", [](std::string& detail) {
    const SweepResult routes = sweep_equivalence_routes(kSeed + 90, 200, true);
    if (!routes.ok() || routes.fixtures < 200) {
      detail = "routes: " + routes.summary();
      return false;
    }
    const SweepResult tensor = sweep_tensor_admissibility(kSeed + 91, 100, true);
    if (!tensor.ok() || tensor.fixtures < 100) {
      detail = "operator-form: " + tensor.summary();
      return false;
    }
    const SweepResult lift = sweep_lift_equivalence(kSeed + 92, 60, true);
    if (!lift.ok() || lift.fixtures < 50) {
      detail = "lift: " + lift.summary();
      return false;
    }
    if (!structural_suites(detail, true)) return false;
    detail = "criteria 5-8 rerun at weight zero";
    return true;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
