// One line per acceptance criterion; nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "g2lift/gglift.hpp"
#include "g2lift/ktypes.hpp"
#include "g2lift/structure_suite.hpp"
#include "support/characters.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace g2lift;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = s < budget_s;
  bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("criterion %d: %s  %s  (%.2f s, budget %.0f s%s)\n", id, pass ? "PASS" : "FAIL", o.detail.c_str(), s, budget_s,
              in_time ? "" : ", over budget");
  std::fflush(stdout);
}

template <class... A>
std::string fmt(const char* f, A... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

const LiftData& delta() {
  static const LiftData d = make_lift_data("delta", 800, 600);
  return d;
}

Outcome structure() {
  StructureOptions opt;
  opt.samples = 100;
  auto res = run_structure_suite(opt);
  Outcome o;
  std::size_t min_samples = SIZE_MAX;
  for (const auto& r : res) {
    min_samples = std::min(min_samples, r.samples);
    if (!r.passed() || r.samples < 100) {
      o.ok = false;
      o.detail += r.name + " failed; ";
    }
  }
  o.detail += fmt("%zu identities, >= %zu exact samples each", res.size(), min_samples);
  return o;
}

Outcome euler_factor() {
  Outcome o;
  o.ok = factorization_check() && factorization_check(1) && factorization_check(-1);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(0.0, 2 * M_PI), tt(-0.3, 0.3);
  const double primes[] = {2, 3, 5, 7, 11};
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    std::complex<double> T(tt(rng), tt(rng));
    worst = std::max(worst, factorization_residual(std::polar(1.0, ang(rng)), primes[i % 5], T));
  }
  o.ok = o.ok && worst < 1e-14;
  o.detail = fmt("formal identity %s, 20 spot checks max residual %.2e", o.ok ? "holds" : "FAILS", worst);
  return o;
}

Outcome shimura() {
  auto basis = plus_cusp_basis(6, 5000);
  QExpansion f = cached_eigenform(12, 5000);
  Outcome o;
  o.ok = basis.size() == 1 && static_cast<int>(basis.size()) == cusp_dimension(12);
  int checked = 0;
  for (long D = 1; D <= 40; ++D) {
    if (D > 1 && !is_fundamental_discriminant(BigInt(D))) continue;
    if (basis.front().c(D).is_zero()) continue;
    if (!shimura_lift_check(basis.front(), f, D, 10)) {
      o.ok = false;
      o.detail += fmt("D=%ld fails; ", D);
    }
    ++checked;
  }
  o.detail += fmt("dim plus space %zu, dim S12 %d, %d discriminants exact", basis.size(), cusp_dimension(12), checked);
  return o;
}

Outcome gross() {
  const auto& d = delta();
  std::vector<double> r;
  std::string row;
  for (long D : {5L, 8L, 12L, 13L, 17L}) {
    if (d.g.c(D).is_zero()) throw std::runtime_error("c(D) vanishes");
    r.push_back(gross_ratio(d, gross_canonical_vector(D), {1e-10, false}));
  }
  auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  double spread = (*hi - *lo) / std::abs(*hi);
  std::vector<double> rm;
  for (long D : {5L, 8L, 12L, 13L, 17L}) rm.push_back(gross_ratio(d, gross_maximal_vector(D)));
  auto [mlo, mhi] = std::minmax_element(rm.begin(), rm.end());
  Outcome o;
  o.ok = spread < 1e-4;
  o.detail = fmt("ratio %.10e, spread %.2e (maximal-order family: %.10e, spread %.2e)", r.front(), spread, rm.front(),
                 (*mhi - *mlo) / std::abs(*mhi));
  return o;
}

Outcome nonvanishing() {
  auto r = nonvanishing_split(delta());
  Outcome o;
  o.ok = r.status == Agreement::Agree && std::abs(r.lvalue) > 1e3 * r.error_bound;
  o.detail = fmt("%s, L(6) = %.12f, error bound %.1e", agreement_name(r.status), r.lvalue, r.error_bound);
  return o;
}

Outcome coherence() {
  const auto& d = delta();
  testing_support::RandomRationals rnd(606, 4);
  const long discs[] = {1, 5, 8, 12, 13};
  Outcome o;
  double worst = 0;
  int bad = 0;
  for (int i = 0; i < 50; ++i) {
    long D = discs[i % 5];
    auto base = fourier_coefficient(d, canonical_vector(Rational(-D), Rational(1)));
    Matrix2 m = make2(rnd.nonzero(), rnd.rational(), rnd.rational(), rnd.nonzero());
    if (det2(m).is_zero()) m = rnd.gl2_small(3);
    auto t = transform_coefficient(d, base, m);
    auto direct = fourier_coefficient(d, t.w);
    double dp = std::abs(direct.phase - t.phase);
    worst = std::max(worst, dp);
    if (!(direct.c_value == t.c_value) || dp >= 1e-10) ++bad;
  }
  o.ok = bad == 0;
  o.detail = fmt("50 translates, %d mismatches, max phase gap %.2e", bad, worst);
  return o;
}

Outcome plethysm() {
  auto h = oracles::complete_homogeneous(30);
  Outcome o;
  int bad = 0;
  for (long n = 0; n <= 30; ++n) {
    auto p = plethysm_symn_sym3(n);
    if (p != oracles::decompose(h[n]) || su2_dimension(p) != (n + 3) * (n + 2) * (n + 1) / 6) ++bad;
  }
  o.ok = bad == 0;
  o.detail = fmt("n = 0..30, %d mismatches", bad);
  return o;
}

Outcome cubic_rings() {
  testing_support::RandomRationals rnd(808);
  Outcome o;
  int disc_bad = 0;
  for (int i = 0; i < 100; ++i) {
    CubicVector w{Rational(rnd.integer(-50, 50)), Rational(rnd.integer(-50, 50), 3), Rational(rnd.integer(-50, 50), 3),
                  Rational(rnd.integer(-50, 50))};
    if (!(Rational(cubic_ring(w).discriminant()) == Rational(-27) * quartic_q(w))) ++disc_bad;
  }
  // Every integral form with coefficients in [-B, B] and 0 < |disc| <= 500.
  const long B = 8;
  long forms = 0, maximal = 0, max_bad = 0;
  for (long a = -B; a <= B; ++a)
    for (long b = -B; b <= B; ++b)
      for (long c = -B; c <= B; ++c)
        for (long e = -B; e <= B; ++e) {
          IntForm f{a, b, c, e};
          BigInt disc = form_discriminant(f);
          if (disc == 0 || abs(disc) > 500) continue;
          CubicRing r(f);
          bool local = r.is_maximal();
          if (local != oracles::brute_force_maximal(r)) ++max_bad;
          maximal += local;
          ++forms;
        }
  o.ok = disc_bad == 0 && max_bad == 0;
  o.detail = fmt("disc identity %d/100, maximality agrees on %ld/%ld forms in [-%ld,%ld]^4 (%ld maximal)", 100 - disc_bad,
                 forms - max_bad, forms, B, B, maximal);
  return o;
}

}  // namespace

int main() {
  criterion(1, 30, structure);
  criterion(2, 1, euler_factor);
  criterion(3, 120, shimura);
  criterion(4, 60, gross);
  criterion(5, 10, nonvanishing);
  criterion(6, 60, coherence);
  criterion(7, 5, plethysm);
  criterion(8, 60, cubic_rings);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
