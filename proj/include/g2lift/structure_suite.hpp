// Randomized exact identity checks for the G2 model, driven by one seed.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "g2lift/cubic.hpp"
#include "g2lift/g2.hpp"

namespace g2lift {

class SampleSource {
 public:
  SampleSource(std::uint64_t seed, long bound) : rng_(seed), bound_(bound) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-bound_, bound_), den(1, bound_);
    return Rational(num(rng_), den(rng_));
  }
  Rational nonzero() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }
  Vec4 vec4() { return {rational(), rational(), rational(), rational()}; }
  Matrix2 gl2() {
    for (;;) {
      Matrix2 a = make2(rational(), rational(), rational(), rational());
      if (!det2(a).is_zero()) return a;
    }
  }

 private:
  std::mt19937_64 rng_;
  long bound_;
};

using Counterexample = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> counterexample;  // first failing sample
  bool passed() const { return failures == 0; }
};

struct StructureOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  long bound = 1000;
  bool inject_weyl_fault = false;  // swaps w_a for its inverse inside iota
};

namespace detail {

inline std::string show(const Vec4& v) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

inline std::string show(const Matrix2& m) {
  return "(" + m(0, 0).to_string() + "," + m(0, 1).to_string() + ";" + m(1, 0).to_string() + "," + m(1, 1).to_string() + ")";
}

/// One sample: returns an empty optional on success, or the inputs and both sides on failure.
using Sampler = std::function<std::optional<Counterexample>(SampleSource&)>;

inline std::optional<Counterexample> compare(const GroupElement& lhs, const GroupElement& rhs, Counterexample inputs) {
  if (lhs == rhs) return std::nullopt;
  inputs.emplace_back("lhs", lhs.dump());
  inputs.emplace_back("rhs", rhs.dump());
  return inputs;
}

inline std::optional<Counterexample> compare(const Rational& lhs, const Rational& rhs, Counterexample inputs) {
  if (lhs == rhs) return std::nullopt;
  inputs.emplace_back("lhs", lhs.to_string());
  inputs.emplace_back("rhs", rhs.to_string());
  return inputs;
}

inline std::optional<Counterexample> require(bool ok, const GroupElement& g, Counterexample inputs) {
  if (ok) return std::nullopt;
  inputs.emplace_back("element", g.dump());
  return inputs;
}

inline GroupElement iota_word(bool fault) {
  GroupElement wa = fault ? weyl(kAlpha).inverse() : weyl(kAlpha), wb = weyl(kBeta);
  return wb * wa * wb * wa * wb.inverse();
}

inline std::vector<std::pair<std::string, Sampler>> structure_checks(const StructureOptions& opt) {
  std::vector<std::pair<std::string, Sampler>> c;
  c.emplace_back("heisen1", [](SampleSource& s) {
    Vec4 a = s.vec4(), b = s.vec4();
    Rational t1 = s.rational(), t2 = s.rational();
    return compare(heis_n(a, t1) * heis_n(b, t2), heis_n(add(a, b), t1 + t2 - a[3] * b[0] + Rational(3) * a[2] * b[1]),
                   {{"a", show(a)}, {"b", show(b)}, {"t1", t1.to_string()}, {"t2", t2.to_string()}});
  });
  c.emplace_back("heisen2", [](SampleSource& s) {
    Vec4 a = s.vec4(), b = s.vec4();
    Rational t1 = s.rational(), t2 = s.rational();
    return compare(heis_n1(a, t1) * heis_n1(b, t2), heis_n1(add(a, b), t1 + t2 + symplectic(a, b)),
                   {{"a", show(a)}, {"b", show(b)}, {"t1", t1.to_string()}, {"t2", t2.to_string()}});
  });
  c.emplace_back("heisen3", [](SampleSource& s) {
    Rational a1 = s.rational(), a2 = s.rational(), a3 = s.rational();
    Rational b1 = s.rational(), b2 = s.rational(), b3 = s.rational();
    GroupElement r = u_tilde(a1 + b1, a2 + b2, a3 + b3 + Rational(2) * a2 * b1).inverse() * u_tilde(a1, a2, a3) *
                     u_tilde(b1, b2, b3);
    return require(z_coords(r).has_value(), r,
                   {{"a", show(Vec4{a1, a2, a3, 0})}, {"b", show(Vec4{b1, b2, b3, 0})}});
  });
  c.emplace_back("heisen4", [](SampleSource& s) {
    Rational a1 = s.rational(), a2 = s.rational(), a3 = s.rational();
    Rational b1 = s.rational(), b2 = s.rational(), b3 = s.rational();
    GroupElement r = u_tilde1(a1 + b1, a2 + b2, a3 + b3 + a2 * b1 - a1 * b2).inverse() * u_tilde1(a1, a2, a3) *
                     u_tilde1(b1, b2, b3);
    return require(z_coords(r).has_value(), r,
                   {{"a", show(Vec4{a1, a2, a3, 0})}, {"b", show(Vec4{b1, b2, b3, 0})}});
  });
  c.emplace_back("action1", [](SampleSource& s) {
    Matrix2 A = s.gl2();
    Vec4 a = s.vec4();
    Rational z = s.rational(), D = det2(A);
    GroupElement m = levi_m(A);
    return compare(m * heis_n1(a, z) * m.inverse(), heis_n1(scale(rho3(A, a), D.inverse()), D * z),
                   {{"A", show(A)}, {"a", show(a)}, {"z", z.to_string()}});
  });
  c.emplace_back("action-tildeU", [](SampleSource& s) {
    Rational a1 = s.rational(), a2 = s.rational(), a3 = s.rational();
    Matrix2 A = s.gl2();
    Rational Di = det2(A).inverse();
    GroupElement L = levi_l(A);
    GroupElement lhs = L.inverse() * u_tilde1(a1, a2, a3) * L;
    GroupElement rhs = u_tilde1(Di * (A(0, 0) * a1 + A(1, 0) * a2), Di * (A(0, 1) * a1 + A(1, 1) * a2), Di * a3);
    GroupElement r = rhs.inverse() * lhs;
    return require(z_coords(r).has_value(), r, {{"A", show(A)}, {"a", show(Vec4{a1, a2, a3, 0})}});
  });
  c.emplace_back("actionZ", [](SampleSource& s) {
    Matrix2 A = s.gl2();
    Rational x = s.rational(), y = s.rational();
    Rational Di2 = det2(A).inverse().pow(2);
    GroupElement L = levi_l(A);
    return compare(L.inverse() * z_coord(x, y) * L,
                   z_coord(Di2 * (x * A(0, 0) + y * A(1, 0)), Di2 * (x * A(0, 1) + y * A(1, 1))),
                   {{"A", show(A)}, {"x", x.to_string()}, {"y", y.to_string()}});
  });
  c.emplace_back("ml", [](SampleSource& s) {
    Rational a = s.nonzero(), b = s.rational(), d = s.nonzero();
    Counterexample in{{"a", a.to_string()}, {"b", b.to_string()}, {"d", d.to_string()}};
    if (auto f = compare(levi_l(make2(a, 0, 0, d)), levi_m(make2(a * d, 0, 0, a)), in)) return f;
    if (auto f = compare(levi_l(make2(1, b, 0, 1)), heis_n({-b, 0, 0, 0}, 0), in)) return f;
    return compare(levi_m(make2(1, b, 0, 1)), u_coord({-b, 0, 0, 0}, 0), in);
  });
  const bool fault = opt.inject_weyl_fault;
  c.emplace_back("imi", [fault](SampleSource& s) {
    Matrix2 A = s.gl2();
    Rational Di = det2(A).inverse();
    GroupElement io = iota_word(fault);
    return compare(io * levi_m(A) * io.inverse(),
                   levi_m(make2(Di * A(0, 0), -Di * A(0, 1), -Di * A(1, 0), Di * A(1, 1))), {{"A", show(A)}});
  });
  c.emplace_back("weyl-action", [fault](SampleSource& s) {
    Vec4 a = s.vec4();
    Rational z = s.rational();
    GroupElement wa = fault ? weyl(kAlpha).inverse() : weyl(kAlpha);
    return compare(wa * heis_n1(a, z) * wa.inverse(), heis_n1({a[3], -a[2], a[1], -a[0]}, z),
                   {{"a", show(a)}, {"z", z.to_string()}, {"w_a", wa.dump()}});
  });
  c.emplace_back("pairing-rho3", [](SampleSource& s) {
    Matrix2 A = s.gl2();
    Vec4 w = s.vec4(), x = s.vec4();
    Rational D = det2(A);
    return compare(symplectic(rho3(A, w), x), symplectic(w, scale(rho3(A.inverse(), x), D * D * D)),
                   {{"A", show(A)}, {"w", show(w)}, {"x", show(x)}});
  });
  c.emplace_back("pairing-coadjoint", [](SampleSource& s) -> std::optional<Counterexample> {
    Matrix2 A = s.gl2();
    Vec4 w = s.vec4(), x = s.vec4();
    Counterexample in{{"A", show(A)}, {"w", show(w)}, {"x", show(x)}};
    GroupElement conj = levi_m(A) * heis_n1(x, 0) * levi_m(A).inverse();
    auto cx = heis1_coords(conj);
    if (!cx) return require(false, conj, in);
    return compare(symplectic(coadjoint_w(A, w), x), symplectic(w, cx->a), in);
  });
  c.emplace_back("q-covariance", [](SampleSource& s) {
    Matrix2 A = s.gl2();
    Vec4 w = s.vec4();
    return compare(quartic_q(rho3(A, w)), det2(A).pow(6) * quartic_q(w), {{"A", show(A)}, {"w", show(w)}});
  });
  c.emplace_back("modulus-det3", [](SampleSource& s) {
    Matrix2 A = s.gl2();
    return compare(modulus_det_n(A), det2(A).pow(3), {{"A", show(A)}});
  });
  c.emplace_back("modulus-det5", [](SampleSource& s) {
    Matrix2 A = s.gl2();
    return compare(modulus_det_u(A), det2(A).pow(5), {{"A", show(A)}});
  });
  c.emplace_back("preserves-form", [](SampleSource& s) -> std::optional<Counterexample> {
    Matrix2 A = s.gl2();
    Vec4 a = s.vec4();
    Rational t = s.rational();
    GroupElement g = levi_m(A) * heis_n(a, t) * levi_l(A) * u_tilde(a[0], a[1], a[2]) * iota();
    return require(preserves_form(g.matrix()), g, {{"A", show(A)}, {"a", show(a)}, {"t", t.to_string()}});
  });
  return c;
}

}  // namespace detail

/// Each check draws from its own stream seeded by (seed, check index).
inline std::vector<CheckResult> run_structure_suite(const StructureOptions& opt) {
  if (opt.samples < 1) throw std::invalid_argument("run_structure_suite: samples must be at least 1");
  std::vector<CheckResult> out;
  auto checks = detail::structure_checks(opt);
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    SampleSource src((static_cast<std::uint64_t>(words[0]) << 32) | words[1], opt.bound);
    CheckResult r;
    r.name = checks[i].first;
    for (std::size_t k = 0; k < opt.samples; ++k) {
      auto bad = checks[i].second(src);
      ++r.samples;
      if (bad) {
        ++r.failures;
        if (!r.counterexample) r.counterexample = std::move(bad);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace g2lift
