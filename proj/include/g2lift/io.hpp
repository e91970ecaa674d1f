// JSON encodings shared by the command-line tool and its tests.
#pragma once

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "g2lift/cubic.hpp"
#include "g2lift/gglift.hpp"
#include "g2lift/structure_suite.hpp"

namespace g2lift::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json rational(const Rational& r) { return r.to_fraction(); }

inline json vec4(const Vec4& v) { return json::array({rational(v[0]), rational(v[1]), rational(v[2]), rational(v[3])}); }

inline json matrix2(const Matrix2& m) {
  return json::array({json::array({rational(m(0, 0)), rational(m(0, 1))}), json::array({rational(m(1, 0)), rational(m(1, 1))})});
}

inline json complex(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

/// "a1,a2,a3,a4" with each entry an integer or p/q; surrounding blanks are ignored.
inline CubicVector parse_vec4(const std::string& s) {
  CubicVector w;
  std::stringstream ss(s);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("parse_vec4: empty entry");
    if (i >= 4) throw std::invalid_argument("parse_vec4: expected four entries");
    w[i++] = Rational::parse(item.substr(b, e - b + 1));
  }
  if (i != 4) throw std::invalid_argument("parse_vec4: expected four entries");
  return w;
}

inline json reduction(const CubicVector& w, const CanonicalReduction& r) {
  json j;
  j["w"] = vec4(w);
  j["q"] = rational(quartic_q(w));
  j["etale"] = etale_type(w).name();
  j["t"] = rational(r.t);
  j["S"] = rational(r.S);
  j["m"] = matrix2(r.m);
  j["m_prime"] = matrix2(r.m_prime);
  return j;
}

inline json coefficient(const LiftCoefficient& c) {
  json j;
  j["w"] = vec4(c.w);
  j["t"] = rational(c.t);
  j["S"] = rational(c.S);
  j["m"] = matrix2(c.m);
  j["m_prime"] = matrix2(c.m_prime);
  j["etale"] = c.etale;
  j["phase"] = complex(c.phase);
  j["c_value"] = rational(c.c_value);
  j["magnitude_sq"] = rational(c.magnitude_sq);
  j["normalization"] = "C_w / C(S); S = 1, -tS = 1 or a fundamental discriminant";
  return j;
}

inline json check(const CheckResult& r) {
  json j;
  j["name"] = r.name;
  j["status"] = r.passed() ? "pass" : "fail";
  j["samples"] = r.samples;
  j["failures"] = r.failures;
  if (r.counterexample) {
    json ce = json::object();
    for (const auto& [k, v] : *r.counterexample) ce[k] = v;
    j["counterexample"] = ce;
  }
  return j;
}

}  // namespace g2lift::io
