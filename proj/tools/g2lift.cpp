// g2lift: command-line front end for the G2 lift toolkit.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "g2lift/cubic.hpp"
#include "g2lift/gglift.hpp"
#include "g2lift/io.hpp"
#include "g2lift/ktypes.hpp"
#include "g2lift/lfunctions.hpp"
#include "g2lift/structure_suite.hpp"

using namespace g2lift;
using io::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3 };

struct Global {
  std::size_t prec = 2000;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  bool csv = false;
  bool ext_float = false;
  bool timing = false;
};

struct CommandError {
  int exit;
  std::string code, message;
};

json report(const std::string& command, json parameters) {
  json j;
  j["schema"] = io::kSchemaVersion;
  j["command"] = command;
  j["parameters"] = std::move(parameters);
  return j;
}

// Set in main; wall time is only reported on request so default output stays bitwise reproducible.
std::optional<std::chrono::steady_clock::time_point> g_started;

double elapsed_s() { return std::chrono::duration<double>(std::chrono::steady_clock::now() - *g_started).count(); }

void emit(const json& j) {
  if (!g_started) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  json t = j;
  t["wall_time_s"] = elapsed_s();
  std::cout << t.dump(2) << '\n';
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer list entry '" + item + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// `weyl:a`, `torus:b:2`, `root:a+b:3/2`, `levi_m:1,2,0,1`, `levi_l:...`, `iota`, `identity`.
GroupElement parse_element(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string p;
  while (std::getline(ss, p, ':')) parts.push_back(p);
  if (parts.empty()) throw std::invalid_argument("empty element");
  const std::string& kind = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() != n) throw std::invalid_argument("element '" + text + "' has the wrong number of fields");
  };
  if (kind == "identity") return need(1), GroupElement();
  if (kind == "iota") return need(1), iota();
  if (kind == "weyl") return need(2), weyl(RootLabel::parse(parts[1]));
  if (kind == "torus") return need(3), torus(RootLabel::parse(parts[1]), Rational::parse(parts[2]));
  if (kind == "root") return need(3), root_generator(RootLabel::parse(parts[1]), Rational::parse(parts[2]));
  if (kind == "levi_m" || kind == "levi_l") {
    need(2);
    Vec4 v = io::parse_vec4(parts[1]);
    Matrix2 A = make2(v[0], v[1], v[2], v[3]);
    return kind == "levi_m" ? levi_m(A) : levi_l(A);
  }
  throw std::invalid_argument("unknown element kind '" + kind + "'");
}

int cmd_g2_show(const Global&, const std::string& text, bool as_json) {
  GroupElement g = parse_element(text);
  if (!as_json) {
    std::cout << g.dump();
    return kPass;
  }
  json j = report("g2 show", {{"element", text}});
  json rows = json::array();
  for (std::size_t i = 0; i < 7; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < 7; ++k) row.push_back(io::rational(g.matrix()(i, k)));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  j["preserves_form"] = preserves_form(g.matrix());
  j["status"] = "pass";
  emit(j);
  return kPass;
}

int cmd_verify_structure(const Global& gl, std::size_t samples, bool fault) {
  StructureOptions opt;
  opt.samples = samples;
  opt.seed = gl.seed;
  opt.inject_weyl_fault = fault;
  auto results = run_structure_suite(opt);
  bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
  if (gl.csv) {
    std::cout << "check,status,samples,failures\n";
    for (const auto& r : results) std::cout << r.name << ',' << (r.passed() ? "pass" : "fail") << ',' << r.samples << ',' << r.failures << '\n';
    return ok ? kPass : kFail;
  }
  json j = report("verify-structure", {{"samples", samples}, {"seed", gl.seed}, {"inject_weyl_fault", fault}});
  j["checks"] = json::array();
  for (const auto& r : results) j["checks"].push_back(io::check(r));
  j["status"] = ok ? "pass" : "fail";
  emit(j);
  return ok ? kPass : kFail;
}

int cmd_mf_dump(const Global& gl, const std::string& form, bool half, const std::string& out) {
  int w = form_weight(form);
  QExpansion q = half ? plus_cusp_basis(w / 2, std::max<std::size_t>(gl.prec, 4 * w)).front().g : cached_eigenform(w, gl.prec);
  if (out.empty()) {
    q.write(std::cout);
  } else {
    std::ofstream os(out);
    if (!os) throw std::invalid_argument("cannot open " + out);
    q.write(os);
  }
  return kPass;
}

int cmd_mf_load(const Global&, const std::string& file) {
  std::ifstream is(file);
  if (!is) throw std::invalid_argument("cannot open " + file);
  QExpansion q = QExpansion::read(is);
  json j = report("mf load", {{"file", file}});
  j["weight"] = io::rational(q.weight());
  j["level"] = q.level();
  j["precision"] = q.precision();
  json head = json::array();
  for (std::size_t n = 0; n < std::min<std::size_t>(q.precision(), 10); ++n) head.push_back(io::rational(q[n]));
  j["coefficients"] = head;
  bool eigen = false;
  if (q.level() == 1 && q.weight().is_integer()) {
    try {
      require_certified_eigenform(q);
      eigen = true;
    } catch (const std::invalid_argument&) {
    }
    j["hecke_eigenform"] = eigen;
  } else {
    j["plus_support"] = plus_support(q);
  }
  j["status"] = "pass";
  emit(j);
  return kPass;
}

int cmd_lfunc_value(const Global& gl, const std::string& form, long D) {
  QExpansion f = cached_eigenform(form_weight(form), gl.prec);
  json j = report("lfunc value", {{"form", form}, {"disc", D}, {"tol", gl.tol}, {"prec", gl.prec}, {"ext_float", gl.ext_float}});
  if (gl.ext_float) {
    using quad = boost::multiprecision::cpp_bin_float_quad;
    auto v = central_twisted_value<quad>(f, D, gl.tol);
    j["value"] = static_cast<double>(v.value);
    j["value_text"] = v.value.str(34);
    j["error"] = static_cast<double>(v.abs_error_bound);
    j["terms"] = v.terms_used;
  } else {
    auto v = central_twisted_value(f, D, gl.tol);
    j["value"] = v.value;
    j["error"] = v.abs_error_bound;
    j["terms"] = v.terms_used;
  }
  j["status"] = "pass";
  if (gl.csv) {
    std::cout << "form,disc,value,error,terms\n" << form << ',' << D << ',' << fmt(j["value"].get<double>()) << ','
              << fmt(j["error"].get<double>()) << ',' << j["terms"].get<std::size_t>() << '\n';
    return kPass;
  }
  emit(j);
  return kPass;
}

int cmd_gg_coeff(const Global& gl, const std::string& form, const std::string& wtext, std::size_t root) {
  LiftData d = make_lift_data(form, gl.prec, gl.prec);
  CubicVector w = io::parse_vec4(wtext);
  auto c = fourier_coefficient(d, w, {root});
  json j = report("gg coeff", {{"form", form}, {"w", io::vec4(w)}, {"root", root}, {"prec", gl.prec}});
  j["coefficient"] = io::coefficient(c);
  j["status"] = "pass";
  emit(j);
  return kPass;
}

int cmd_gg_gross(const Global& gl, const std::string& form, const std::string& discs, const std::string& family,
                 double spread_tol) {
  if (family != "canonical" && family != "maximal") throw std::invalid_argument("family must be canonical or maximal");
  LiftData d = make_lift_data(form, gl.prec, gl.prec);
  GrossOptions opt{gl.tol, family == "maximal"};
  json rows = json::array();
  std::vector<double> ratios;
  for (long D : parse_list(discs)) {
    if (D < 2 || !is_fundamental_discriminant(BigInt(D)))
      throw std::invalid_argument("disc " + std::to_string(D) + " is not a positive fundamental discriminant");
    CubicVector w = family == "maximal" ? gross_maximal_vector(D) : gross_canonical_vector(D);
    json row;
    row["disc"] = D;
    row["w"] = io::vec4(w);
    row["maximal"] = cubic_ring(w).is_maximal();
    if (d.g.c(static_cast<std::size_t>(D)).is_zero()) {
      row["c"] = "0/1";
      row["status"] = "skipped";
      rows.push_back(row);
      continue;
    }
    auto r = gross_ratio_detail(d, w, opt);
    row["c"] = io::rational(r.coefficient.c_value);
    row["l_split"] = r.l_split;
    row["ratio"] = r.ratio;
    row["status"] = "ok";
    ratios.push_back(r.ratio);
    rows.push_back(row);
  }
  double spread = 0;
  if (!ratios.empty()) {
    auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    spread = (*hi - *lo) / std::abs(*hi);
  }
  bool ok = ratios.size() >= 2 && spread < spread_tol;
  if (gl.csv) {
    std::cout << "disc,c,ratio,status\n";
    for (const auto& r : rows)
      std::cout << r["disc"].get<long>() << ',' << r["c"].get<std::string>() << ','
                << (r.contains("ratio") ? fmt(r["ratio"].get<double>()) : "") << ',' << r["status"].get<std::string>() << '\n';
    std::cout << "# spread," << fmt(spread) << '\n';
    return ok ? kPass : kFail;
  }
  json j = report("gg gross", {{"form", form}, {"discs", parse_list(discs)}, {"family", family}, {"tol", gl.tol}, {"prec", gl.prec}, {"spread_tol", spread_tol}});
  j["rows"] = rows;
  j["spread"] = spread;
  if (!ratios.empty()) j["mean_ratio"] = std::accumulate(ratios.begin(), ratios.end(), 0.0) / ratios.size();
  j["status"] = ok ? "pass" : "fail";
  emit(j);
  return ok ? kPass : kFail;
}

int cmd_gg_nonvanishing(const Global& gl, const std::string& form) {
  LiftData d = make_lift_data(form, gl.prec, gl.prec);
  auto r = nonvanishing_split(d, gl.tol);
  json j = report("gg nonvanishing", {{"form", form}, {"tol", gl.tol}, {"prec", gl.prec}});
  j["coefficient_nonzero"] = r.coefficient_nonzero;
  j["lvalue_nonzero"] = r.lvalue_nonzero;
  j["lvalue"] = r.lvalue;
  j["error_bound"] = r.error_bound;
  j["agreement"] = agreement_name(r.status);
  const char* status = r.status == Agreement::Agree ? "pass" : r.status == Agreement::Mismatch ? "fail" : "inconclusive";
  j["status"] = status;
  emit(j);
  return r.status == Agreement::Agree ? kPass : r.status == Agreement::Mismatch ? kFail : kInconclusive;
}

int cmd_ktypes(const Global& gl, long n, long k) {
  auto dec = plethysm_symn_sym3(n);
  long expected = (n + 3) * (n + 2) * (n + 1) / 6;
  bool ok = su2_dimension(dec) == expected;
  if (gl.csv) {
    std::cout << "j,multiplicity\n";
    for (auto it = dec.rbegin(); it != dec.rend(); ++it) std::cout << it->first << ',' << it->second << '\n';
    return ok ? kPass : kFail;
  }
  json j = report("ktypes", {{"n", n}, {"k", k}});
  json rows = json::array();
  for (auto it = dec.rbegin(); it != dec.rend(); ++it) rows.push_back({{"j", it->first}, {"multiplicity", it->second}});
  j["decomposition"] = rows;
  j["dimension"] = su2_dimension(dec);
  j["expected_dimension"] = expected;
  if (k) j["ktype_dimension"] = ktype_dimension(k, n).get_str();
  j["status"] = ok ? "pass" : "fail";
  emit(j);
  return ok ? kPass : kFail;
}

int cmd_cubic_reduce(const Global&, const std::string& wtext, std::size_t root) {
  CubicVector w = io::parse_vec4(wtext);
  auto r = reduce_to_canonical(w, {root});
  json j = report("cubic reduce", {{"w", io::vec4(w)}, {"root", root}});
  j["reduction"] = io::reduction(w, r);
  j["normalized"] = io::reduction(w, normalize_reduction(w, r));
  if (in_lattice(w)) {
    auto ring = cubic_ring(w);
    j["ring_discriminant"] = ring.discriminant().get_str();
    j["maximal"] = ring.is_maximal();
  }
  j["status"] = "pass";
  emit(j);
  return kPass;
}

int fail_with(const std::string& command, const CommandError& e) {
  json j;
  j["schema"] = io::kSchemaVersion;
  j["command"] = command;
  j["status"] = "error";
  j["error"] = {{"code", e.code}, {"message", e.message}};
  emit(j);
  std::cerr << "g2lift: " << e.code << ": " << e.message << '\n';
  return e.exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical tools for the Fourier coefficients of the G2 lift"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_option("--prec", gl.prec, "q-expansion precision")->capture_default_str();
  app.add_option("--tol", gl.tol, "tolerance for numerical L-values")->capture_default_str();
  app.add_option("--seed", gl.seed, "RNG seed")->capture_default_str();
  app.add_flag("--csv", gl.csv, "CSV instead of JSON for tabular commands");
  app.add_flag("--ext-float", gl.ext_float, "128-bit floating point for L-values");
  app.add_flag("--timing", gl.timing, "report wall time (JSON field wall_time_s, and stderr)");

  std::string command;
  std::function<int()> run;

  auto* g2 = app.add_subcommand("g2", "G2 group elements");
  g2->require_subcommand(1);
  auto* show = g2->add_subcommand("show", "dump a group element as a 7x7 grid");
  std::string element = "iota";
  bool show_json = false;
  show->add_option("--element", element, "identity | iota | weyl:R | torus:R:t | root:R:u | levi_m:a,b,c,d | levi_l:a,b,c,d")
      ->capture_default_str();
  show->add_flag("--json", show_json, "JSON output");
  show->callback([&] {
    command = "g2 show";
    run = [&] { return cmd_g2_show(gl, element, show_json); };
  });

  auto* vs = app.add_subcommand("verify-structure", "randomized exact identity suite");
  std::size_t samples = 100;
  bool fault = false;
  vs->add_option("--samples", samples, "samples per check")->capture_default_str()->check(CLI::PositiveNumber);
  vs->add_flag("--inject-weyl-fault", fault, "use a wrong Weyl representative (negative test)");
  vs->callback([&] {
    command = "verify-structure";
    run = [&] { return cmd_verify_structure(gl, samples, fault); };
  });

  auto* mf = app.add_subcommand("mf", "modular form caches");
  mf->require_subcommand(1);
  auto* dump = mf->add_subcommand("dump", "write a q-expansion in cache format");
  std::string form = "delta", out;
  bool half = false;
  dump->add_option("--form", form, "delta | f16 | f20")->capture_default_str();
  dump->add_flag("--half", half, "the matching plus-space form of weight k + 1/2");
  dump->add_option("--out", out, "output file (default stdout)");
  dump->callback([&] {
    command = "mf dump";
    run = [&] { return cmd_mf_dump(gl, form, half, out); };
  });
  auto* load = mf->add_subcommand("load", "read and summarize a cache file");
  std::string file;
  load->add_option("--file", file, "cache file")->required();
  load->callback([&] {
    command = "mf load";
    run = [&] { return cmd_mf_load(gl, file); };
  });

  auto* lf = app.add_subcommand("lfunc", "central L-values");
  lf->require_subcommand(1);
  auto* value = lf->add_subcommand("value", "L(k, f x chi_D)");
  long disc = 1;
  value->add_option("--form", form, "delta | f16 | f20")->capture_default_str();
  value->add_option("--disc", disc, "1 or a positive fundamental discriminant")->capture_default_str();
  value->callback([&] {
    command = "lfunc value";
    run = [&] { return cmd_lfunc_value(gl, form, disc); };
  });

  auto* gg = app.add_subcommand("gg", "Fourier coefficients of the lift");
  gg->require_subcommand(1);
  auto* coeff = gg->add_subcommand("coeff", "coefficient record at w");
  std::string wtext;
  std::size_t root = 0;
  coeff->add_option("--form", form, "delta | f16 | f20")->capture_default_str();
  coeff->add_option("--w", wtext, "a1,a2,a3,a4")->required();
  coeff->add_option("--root", root, "index of the rational root used by the reduction")->capture_default_str();
  coeff->callback([&] {
    command = "gg coeff";
    run = [&] { return cmd_gg_coeff(gl, form, wtext, root); };
  });
  auto* gross = gg->add_subcommand("gross", "ratio test over discriminants");
  std::string discs = "5,8,12,13,17", family = "canonical";
  double spread_tol = 1e-4;
  gross->add_option("--form", form, "delta | f16 | f20")->capture_default_str();
  gross->add_option("--discs", discs, "comma-separated fundamental discriminants")->capture_default_str();
  gross->add_option("--family", family, "canonical | maximal")->capture_default_str();
  gross->add_option("--spread-tol", spread_tol, "pass threshold for the relative spread")->capture_default_str();
  gross->callback([&] {
    command = "gg gross";
    run = [&] { return cmd_gg_gross(gl, form, discs, family, spread_tol); };
  });
  auto* nv = gg->add_subcommand("nonvanishing", "c(1) != 0 against L(k, f) != 0");
  nv->add_option("--form", form, "delta | f16 | f20")->capture_default_str();
  nv->callback([&] {
    command = "gg nonvanishing";
    run = [&] { return cmd_gg_nonvanishing(gl, form); };
  });

  auto* kt = app.add_subcommand("ktypes", "SU(2) decomposition of Sym^n(Sym^3)");
  long n = 5, kk = 0;
  kt->add_option("--n", n, "symmetric power")->capture_default_str()->check(CLI::NonNegativeNumber);
  kt->add_option("--k", kk, "also report dim V_{k,n}");
  kt->callback([&] {
    command = "ktypes";
    run = [&] { return cmd_ktypes(gl, n, kk); };
  });

  auto* cubic = app.add_subcommand("cubic", "binary cubic forms");
  cubic->require_subcommand(1);
  auto* reduce = cubic->add_subcommand("reduce", "canonical reduction of w");
  reduce->add_option("--w", wtext, "a1,a2,a3,a4")->required();
  reduce->add_option("--root", root, "index of the rational root")->capture_default_str();
  reduce->callback([&] {
    command = "cubic reduce";
    run = [&] { return cmd_cubic_reduce(gl, wtext, root); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!run) return kUsage;

  if (gl.timing) g_started = std::chrono::steady_clock::now();
  int code;
  try {
    code = run();
  } catch (const FormUnsupported& e) {
    code = fail_with(command, {kUsage, "FORM_UNSUPPORTED", e.what()});
  } catch (const SeriesInstability& e) {
    code = fail_with(command, {kInconclusive, "SERIES_INSTABILITY", e.what()});
  } catch (const CentralVanishing& e) {
    code = fail_with(command, {kInconclusive, "CENTRAL_VANISHING", e.what()});
  } catch (const std::out_of_range& e) {
    code = fail_with(command, {kUsage, "PRECISION_SHORTFALL", e.what()});
  } catch (const std::invalid_argument& e) {
    code = fail_with(command, {kUsage, "INVALID_INPUT", e.what()});
  } catch (const std::domain_error& e) {
    code = fail_with(command, {kUsage, "UNSUPPORTED_INPUT", e.what()});
  } catch (const std::exception& e) {
    code = fail_with(command, {kFail, "INTERNAL", e.what()});
  }
  if (gl.timing) std::cerr << "wall_time_s " << elapsed_s() << '\n';
  return code;
}
