// Command-line front end: single evaluations, verification sweeps against the
// quadrature oracle, parameter sweeps, and the film-coefficient report.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hzeta/casimir.hpp"
#include "hzeta/closed_form_integrals.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/special_functions.hpp"
#include "hzeta/verify.hpp"

using json = nlohmann::ordered_json;
using namespace hzeta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNearSingular = 3;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Accepts "1.5", "-2", "1.5+2i", "1.5-2i", "2i", "-i".
Complex parse_complex(const std::string& s) {
  if (s.empty()) throw DomainError("empty numeric parameter");
  std::string t = s;
  double re = 0.0, im = 0.0;
  if (t.back() == 'i' || t.back() == 'I') {
    t.pop_back();
    // split at the last sign that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
      if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    std::string im_str;
    if (split == std::string::npos) {
      im_str = t;
    } else {
      re = std::stod(t.substr(0, split));
      im_str = t.substr(split);
    }
    if (im_str.empty() || im_str == "+")
      im = 1.0;
    else if (im_str == "-")
      im = -1.0;
    else
      im = std::stod(im_str);
  } else {
    re = std::stod(t);
  }
  return {re, im};
}

struct Params {
  std::map<std::string, std::string> raw;
  bool force_limit = false;

  Complex c(const std::string& key) const {
    auto it = raw.find(key);
    if (it == raw.end()) throw DomainError("missing required parameter --" + key);
    return parse_complex(it->second);
  }
  double d(const std::string& key) const {
    const Complex v = c(key);
    if (v.imag() != 0.0) throw DomainError("parameter --" + key + " must be real");
    return v.real();
  }
  long i(const std::string& key) const {
    const double v = d(key);
    if (v != static_cast<long>(v)) throw DomainError("parameter --" + key + " must be an integer");
    return static_cast<long>(v);
  }
  std::size_t count(const std::string& key, std::size_t fallback) const {
    return raw.count(key) ? static_cast<std::size_t>(i(key)) : fallback;
  }
};

ValueWithError wrap(Complex v, const std::string& method) {
  ValueWithError out;
  out.value = v;
  out.abs_err = 0.0;
  out.method = method;
  return out;
}

// eps-averaged two-sided limit escape hatch for near-integer parameters of
// the theorem series; reported with a degraded error estimate.
ValueWithError forced_limit(const std::string& target, Complex a, Complex b) {
  const double h = 1e-3;
  auto shift = [&](double s) {
    Complex as = a, bs = b;
    if (detail::dist_to_integer_ge2(a) < 1e-6) as += s;
    if (detail::dist_to_integer_ge2(b) < 1e-6) bs += s;
    return (target == "integral_I") ? integral_I(as, bs).value : integral_J(as, bs).value;
  };
  const Complex hi = shift(h), lo = shift(-h);
  ValueWithError out;
  out.value = 0.5 * (hi + lo);
  out.abs_err = 0.5 * std::abs(hi - lo) + h * h;
  out.method = "forced-two-sided-limit(h=1e-3)";
  return out;
}

ValueWithError eval_target(const std::string& target, const Params& p) {
  if (target == "log_gamma") return wrap(log_gamma(p.c("z")), "log-gamma");
  if (target == "digamma") return wrap(digamma(p.c("z")), "digamma");
  if (target == "pochhammer")
    return wrap(pochhammer(p.c("a"), static_cast<unsigned>(p.i("k"))), "pochhammer");
  if (target == "beta") return wrap(beta(p.c("a"), p.c("b")), "beta");
  if (target == "riemann_zeta") return riemann_zeta(p.c("s"));
  if (target == "riemann_zeta_derivative") return riemann_zeta_derivative(p.c("s"));
  if (target == "hurwitz_zeta") return hurwitz_zeta(p.c("a"), p.d("x"));
  if (target == "zeta1") return zeta1(p.c("a"), p.d("x"));
  if (target == "wilton_series")
    return wilton_series(p.c("a"), p.c("b"), p.c("z"), p.count("n-terms", 200));
  if (target == "zeta1_taylor") return zeta1_taylor(p.c("a"), p.d("z"), p.count("n-terms", 200));
  if (target == "moment_integral") return wrap(moment_integral(p.c("s")), "moment");
  if (target == "integral_I" || target == "integral_J") {
    try {
      return (target == "integral_I") ? integral_I(p.c("a"), p.c("b"))
                                      : integral_J(p.c("a"), p.c("b"));
    } catch (const NearSingularError&) {
      if (!p.force_limit) throw;
      return forced_limit(target, p.c("a"), p.c("b"));
    }
  }
  if (target == "integral_I_integer") return integral_I_integer(static_cast<int>(p.i("m")));
  if (target == "integral_J_integer") return integral_J_integer(static_cast<int>(p.i("m")));
  if (target == "andersson_integral") return andersson_integral(p.c("a"), p.c("b"));
  if (target == "complementary_power_integral")
    return complementary_power_integral(p.c("a"), p.c("b"));
  if (target == "mikolas_integral") return wrap(mikolas_integral(p.c("a"), p.c("b")), "mikolas");
  if (target == "complementary_hurwitz_integral")
    return wrap(complementary_hurwitz_integral(p.c("a"), p.c("b")), "complementary-hurwitz");
  if (target == "appendix_sum_S") return appendix_sum_S(static_cast<int>(p.i("m")));
  if (target == "upsilon_term")
    return wrap(upsilon_term(static_cast<int>(p.i("n")), static_cast<int>(p.i("m"))), "upsilon");
  if (target == "tail_integral")
    return wrap(tail_integral(EpsilonParam(p.d("eps"))), "tail");
  if (target == "K_closed") return K_closed(EpsilonParam(p.d("eps")));
  if (target == "K_assembled") return K_assembled(EpsilonParam(p.d("eps")));
  if (target == "c0") return wrap(c0(p.d("eps")), "c0");
  if (target == "c1_closed") return c1_closed(p.d("eps"));
  if (target == "c1_assembled") return c1_assembled(p.d("eps"));
  if (target == "amplitude_DD")
    return wrap(amplitude_DD(static_cast<int>(p.i("n")), p.d("eps")), "amplitude-DD");
  throw DomainError("unknown eval target '" + target + "'");
}

const std::vector<std::string> kKnownParams = {"a", "b",   "s", "z", "x",       "eps",
                                               "m", "n",   "k", "n-terms"};

json value_json(const ValueWithError& v) {
  json j;
  j["value_re"] = v.value.real();
  j["value_im"] = v.value.imag();
  j["abs_err"] = v.abs_err;
  j["terms_used"] = v.terms_used;
  j["method"] = v.method;
  return j;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    f << text;
  }
}

struct SweepAxis {
  std::string name;
  double lo = 0.0, hi = 0.0;
  std::size_t count = 1;
  bool swept = false;
  std::string fixed;
};

// "lo:hi:count" is a swept axis; anything else is a fixed value.
SweepAxis parse_axis(const std::string& name, const std::string& spec) {
  SweepAxis ax;
  ax.name = name;
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) {
    ax.fixed = spec;
    return ax;
  }
  const auto c2 = spec.find(':', c1 + 1);
  if (c2 == std::string::npos) throw DomainError("sweep range must be lo:hi:count");
  ax.lo = std::stod(spec.substr(0, c1));
  ax.hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
  ax.count = static_cast<std::size_t>(std::stoul(spec.substr(c2 + 1)));
  if (ax.count < 1) throw DomainError("sweep count must be >= 1");
  ax.swept = true;
  return ax;
}

double axis_value(const SweepAxis& ax, std::size_t idx) {
  if (ax.count == 1) return ax.lo;
  return ax.lo + (ax.hi - ax.lo) * static_cast<double>(idx) / static_cast<double>(ax.count - 1);
}

int run_sweep(const std::string& target, const std::map<std::string, std::string>& raw,
              const std::string& format, const std::string& output) {
  std::vector<SweepAxis> swept;
  Params base;
  for (const auto& [k, v] : raw) {
    SweepAxis ax = parse_axis(k, v);
    if (ax.swept)
      swept.push_back(ax);
    else
      base.raw[k] = v;
  }
  if (swept.empty() || swept.size() > 2)
    throw DomainError("sweep needs one or two swept parameters of the form lo:hi:count");

  struct Row {
    std::vector<std::pair<std::string, double>> params;
    ValueWithError v;
    std::string error;
  };
  std::vector<Row> rows;
  const std::size_t outer = swept[0].count;
  const std::size_t inner = swept.size() == 2 ? swept[1].count : 1;
  for (std::size_t i = 0; i < outer; ++i)
    for (std::size_t j = 0; j < inner; ++j) {
      Row row;
      Params p = base;
      row.params.emplace_back(swept[0].name, axis_value(swept[0], i));
      p.raw[swept[0].name] = fmt17(axis_value(swept[0], i));
      if (swept.size() == 2) {
        row.params.emplace_back(swept[1].name, axis_value(swept[1], j));
        p.raw[swept[1].name] = fmt17(axis_value(swept[1], j));
      }
      try {
        row.v = eval_target(target, p);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }

  std::ostringstream os;
  if (format == "csv") {
    for (const auto& [name, _] : rows.front().params) os << name << ",";
    os << "re,im,abs_err,error\n";
    for (const auto& row : rows) {
      for (const auto& [_, v] : row.params) os << fmt17(v) << ",";
      if (row.error.empty()) {
        os << fmt17(row.v.value.real()) << "," << fmt17(row.v.value.imag()) << ","
           << fmt17(row.v.abs_err) << ",\n";
      } else {
        std::string msg = row.error;
        for (char& ch : msg)
          if (ch == ',' || ch == '\n') ch = ';';
        os << ",,," << msg << "\n";
      }
    }
  } else {
    json arr = json::array();
    for (const auto& row : rows) {
      json j;
      for (const auto& [name, v] : row.params) j[name] = v;
      if (row.error.empty()) {
        j.update(value_json(row.v));
      } else {
        j["error"] = row.error;
      }
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
  }
  emit(os.str(), output);
  return kExitOk;
}

int run_verify_cmd(const std::string& suite, double tol, const std::string& output) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = verify_suite_names();
  else
    suites.push_back(suite);

  std::ostringstream os;
  int failures = 0;
  for (const auto& name : suites) {
    const VerifySuiteResult r = run_verify(name, tol);
    failures += r.fail_count;
    os << "suite " << r.suite << " (tol " << fmt17(r.tol) << ")\n";
    for (const auto& c : r.cases) {
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.inputs;
      if (c.error.empty())
        os << "  closed=" << fmt17(c.closed_form.real()) << "  oracle=" << fmt17(c.oracle.real())
           << "  delta=" << fmt17(c.abs_delta);
      else
        os << "  error: " << c.error;
      os << "\n";
    }
    os << "  " << r.pass_count << " passed, " << r.fail_count << " failed\n";
  }
  emit(os.str(), output);
  return failures == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form Hurwitz zeta product integrals and Dirichlet-film "
               "Casimir coefficients, with a quadrature oracle"};
  app.require_subcommand(1);

  std::string target, suite, format = "json", output;
  std::map<std::string, std::string> params;
  double tol = 1e-8;
  bool force_limit = false;
  std::optional<int> ncomp;
  double eps = 0.0;

  auto add_param_opts = [&](CLI::App* cmd) {
    for (const auto& name : kKnownParams)
      cmd->add_option("--" + name, params[name], "parameter " + name);
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate one operation");
  eval->add_option("target", target, "operation name")->required();
  add_param_opts(eval);
  eval->add_option("--tol", tol, "tolerance");
  eval->add_flag("--force-limit", force_limit,
                 "numerical two-sided limit for near-integer theorem parameters");
  eval->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  eval->add_option("--output", output, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--tol", tol, "relative tolerance");
  verify->add_option("--output", output, "output path (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one or two parameters");
  sweep->add_option("target", target, "operation name")->required();
  add_param_opts(sweep);
  sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--output", output, "output path (default stdout)");

  CLI::App* casimir = app.add_subcommand("casimir", "cross-checked coefficient report");
  casimir->add_option("--eps", eps, "dimension deficit")->required();
  int ncomp_raw = 0;
  CLI::Option* nopt = casimir->add_option("--n", ncomp_raw, "field components for the amplitude");
  casimir->add_option("--output", output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  // drop parameters the user did not pass
  for (auto it = params.begin(); it != params.end();)
    it = it->second.empty() ? params.erase(it) : std::next(it);

  try {
    if (eval->parsed()) {
      Params p;
      p.raw = params;
      p.force_limit = force_limit;
      const ValueWithError v = eval_target(target, p);
      emit(value_json(v).dump(2) + "\n", output);
      return kExitOk;
    }
    if (verify->parsed()) return run_verify_cmd(suite, tol, output);
    if (sweep->parsed()) return run_sweep(target, params, format, output);
    if (casimir->parsed()) {
      if (nopt->count() > 0) ncomp = ncomp_raw;
      const CasimirReport r = casimir_report(eps, ncomp);
      json j;
      j["eps"] = r.eps;
      j["c0"] = r.c0;
      j["c1"] = r.c1;
      j["c1_assembled"] = r.c1_assembled;
      j["K_closed"] = r.K_closed;
      j["K_assembled"] = r.K_assembled;
      j["c1_err"] = r.c1_err;
      j["K_err"] = r.K_err;
      if (r.n) {
        j["n"] = *r.n;
        j["amplitude_DD"] = *r.amplitude_first_order;
      }
      emit(j.dump(2) + "\n", output);
      return kExitOk;
    }
  } catch (const NearSingularError& e) {
    std::cerr << "near-singular: " << e.what() << "\n";
    return kExitNearSingular;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
