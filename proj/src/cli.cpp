#include "cotcoord/cli.hpp"

#include "cotcoord/bernoulli.hpp"
#include "cotcoord/characters.hpp"
#include "cotcoord/combinatorics.hpp"
#include "cotcoord/coordinates.hpp"
#include "cotcoord/cotangent.hpp"
#include "cotcoord/serialize.hpp"
#include "cotcoord/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef COTCOORD_VERSION
#define COTCOORD_VERSION "0.0.0"
#endif

namespace cotcoord {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string decimal(std::complex<long double> z) {
  std::ostringstream os;
  os << std::setprecision(17) << static_cast<double>(z.real());
  double im = static_cast<double>(z.imag());
  os << (std::signbit(im) ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

json value_json(const CycElem& v) {
  return {{"value", to_json(v)}, {"decimal", to_json(complex_eval(v))}};
}

json config_json(const SuiteConfig& c) {
  return {{"n_max", c.n_max},
          {"r_max", c.r_max},
          {"j_max", c.j_max},
          {"float_tolerance", c.float_tolerance},
          {"float_n_max", c.float_n_max},
          {"float_r_max", c.float_r_max},
          {"eq42_n_max", c.eq42_n_max},
          {"eq42_r_max", c.eq42_r_max},
          {"recon_n_max", c.recon_n_max},
          {"recon_r_max", c.recon_r_max},
          {"gauss_f_max", c.gauss_f_max},
          {"bridge_r_max", c.bridge_r_max},
          {"prop1_r_max", c.prop1_r_max},
          {"stirling_k_max", c.stirling_k_max},
          {"prop1_values_r_max", c.prop1_values_r_max},
          {"bruteforce_r_max", c.bruteforce_r_max},
          {"series_d_r_max", c.series_d_r_max},
          {"suites", c.suites}};
}

struct Context {
  const std::vector<std::string>& args;
  std::ostream& out;
  std::ostream& err;
  std::string format;
  bool as_json() const { return format == "json"; }

  void emit(json inputs, json results) const {
    std::string command = "cotcoord";
    for (const auto& a : args) command += " " + a;
    json env = {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
                {"version", std::string(version())}};
    out << env.dump(2) << "\n";
  }
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

constexpr long kMaxExponent = 1000;

void check_exponent(const char* name, long v, long lo = 1) {
  require(v >= lo, std::string(name) + " must be at least " + std::to_string(lo) + ", got " + std::to_string(v));
  require(v <= kMaxExponent, std::string(name) + " must be at most " + std::to_string(kMaxExponent) + ", got " +
                                 std::to_string(v));
}

// Desk-scale guard; fields of larger conductor are impractical anyway.
constexpr long kMaxModulus = 100000;

void check_modulus(long n) {
  require(n >= 2, "modulus must be at least 2, got " + std::to_string(n));
  require(n <= kMaxModulus, "modulus must be at most " + std::to_string(kMaxModulus) + ", got " + std::to_string(n));
}

DirichletCharacter pick_character(long n, long index) {
  check_modulus(n);
  auto group = CharacterGroup::of(n);
  require(index >= 0 && static_cast<std::size_t>(index) < group->size(),
          "character index " + std::to_string(index) + " out of range for n=" + std::to_string(n) + " (valid: 0.." +
              std::to_string(group->size() - 1) + ")");
  return group->character(static_cast<std::size_t>(index));
}

std::string exponents_text(const DirichletCharacter& chi) {
  std::string s = "(";
  for (std::size_t i = 0; i < chi.exponents().size(); ++i) s += (i ? "," : "") + std::to_string(chi.exponents()[i]);
  return s + ")";
}

// chars

struct CharsArgs {
  long n = 0;
  bool gauss = false;
};

int run_chars(const Context& ctx, const CharsArgs& a) {
  check_modulus(a.n);
  auto chars = enumerate(a.n);
  if (ctx.as_json()) {
    json results = json::array();
    for (const auto& chi : chars) {
      json d = to_json(chi);
      if (a.gauss && is_primitive(chi)) {
        CycElem tau = gauss_sum(chi);
        auto [t, tb] = to_common_field(tau, gauss_sum(chi.conj()));
        d["gauss_sum"] = to_json(tau);
        d["gauss_norm"] = to_json(mul(t, tb));
      }
      results.push_back(std::move(d));
    }
    ctx.emit({{"n", a.n}, {"gauss", a.gauss}}, results);
    return 0;
  }
  ctx.out << "index  exponents  order  conductor  parity\n";
  for (const auto& chi : chars) {
    ctx.out << std::setw(5) << chi.index() << "  " << std::setw(9) << exponents_text(chi) << "  " << std::setw(5)
            << chi.order() << "  " << std::setw(9) << conductor(chi) << "  " << std::setw(6)
            << (parity(chi) == 1 ? "even" : "odd") << "\n";
    if (a.gauss && is_primitive(chi)) {
      CycElem tau = gauss_sum(chi);
      auto [t, tb] = to_common_field(tau, gauss_sum(chi.conj()));
      ctx.out << "       tau = " << tau << "\n       tau * tau(conj) = " << mul(t, tb) << "\n";
    }
  }
  return 0;
}

// coord

struct CoordArgs {
  long n = 0;
  long index = 0;
  long r = 0;
  long j = 0;
  bool has_r = false;
  bool has_j = false;
  bool one = false;
  std::string method;
  bool all_chars = false;
  bool reconstruct = false;
  bool float_check = false;
};

int run_coord(const Context& ctx, const CoordArgs& a) {
  DirichletCharacter chosen = pick_character(a.n, a.index);
  require(int(a.has_r) + int(a.has_j) + int(a.one) == 1, "give exactly one of <r>, --j J or --one");
  if (a.has_r) check_exponent("r", a.r);
  if (a.has_j) check_exponent("j", a.j);
  require(!a.reconstruct || a.all_chars, "--reconstruct needs --all-chars");
  require(!a.float_check || a.has_r, "--float-check needs <r>");

  Method method = Method::definitional;
  if (!a.method.empty()) {
    try {
      method = parse_method(a.method);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const long n = a.n;
  CycElem element;
  json inputs = {{"n", n}, {"char_index", a.index}, {"method", std::string(to_string(method))}};
  std::string label;
  if (a.has_r) {
    require(method == Method::definitional || method == Method::theorem1 || method == Method::eq42,
            "with <r> the method must be def, t1 or eq42");
    element = icot_power(a.r, n);
    inputs["r"] = a.r;
    label = "(i cot(pi/" + std::to_string(n) + "))^" + std::to_string(a.r);
  } else if (a.has_j) {
    require(method == Method::definitional || method == Method::closed_28, "with --j the method must be def or c28");
    element = cotangent_number(a.j, n);
    inputs["j"] = a.j;
    label = "i^" + std::to_string(a.j) + " cot_" + std::to_string(a.j - 1) + "(pi/" + std::to_string(n) + ")";
  } else {
    require(method == Method::definitional || method == Method::coord_one, "with --one the method must be def or one");
    element = CycElem::one(n);
    inputs["element"] = "one";
    label = "1";
  }

  auto coordinate = [&](const DirichletCharacter& chi) {
    switch (method) {
      case Method::definitional: return coord_definitional(chi, element);
      case Method::theorem1: return coord_power_closed(chi, a.r);
      case Method::eq42: return coord_power_eq42(chi, a.r);
      case Method::closed_28: return coord_cotangent_closed(chi, a.j);
      case Method::coord_one: return coord_one(chi);
    }
    throw std::logic_error("unhandled method");
  };

  int status = 0;
  json results = json::object();
  std::ostringstream text;
  if (a.all_chars) {
    inputs["all_chars"] = true;
    std::vector<CycElem> coords;
    json list = json::array();
    for (const auto& chi : enumerate(n)) {
      coords.push_back(coordinate(chi));
      json row = value_json(coords.back());
      row["char_index"] = chi.index();
      list.push_back(std::move(row));
      text << "y(chi_" << chi.index() << " | " << label << ") = " << coords.back() << "\n";
    }
    results["coordinates"] = std::move(list);
    if (a.reconstruct) {
      CycElem back = reconstruct(coords, n);
      bool ok = back == element;
      results["element"] = to_json(element);
      results["reconstructed"] = to_json(back);
      results["round_trip"] = ok;
      text << "element       = " << element << "\nreconstructed = " << back << "\nround trip " << (ok ? "ok" : "FAILED")
           << "\n";
      if (!ok) status = 1;
    }
  } else {
    CycElem y = coordinate(chosen);
    results = value_json(y);
    results["character"] = to_json(chosen);
    text << "y(chi_" << a.index << " mod " << n << " | " << label << ") = " << y << "\n  ~ "
         << decimal(complex_eval(y)) << "\n";
  }

  if (a.float_check) {
    // sum_k chi(k) (i cot(pi k/n))^r against y(conj chi | .) tau(chi_f)
    auto direct = direct_sum_float(chosen, a.r, n);
    CycElem y = coord_definitional(chosen.conj(), element);
    auto [ye, te] = to_common_field(y, gauss_sum(primitive_part(chosen)));
    auto via = complex_eval(mul(ye, te));
    results["float_check"] = {{"direct_sum", to_json(direct)},
                              {"via_coordinate", to_json(via)},
                              {"difference", static_cast<double>(std::abs(direct - via))}};
    text << "direct sum     ~ " << decimal(direct) << "\nvia coordinate ~ " << decimal(via)
         << "\ndifference     = " << static_cast<double>(std::abs(direct - via)) << "\n";
  }

  if (ctx.as_json())
    ctx.emit(inputs, results);
  else
    ctx.out << text.str();
  return status;
}

// coeffs

struct CoeffsArgs {
  std::string kind;
  long r = 0;
  bool bruteforce = false;
  bool series = false;
};

int run_coeffs(const Context& ctx, const CoeffsArgs& a, const SuiteConfig& base) {
  check_exponent("r", a.r);
  if (a.kind == "check") {
    require(!a.bruteforce && !a.series, "--bruteforce and --series apply to 'coeffs d' only");
    SuiteConfig cfg = base;
    cfg.bridge_r_max = a.r;
    SuiteResult res = suite_theorem2(cfg);
    if (ctx.as_json()) {
      ctx.emit({{"kind", "check"}, {"r_max", a.r}}, to_json(res));
    } else {
      ctx.out << "coefficient bridge, r <= " << a.r << ": " << res.cases << " cases, " << res.failures.size()
              << " failures\n";
      for (const auto& f : res.failures) ctx.out << "  FAIL " << f.key << ": " << f.expected << " vs " << f.actual << "\n";
    }
    return res.passed() ? 0 : 1;
  }
  require(a.kind == "c" || a.kind == "d", "coefficient kind must be c, d or check, got '" + a.kind + "'");
  require(!(a.bruteforce && a.series), "give at most one of --bruteforce and --series");
  require(a.kind == "d" || (!a.bruteforce && !a.series), "--bruteforce and --series apply to 'coeffs d' only");
  require(!a.bruteforce || a.r <= kBruteforceMaxR, "--bruteforce supports r <= " + std::to_string(kBruteforceMaxR));

  json rows = json::array();
  for (long j = a.r % 2 == 0 ? 2 : 1; j <= a.r; j += 2) {
    Rat v = a.kind == "c"    ? coeff_c(a.r, j)
            : a.bruteforce   ? coeff_d_bruteforce(a.r, j)
            : a.series       ? coeff_d_from_series(a.r, j)
                             : coeff_d(a.r, j);
    if (ctx.as_json())
      rows.push_back({{"r", a.r}, {"j", j}, {"value", to_string(v)}});
    else
      ctx.out << a.r << "," << j << ",\"" << to_string(v) << "\"\n";
  }
  if (ctx.as_json()) {
    std::string source = a.bruteforce ? "bruteforce" : a.series ? "series" : "default";
    ctx.emit({{"kind", a.kind}, {"r", a.r}, {"source", source}}, rows);
  }
  return 0;
}

// cot

struct CotArgs {
  long n = 0;
  long j = 0;
  long power = 0;
  bool has_j = false;
  bool has_power = false;
};

int run_cot(const Context& ctx, const CotArgs& a) {
  check_modulus(a.n);
  require(a.has_j != a.has_power, "give exactly one of --j J and --power R");
  CycElem v;
  json inputs = {{"n", a.n}};
  std::string label;
  if (a.has_j) {
    check_exponent("j", a.j);
    v = cotangent_number(a.j, a.n);
    inputs["j"] = a.j;
    label = "i^" + std::to_string(a.j) + " cot_" + std::to_string(a.j - 1) + "(pi/" + std::to_string(a.n) + ")";
  } else {
    check_exponent("power", a.power);
    v = icot_power(a.power, a.n);
    inputs["power"] = a.power;
    label = "(i cot(pi/" + std::to_string(a.n) + "))^" + std::to_string(a.power);
  }
  if (ctx.as_json())
    ctx.emit(inputs, value_json(v));
  else
    ctx.out << label << " = " << v << "\n  ~ " << decimal(complex_eval(v)) << "\n";
  return 0;
}

// bernoulli

struct BernoulliArgs {
  long r = 0;
  std::vector<long> character;
};

int run_bernoulli(const Context& ctx, const BernoulliArgs& a) {
  check_exponent("r", a.r, 0);
  if (a.character.empty()) {
    auto poly = bernoulli_polynomial(a.r);
    json coeffs = json::array();
    for (const auto& c : poly.coeffs) coeffs.push_back(to_string(c));
    Rat b = bernoulli_number(a.r);
    if (ctx.as_json()) {
      ctx.emit({{"r", a.r}}, {{"number", to_string(b)}, {"polynomial", coeffs}});
    } else {
      ctx.out << "B_" << a.r << " = " << to_string(b) << "\nB_" << a.r << "(x) =";
      for (std::size_t i = 0; i < poly.coeffs.size(); ++i)
        if (!is_zero(poly.coeffs[i])) ctx.out << " + (" << to_string(poly.coeffs[i]) << ")x^" << i;
      ctx.out << "\n";
    }
    return 0;
  }
  require(a.character.size() == 2, "--char takes a modulus and a character index");
  DirichletCharacter chi = pick_character(a.character[0], a.character[1]);
  require(is_primitive(chi), "character " + std::to_string(a.character[1]) + " mod " + std::to_string(a.character[0]) +
                                 " is not primitive (conductor " + std::to_string(conductor(chi)) + ")");
  CycElem v = generalized_bernoulli(a.r, chi);
  if (ctx.as_json()) {
    json results = value_json(v);
    results["character"] = to_json(chi);
    ctx.emit({{"r", a.r}, {"n", a.character[0]}, {"char_index", a.character[1]}}, results);
  } else {
    ctx.out << "B_{" << a.r << ", chi_" << a.character[1] << " mod " << a.character[0] << "} = " << v << "\n  ~ "
            << decimal(complex_eval(v)) << "\n";
  }
  return 0;
}

// series

struct SeriesArgs {
  std::string action;
  bool prop1 = false;
  bool stirling = false;
  long rmax = 0;
  long kmax = 0;
  bool has_rmax = false;
  bool has_kmax = false;
};

int run_series(const Context& ctx, const SeriesArgs& a, const SuiteConfig& base) {
  require(a.action == "verify", "series action must be 'verify', got '" + a.action + "'");
  require(a.prop1 || a.stirling, "give --prop1 and/or --stirling");
  long rmax = a.has_rmax ? a.rmax : base.prop1_r_max;
  long kmax = a.has_kmax ? a.kmax : base.stirling_k_max;
  if (a.prop1) check_exponent("--rmax", rmax);
  if (a.stirling) check_exponent("--kmax", kmax);

  bool all = true;
  json results = json::array();
  auto record = [&](const char* check, const char* var, long v, long order, bool holds) {
    all = all && holds;
    if (ctx.as_json())
      results.push_back({{"check", check}, {var, v}, {"order", order}, {"holds", holds}});
    else
      ctx.out << check << " " << var << "=" << v << " order=" << order << (holds ? " ok" : " FAILED") << "\n";
  };
  if (a.prop1)
    for (long r = 1; r <= rmax; ++r) record("prop1", "r", r, 2 * r + 4, verify_proposition_1(r, 2 * r + 4));
  if (a.stirling)
    for (long k = 1; k <= kmax; ++k) record("stirling", "k", k, 2 * k + 4, verify_stirling_identity(k, 2 * k + 4));
  if (ctx.as_json()) {
    json inputs = json::object();
    if (a.prop1) inputs["rmax"] = rmax;
    if (a.stirling) inputs["kmax"] = kmax;
    ctx.emit(inputs, results);
  }
  return all ? 0 : 1;
}

// verify

struct VerifyArgs {
  std::vector<std::string> suites;
  long n_max = 0;
  long r_max = 0;
  long j_max = 0;
  double tol = 0;
  long threads = 0;
  bool has_n = false;
  bool has_r = false;
  bool has_j = false;
  bool has_tol = false;
  bool has_threads = false;
  bool timing = false;
  bool list = false;
};

int run_verify(const Context& ctx, const VerifyArgs& a, SuiteConfig cfg) {
  if (a.list) {
    for (const auto& s : suite_names()) ctx.out << s << "\n";
    return 0;
  }
  try {
    if (a.has_n) cfg.set("n_max", std::to_string(a.n_max));
    if (a.has_r) cfg.set("r_max", std::to_string(a.r_max));
    if (a.has_j) cfg.set("j_max", std::to_string(a.j_max));
    if (a.has_tol) {
      std::ostringstream tol;
      tol << std::setprecision(17) << a.tol;
      cfg.set("float_tolerance", tol.str());
    }
    if (a.has_threads) cfg.set("threads", std::to_string(a.threads));
    if (!a.suites.empty()) {
      std::string joined;
      for (const auto& s : a.suites) joined += s + ",";
      cfg.set("suites", joined);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  auto results = run_suites(cfg);
  bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
  if (ctx.as_json()) {
    json list = json::array();
    for (const auto& r : results) list.push_back(to_json(r, a.timing));
    ctx.emit(config_json(cfg), list);
  } else {
    for (const auto& r : results) {
      ctx.out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures.size()
              << " failures (" << std::fixed << std::setprecision(2) << r.wall_seconds << " s)\n"
              << std::defaultfloat;
      for (const auto& f : r.failures) {
        ctx.out << "  " << f.key << "\n    inputs:   " << f.inputs.dump() << "\n    expected: " << f.expected.dump()
                << "\n    actual:   " << f.actual.dump() << "\n";
        if (!f.repro.empty()) ctx.out << "    repro:    " << f.repro << "\n";
      }
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

std::string_view version() { return COTCOORD_VERSION; }

void apply_config(std::istream& in, CliDefaults& defaults) {
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    auto where = "config line " + std::to_string(number) + ": ";
    if (eq == std::string::npos) throw std::invalid_argument(where + "expected key = value");
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    try {
      if (key == "format") {
        if (value != "text" && value != "json") throw std::invalid_argument("format must be text or json");
        defaults.format = value;
      } else {
        defaults.suite.set(key, value);
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character coordinates of cotangent values in cyclotomic fields", "cotcoord"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  std::string config_path;
  app.add_option("--format", format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--config", config_path, std::string("Config file (default: $") + kConfigEnvVar + ")");

  CharsArgs chars_args;
  auto* chars = app.add_subcommand("chars", "List the Dirichlet characters mod n");
  chars->add_option("n", chars_args.n, "Modulus, at least 2")->required();
  chars->add_flag("--gauss", chars_args.gauss, "Show Gauss sums of the primitive characters");

  CoordArgs coord_args;
  auto* coord = app.add_subcommand("coord", "Character coordinates of cotangent values");
  coord->add_option("n", coord_args.n, "Modulus, at least 2")->required();
  coord->add_option("char_index", coord_args.index, "Character index (see 'chars')")->required();
  auto* coord_r = coord->add_option("r", coord_args.r, "Power of i cot(pi/n)");
  auto* coord_j = coord->add_option("--j", coord_args.j, "Use the cotangent number i^j cot_{j-1}(pi/n)");
  coord->add_flag("--one", coord_args.one, "Use the element 1");
  coord->add_option("--method", coord_args.method, "def, t1, eq42 (with r); def, c28 (with --j); def, one (with --one)");
  coord->add_flag("--all-chars", coord_args.all_chars, "Emit the coordinate for every character mod n");
  coord->add_flag("--reconstruct", coord_args.reconstruct, "With --all-chars, rebuild the element from its coordinates");
  coord->add_flag("--float-check", coord_args.float_check, "Compare against a floating-point character sum");

  CoeffsArgs coeffs_args;
  auto* coeffs = app.add_subcommand("coeffs", "Expansion coefficients c_{r,j} and d_{r,j}");
  coeffs->add_option("kind", coeffs_args.kind, "c, d or check")->required();
  coeffs->add_option("r", coeffs_args.r, "r (for check: largest r)")->required();
  coeffs->add_flag("--bruteforce", coeffs_args.bruteforce, "d by literal enumeration");
  coeffs->add_flag("--series", coeffs_args.series, "d from the cotangent Laurent series");

  CotArgs cot_args;
  auto* cot = app.add_subcommand("cot", "Exact cotangent values in Q(zeta_n)");
  cot->add_option("n", cot_args.n, "n, at least 2")->required();
  auto* cot_j = cot->add_option("--j", cot_args.j, "Cotangent number i^j cot_{j-1}(pi/n)");
  auto* cot_power = cot->add_option("--power", cot_args.power, "(i cot(pi/n))^R");

  BernoulliArgs bern_args;
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers and generalized Bernoulli numbers");
  bern->add_option("r", bern_args.r, "Index r >= 0")->required();
  bern->add_option("--char", bern_args.character, "Primitive character: modulus and index")->expected(2);

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Laurent series identity checks");
  series->add_option("action", series_args.action, "verify")->required();
  series->add_flag("--prop1", series_args.prop1, "Cotangent power expansion, r = 1..rmax");
  series->add_flag("--stirling", series_args.stirling, "Stirling identity, k = 1..kmax");
  auto* series_rmax = series->add_option("--rmax", series_args.rmax, "Largest r");
  auto* series_kmax = series->add_option("--kmax", series_args.kmax, "Largest k");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suites", verify_args.suites, "Suites to run (default: all)");
  auto* v_n = verify->add_option("--n-max", verify_args.n_max, "Largest n for the exact suites");
  auto* v_r = verify->add_option("--r-max", verify_args.r_max, "Largest r for theorem1");
  auto* v_j = verify->add_option("--j-max", verify_args.j_max, "Largest j for eq28");
  auto* v_tol = verify->add_option("--tol", verify_args.tol, "Float suite tolerance");
  auto* v_threads = verify->add_option("--threads", verify_args.threads, "Worker threads (0: all cores)");
  verify->add_flag("--timing", verify_args.timing, "Include wall times in JSON output");
  verify->add_flag("--list", verify_args.list, "List suite names and exit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    CliDefaults defaults;
    std::string path = config_path;
    if (path.empty())
      if (const char* env = std::getenv(kConfigEnvVar)) path = env;
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot read config file: " + path);
      try {
        apply_config(in, defaults);
      } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
      }
    }
    Context ctx{args, out, err, format.empty() ? defaults.format : format};

    if (chars->parsed()) return run_chars(ctx, chars_args);
    if (coord->parsed()) {
      coord_args.has_r = coord_r->count() > 0;
      coord_args.has_j = coord_j->count() > 0;
      return run_coord(ctx, coord_args);
    }
    if (coeffs->parsed()) return run_coeffs(ctx, coeffs_args, defaults.suite);
    if (cot->parsed()) {
      cot_args.has_j = cot_j->count() > 0;
      cot_args.has_power = cot_power->count() > 0;
      return run_cot(ctx, cot_args);
    }
    if (bern->parsed()) return run_bernoulli(ctx, bern_args);
    if (series->parsed()) {
      series_args.has_rmax = series_rmax->count() > 0;
      series_args.has_kmax = series_kmax->count() > 0;
      return run_series(ctx, series_args, defaults.suite);
    }
    if (verify->parsed()) {
      verify_args.has_n = v_n->count() > 0;
      verify_args.has_r = v_r->count() > 0;
      verify_args.has_j = v_j->count() > 0;
      verify_args.has_tol = v_tol->count() > 0;
      verify_args.has_threads = v_threads->count() > 0;
      return run_verify(ctx, verify_args, defaults.suite);
    }
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace cotcoord
