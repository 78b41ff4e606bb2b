#include "cotcoord/verify.hpp"

#include "cotcoord/arith.hpp"
#include "cotcoord/bernoulli.hpp"
#include "cotcoord/characters.hpp"
#include "cotcoord/combinatorics.hpp"
#include "cotcoord/coordinates.hpp"
#include "cotcoord/cotangent.hpp"
#include "cotcoord/serialize.hpp"
#include "cotcoord/series.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <thread>

namespace cotcoord {

namespace {

using nlohmann::json;

long parse_long(std::string_view key, std::string_view text) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("config key " + std::string(key) + ": not an integer: " + std::string(text));
  return v;
}

double parse_double(std::string_view key, std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !(v > 0))
    throw std::invalid_argument("config key " + std::string(key) + ": not a positive number: " + s);
  return v;
}

// One case: returns a failure record or nothing.
struct Case {
  std::string key;
  std::function<std::optional<CaseFailure>()> run;
};

CaseFailure failure(std::string key, json inputs, json expected, json actual, std::string repro) {
  return {std::move(key), std::move(inputs), std::move(expected), std::move(actual), std::move(repro)};
}

SuiteResult run_cases(std::string name, std::vector<Case> cases, unsigned threads) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::optional<CaseFailure>> outcomes(cases.size());

  auto work = [&](std::size_t i) {
    try {
      outcomes[i] = cases[i].run();
    } catch (const std::exception& e) {
      outcomes[i] = failure(cases[i].key, json::object(), json(), json{{"error", e.what()}}, "");
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) work(i);
      });
  }

  SuiteResult result;
  result.name = std::move(name);
  result.cases = static_cast<long>(cases.size());
  for (auto& o : outcomes)
    if (o) result.failures.push_back(std::move(*o));
  std::sort(result.failures.begin(), result.failures.end(),
            [](const CaseFailure& a, const CaseFailure& b) { return a.key < b.key; });
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string str(long v) { return std::to_string(v); }

std::string char_key(const DirichletCharacter& chi) {
  return "n=" + str(chi.modulus()) + " chi=" + str(static_cast<long>(chi.index()));
}

json char_inputs(const DirichletCharacter& chi) {
  return {{"n", chi.modulus()}, {"char_index", chi.index()}, {"exponents", chi.exponents()}};
}

bool parity_matches(const DirichletCharacter& chi, long r) { return (r % 2 == 0) == (parity(chi) == 1); }

std::vector<long> eq42_moduli(long n_max) {
  std::vector<long> out;
  if (n_max >= 4) out.push_back(4);
  for (long p = 2; p <= n_max; ++p)
    if (is_prime(p)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

json complex_json(std::complex<long double> z) { return to_json(z); }

}  // namespace

void SuiteConfig::set(std::string_view key, std::string_view value) {
  const std::map<std::string_view, long SuiteConfig::*> longs = {
      {"n_max", &SuiteConfig::n_max},
      {"r_max", &SuiteConfig::r_max},
      {"j_max", &SuiteConfig::j_max},
      {"float_n_max", &SuiteConfig::float_n_max},
      {"float_r_max", &SuiteConfig::float_r_max},
      {"eq42_n_max", &SuiteConfig::eq42_n_max},
      {"eq42_r_max", &SuiteConfig::eq42_r_max},
      {"recon_n_max", &SuiteConfig::recon_n_max},
      {"recon_r_max", &SuiteConfig::recon_r_max},
      {"gauss_f_max", &SuiteConfig::gauss_f_max},
      {"bridge_r_max", &SuiteConfig::bridge_r_max},
      {"prop1_r_max", &SuiteConfig::prop1_r_max},
      {"stirling_k_max", &SuiteConfig::stirling_k_max},
      {"prop1_values_r_max", &SuiteConfig::prop1_values_r_max},
      {"bruteforce_r_max", &SuiteConfig::bruteforce_r_max},
      {"series_d_r_max", &SuiteConfig::series_d_r_max},
  };
  if (auto it = longs.find(key); it != longs.end()) {
    long v = parse_long(key, value);
    if (v < 1) throw std::invalid_argument("config key " + std::string(key) + " must be at least 1");
    if (key == "bruteforce_r_max" && v > kBruteforceMaxR)
      throw std::invalid_argument("bruteforce_r_max is at most " + str(kBruteforceMaxR));
    this->*(it->second) = v;
  } else if (key == "float_tolerance") {
    float_tolerance = parse_double(key, value);
  } else if (key == "threads") {
    long v = parse_long(key, value);
    if (v < 0) throw std::invalid_argument("threads must be non-negative");
    threads = static_cast<unsigned>(v);
  } else if (key == "suites") {
    suites.clear();
    std::string_view rest = value;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto item = rest.substr(0, comma);
      if (!item.empty()) {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), item) == names.end())
          throw std::invalid_argument("unknown suite: " + std::string(item));
        suites.emplace_back(item);
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  } else {
    throw std::invalid_argument("unknown config key: " + std::string(key));
  }
}

SuiteResult suite_theorem1(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (long n = 2; n <= config.n_max; ++n)
    for (const auto& chi : enumerate(n))
      for (long r = 1; r <= config.r_max; ++r)
        cases.push_back({char_key(chi) + " r=" + str(r), [chi, n, r] () -> std::optional<CaseFailure> {
          CycElem closed = coord_power_closed(chi, r);
          CycElem def = coord_definitional(chi, icot_power(r, n));
          bool ok = closed == def && (parity_matches(chi, r) || closed.is_zero());
          if (ok) return std::nullopt;
          std::string cmd = "cotcoord coord " + str(n) + " " + str(static_cast<long>(chi.index())) + " " + str(r);
          auto inputs = char_inputs(chi);
          inputs["r"] = r;
          return failure(char_key(chi) + " r=" + str(r), inputs, to_json(def), to_json(closed),
                         cmd + " --method def ; " + cmd + " --method t1");
        }});
  return run_cases("theorem1", std::move(cases), config.threads);
}

SuiteResult suite_eq28(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (long n = 2; n <= config.n_max; ++n)
    for (const auto& chi : enumerate(n))
      for (long j = 1; j <= config.j_max; ++j)
        cases.push_back({char_key(chi) + " j=" + str(j), [chi, n, j] () -> std::optional<CaseFailure> {
          CycElem closed = coord_cotangent_closed(chi, j);
          CycElem def = coord_definitional(chi, cotangent_number(j, n));
          bool ok = closed == def && (parity_matches(chi, j) || closed.is_zero());
          if (ok) return std::nullopt;
          std::string cmd = "cotcoord coord " + str(n) + " " + str(static_cast<long>(chi.index())) + " --j " + str(j);
          auto inputs = char_inputs(chi);
          inputs["j"] = j;
          inputs["conductor"] = conductor(chi);
          return failure(char_key(chi) + " j=" + str(j), inputs, to_json(def), to_json(closed),
                         cmd + " --method def ; " + cmd + " --method c28");
        }});
  return run_cases("eq28", std::move(cases), config.threads);
}

SuiteResult suite_theorem2(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (long r = 1; r <= config.bridge_r_max; ++r)
    for (long j = 1; j <= r; ++j) {
      std::string key = "r=" + str(r) + " j=" + str(j);
      cases.push_back({key, [r, j, key] () -> std::optional<CaseFailure> {
        Rat c = coeff_c(r, j);
        bool same_parity = (r - j) % 2 == 0;
        Rat other = same_parity ? bridge_4_7(r, j) : coeff_d(r, j);
        bool ok = same_parity ? c == other : (is_zero(c) && is_zero(other));
        if (ok) return std::nullopt;
        return failure(key, {{"r", r}, {"j", j}}, to_string(c),
                       same_parity ? json(to_string(other)) : json{{"coeff_d", to_string(other)}},
                       "cotcoord coeffs c " + str(r) + " ; cotcoord coeffs d " + str(r) + " ; cotcoord coeffs check " +
                           str(r));
      }});
    }
  return run_cases("theorem2", std::move(cases), config.threads);
}

SuiteResult suite_eq42(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (long n : eq42_moduli(config.eq42_n_max))
    for (const auto& chi : enumerate(n)) {
      if (!is_primitive(chi)) continue;
      for (long r = 1; r <= config.eq42_r_max; ++r)
        cases.push_back({char_key(chi) + " r=" + str(r), [chi, n, r] () -> std::optional<CaseFailure> {
          CycElem closed = coord_power_eq42(chi, r);
          CycElem def = coord_definitional(chi, icot_power(r, n));
          if (closed == def) return std::nullopt;
          std::string cmd = "cotcoord coord " + str(n) + " " + str(static_cast<long>(chi.index())) + " " + str(r);
          auto inputs = char_inputs(chi);
          inputs["r"] = r;
          return failure(char_key(chi) + " r=" + str(r), inputs, to_json(def), to_json(closed),
                         cmd + " --method def ; " + cmd + " --method eq42");
        }});
    }
  return run_cases("eq42", std::move(cases), config.threads);
}

SuiteResult suite_float(const SuiteConfig& config) {
  std::vector<Case> cases;
  const double tol = config.float_tolerance;
  for (long n = 2; n <= config.float_n_max; ++n) {
    // Phi_n(exp(2 pi i / n)) must vanish up to rounding.
    cases.push_back({"n=" + str(n) + " phi_n(zeta)", [n, tol] () -> std::optional<CaseFailure> {
      const auto& phi = cyclotomic_polynomial(n);
      std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / static_cast<double>(n));
      std::complex<double> acc = 0;
      double scale = 0;
      for (auto it = phi.rbegin(); it != phi.rend(); ++it) {
        acc = acc * z + it->get_d();
        scale += std::abs(it->get_d());
      }
      if (std::abs(acc) < tol * std::max(1.0, scale)) return std::nullopt;
      return failure("n=" + str(n) + " phi_n(zeta)", {{"n", n}}, json{{"re", 0.0}, {"im", 0.0}},
                     to_json(std::complex<long double>(acc)), "");
    }});
    for (const auto& chi : enumerate(n))
      for (long r = 1; r <= config.float_r_max; ++r)
        cases.push_back({char_key(chi) + " r=" + str(r), [chi, n, r, tol] () -> std::optional<CaseFailure> {
          auto direct = direct_sum_float(chi, r, n);
          CycElem y = coord_definitional(chi.conj(), icot_power(r, n));
          CycElem tau = gauss_sum(primitive_part(chi));
          auto [ye, te] = to_common_field(y, tau);
          auto via = complex_eval(mul(ye, te));
          long double diff = std::abs(direct - via);
          if (diff < tol) return std::nullopt;
          auto inputs = char_inputs(chi);
          inputs["r"] = r;
          inputs["difference"] = static_cast<double>(diff);
          inputs["tolerance"] = tol;
          return failure(char_key(chi) + " r=" + str(r), inputs, complex_json(direct), complex_json(via),
                         "cotcoord coord " + str(n) + " " + str(static_cast<long>(chi.index())) + " " + str(r) +
                             " --method def --float-check");
        }});
  }
  return run_cases("float", std::move(cases), config.threads);
}

SuiteResult suite_reconstruction(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (long n = 2; n <= config.recon_n_max; ++n) {
    // (label, CLI selector, element builder)
    struct Item {
      std::string label;
      std::string selector;
      std::function<CycElem()> make;
    };
    std::vector<Item> items;
    items.push_back({"one", "--one", [n] { return CycElem::one(n); }});
    for (long r = 1; r <= config.recon_r_max; ++r)
      items.push_back({"icot^" + str(r), str(r), [n, r] { return icot_power(r, n); }});
    for (long j = 1; j <= config.recon_r_max; ++j)
      items.push_back({"cotnum j=" + str(j), "--j " + str(j), [n, j] { return cotangent_number(j, n); }});
    for (auto& item : items) {
      std::string key = "n=" + str(n) + " " + item.label;
      cases.push_back({key, [n, key, item] () -> std::optional<CaseFailure> {
        CycElem a = item.make();
        auto coords = all_coordinates(a);
        CycElem back = reconstruct(coords, n);
        if (back == a) return std::nullopt;
        return failure(key, {{"n", n}, {"element", item.label}}, to_json(a), to_json(back),
                       "cotcoord coord " + str(n) + " 0 " + item.selector + " --method def --all-chars --reconstruct");
      }});
    }
  }
  return run_cases("reconstruction", std::move(cases), config.threads);
}

SuiteResult suite_gauss(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (long f = 1; f <= config.gauss_f_max; ++f) {
    auto group = CharacterGroup::of(f);
    for (std::size_t i = 0; i < group->size(); ++i) {
      auto chi = group->character(i);
      if (!is_primitive(chi)) continue;
      std::string key = "f=" + str(f) + " chi=" + str(static_cast<long>(i));
      cases.push_back({key, [chi, f, key] () -> std::optional<CaseFailure> {
        CycElem tau = gauss_sum(chi);
        CycElem tau_bar = gauss_sum(chi.conj());
        auto [a, b] = to_common_field(tau, tau_bar);
        CycElem norm = mul(a, b);
        int s = parity(chi);
        CycElem want = CycElem::rational(norm.order(), Rat(s * f));
        // conj(tau(chi)) = chi(-1) tau(conj chi)
        CycElem signed_bar = s == 1 ? b : neg(b);
        bool ok = norm == want && conjugate(a) == signed_bar;
        if (ok) return std::nullopt;
        auto inputs = char_inputs(chi);
        return failure(key, inputs, json{{"product", to_json(want)}, {"conjugate", to_json(signed_bar)}},
                       json{{"product", to_json(norm)}, {"conjugate", to_json(conjugate(a))}},
                       "cotcoord chars " + str(f) + " --gauss");
      }});
    }
  }
  return run_cases("gauss", std::move(cases), config.threads);
}

SuiteResult suite_parity(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (long n = 2; n <= config.n_max; ++n) {
    // Test elements: i^r cot^r and i^j cot_{j-1}, real for even exponent and
    // purely imaginary for odd.
    for (int kind = 0; kind < 2; ++kind)
      for (long e = 1; e <= 4; ++e) {
        std::string label = (kind == 0 ? "icot^" : "cotnum j=") + str(e);
        std::string key = "n=" + str(n) + " " + label;
        cases.push_back({key, [n, kind, e, key, label] () -> std::optional<CaseFailure> {
          CycElem a = kind == 0 ? icot_power(e, n) : cotangent_number(e, n);
          bool real = e % 2 == 0;
          CycElem mirrored = real ? a : neg(a);
          json inputs = {{"n", n}, {"element", label}, {"real", real}};
          std::string cmd = "cotcoord coord " + str(n) + " ";
          std::string tail = (kind == 0 ? " " + str(e) : " --j " + str(e)) + " --method def";
          if (conjugate(a) != mirrored)
            return failure(key, inputs, to_json(mirrored), to_json(conjugate(a)),
                           "cotcoord cot " + str(n) + (kind == 0 ? " --power " : " --j ") + str(e));
          for (const auto& chi : enumerate(n)) {
            if ((parity(chi) == 1) == real) continue;
            CycElem y = coord_definitional(chi, a);
            if (!y.is_zero()) {
              inputs["char_index"] = chi.index();
              return failure(key + " chi=" + str(static_cast<long>(chi.index())), inputs,
                             to_json(CycElem::zero(y.order())), to_json(y),
                             cmd + str(static_cast<long>(chi.index())) + tail);
            }
          }
          return std::nullopt;
        }});
      }
  }
  return run_cases("parity", std::move(cases), config.threads);
}

SuiteResult suite_prop1(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (long r = 1; r <= config.prop1_r_max; ++r) {
    std::string key = "prop1 r=" + str(r);
    cases.push_back({key, [r, key] () -> std::optional<CaseFailure> {
      if (verify_proposition_1(r, 2 * r + 4)) return std::nullopt;
      return failure(key, {{"r", r}, {"order", 2 * r + 4}}, true, false,
                     "cotcoord series verify --prop1 --rmax " + str(r));
    }});
  }
  for (long k = 1; k <= config.stirling_k_max; ++k) {
    std::string key = "stirling k=" + str(k);
    cases.push_back({key, [k, key] () -> std::optional<CaseFailure> {
      if (verify_stirling_identity(k, 2 * k + 4)) return std::nullopt;
      return failure(key, {{"k", k}, {"order", 2 * k + 4}}, true, false,
                     "cotcoord series verify --stirling --kmax " + str(k));
    }});
  }
  return run_cases("prop1", std::move(cases), config.threads);
}

SuiteResult suite_prop1_values(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (long n = 2; n <= config.n_max; ++n) {
    for (long r = 1; r <= config.prop1_values_r_max; ++r) {
      std::string key = "n=" + str(n) + " r=" + str(r);
      cases.push_back({key, [n, r, key] () -> std::optional<CaseFailure> {
        // i^r cot^r - sum_j c_{r,j} i^j cot_{j-1} = ((-1)^r + 1) / 2
        CycElem sum = CycElem::zero(n);
        for (long j = 1; j <= r; ++j) {
          Rat c = coeff_c(r, j);
          if (!is_zero(c)) sum = add(sum, mul(CycElem::rational(n, c), cotangent_number(j, n)));
        }
        CycElem rest = sub(icot_power(r, n), sum);
        CycElem want = CycElem::rational(n, Rat(r % 2 == 0 ? 1 : 0));
        if (rest == want) return std::nullopt;
        return failure(key, {{"n", n}, {"r", r}}, to_json(want), to_json(rest),
                       "cotcoord cot " + str(n) + " --power " + str(r) + " ; cotcoord coeffs c " + str(r));
      }});
    }
    std::string key = "n=" + str(n) + " galois";
    cases.push_back({key, [n, key] () -> std::optional<CaseFailure> {
      CycElem base = icot_value(n, 1);
      for (long k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        CycElem moved = galois(base, k);
        CycElem direct = icot_value(n, k);
        if (moved != direct)
          return failure(key + " k=" + str(k), {{"n", n}, {"k", k}}, to_json(direct), to_json(moved),
                         "cotcoord cot " + str(n) + " --power 1");
      }
      return std::nullopt;
    }});
  }
  return run_cases("prop1_values", std::move(cases), config.threads);
}

SuiteResult suite_d_oracle(const SuiteConfig& config) {
  std::vector<Case> cases;
  long r_top = std::max(config.bruteforce_r_max, config.series_d_r_max);
  for (long r = 1; r <= r_top; ++r)
    for (long j = 1; j <= r; ++j) {
      std::string key = "r=" + str(r) + " j=" + str(j);
      bool brute = r <= config.bruteforce_r_max;
      bool series = r <= config.series_d_r_max;
      cases.push_back({key, [r, j, key, brute, series] () -> std::optional<CaseFailure> {
        Rat d = coeff_d(r, j);
        json actual = json::object();
        bool ok = true;
        if (brute) {
          Rat b = coeff_d_bruteforce(r, j);
          actual["bruteforce"] = to_string(b);
          ok = ok && b == d;
        }
        if (series) {
          Rat s = coeff_d_from_series(r, j);
          actual["series"] = to_string(s);
          ok = ok && s == d;
        }
        if (ok) return std::nullopt;
        return failure(key, {{"r", r}, {"j", j}}, to_string(d), actual,
                       "cotcoord coeffs d " + str(r) + " ; cotcoord coeffs d " + str(r) + " --bruteforce ; cotcoord coeffs d " +
                           str(r) + " --series");
      }});
    }
  // Row sums of unsigned Stirling numbers count all permutations, and the
  // Bernoulli polynomials satisfy B_r(1) - B_r(0) = [r == 1].
  for (long k = 1; k <= config.bruteforce_r_max; ++k) {
    std::string key = "row k=" + str(k);
    cases.push_back({key, [k, key] () -> std::optional<CaseFailure> {
      Int total = 0;
      for (long j = 0; j <= k; ++j) total += stirling_first_unsigned(k, j);
      if (total != factorial(k))
        return failure(key, {{"k", k}}, factorial(k).get_str(), total.get_str(), "");
      auto poly = bernoulli_polynomial(k);
      Rat jump = poly(Rat(1)) - poly(Rat(0));
      if (jump != Rat(k == 1 ? 1 : 0))
        return failure(key + " bernoulli", {{"r", k}}, k == 1 ? "1" : "0", to_string(jump),
                       "cotcoord bernoulli " + str(k));
      return std::nullopt;
    }});
  }
  return run_cases("d_oracle", std::move(cases), config.threads);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theorem1", "eq28",  "theorem2", "eq42",        "float",       "reconstruction",
                                                 "gauss",    "parity", "prop1",   "prop1_values", "d_oracle"};
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteConfig& config) {
  if (name == "theorem1") return suite_theorem1(config);
  if (name == "eq28") return suite_eq28(config);
  if (name == "theorem2") return suite_theorem2(config);
  if (name == "eq42") return suite_eq42(config);
  if (name == "float") return suite_float(config);
  if (name == "reconstruction") return suite_reconstruction(config);
  if (name == "gauss") return suite_gauss(config);
  if (name == "parity") return suite_parity(config);
  if (name == "prop1") return suite_prop1(config);
  if (name == "prop1_values") return suite_prop1_values(config);
  if (name == "d_oracle") return suite_d_oracle(config);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::vector<SuiteResult> run_suites(const SuiteConfig& config) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names())
    if (config.suites.empty() || std::find(config.suites.begin(), config.suites.end(), name) != config.suites.end())
      out.push_back(run_suite(name, config));
  return out;
}

nlohmann::json to_json(const SuiteResult& result, bool include_timing) {
  json failures = json::array();
  for (const auto& f : result.failures)
    failures.push_back({{"case", f.key},
                        {"inputs", f.inputs},
                        {"expected", f.expected},
                        {"actual", f.actual},
                        {"repro", f.repro}});
  json out = {{"suite", result.name}, {"cases", result.cases}, {"passed", result.passed()}, {"failures", failures}};
  if (include_timing) out["wall_seconds"] = result.wall_seconds;
  return out;
}

}  // namespace cotcoord
