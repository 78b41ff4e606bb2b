#include "cotcoord/rational.hpp"

#include <stdexcept>

namespace cotcoord {

std::string to_string(const Rat& q) { return q.get_str(10); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("malformed rational: \"" + s + "\""); };
  if (s.empty()) throw bad();

  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);

  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);

  Int p(num, 10);
  Int q(den, 10);
  if (q == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Rat frac(const Int& p, const Int& q) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero to a negative power");
    Rat inv(base.get_den(), base.get_num());
    inv.canonicalize();
    return pow(inv, -exponent);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rat out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace cotcoord
