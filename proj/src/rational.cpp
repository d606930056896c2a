#include "jackstein/rational.hpp"

namespace jackstein {

void Rational::set_ll(long long n) {
  mpz_class z;
  if (n >= 0) {
    z = mpz_class(static_cast<unsigned long>(n));
  } else {
    // avoid overflow on LLONG_MIN
    z = mpz_class(static_cast<unsigned long>(-(n + 1)));
    z += 1;
    z = -z;
  }
  v_ = mpq_class(z);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.empty()) return std::nullopt;

  auto is_int = [&strip](std::string_view s) {
    s = strip(s);
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };

  auto slash = text.find('/');
  std::string num, den = "1";
  if (slash == std::string_view::npos) {
    if (!is_int(text)) return std::nullopt;
    num = std::string(strip(text));
  } else {
    auto nv = text.substr(0, slash);
    auto dv = text.substr(slash + 1);
    if (!is_int(nv) || !is_int(dv)) return std::nullopt;
    num = std::string(strip(nv));
    den = std::string(strip(dv));
  }
  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow(unsigned e) const {
  mpq_class r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()), e);
  return Rational(std::move(r));  // already canonical: gcd(n,d)=1 implies gcd(n^e,d^e)=1
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace jackstein
