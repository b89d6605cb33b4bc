#include "orthostab/scalar.hpp"

#include <cctype>
#include <cmath>

namespace orthostab {

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorKind::InvalidScalar, "empty rational literal");
  std::size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) fail(ErrorKind::InvalidScalar, "bad rational literal '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorKind::InvalidScalar, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactScalar ExactScalar::rational(long num, long den) {
  if (den == 0) fail(ErrorKind::InvalidScalar, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return ExactScalar(q);
}

ExactScalar ExactScalar::i() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
ExactScalar ExactScalar::sqrt2() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
ExactScalar ExactScalar::inv_sqrt2() { return {Rational(0), Rational(1, 2), Rational(0), Rational(0)}; }

namespace {

// Arithmetic in the real subfield Q(sqrt(2)), elements (u, v) = u + v*sqrt(2).
struct Qs2 {
  Rational u, v;
};

Qs2 mul(const Qs2& x, const Qs2& y) { return {x.u * y.u + 2 * x.v * y.v, x.u * y.v + x.v * y.u}; }
Qs2 add(const Qs2& x, const Qs2& y) { return {x.u + y.u, x.v + y.v}; }
Qs2 sub(const Qs2& x, const Qs2& y) { return {x.u - y.u, x.v - y.v}; }

Qs2 inv_qs2(const Qs2& x) {
  // (u + v*sqrt2)^-1 = (u - v*sqrt2) / (u^2 - 2 v^2); the norm vanishes only at 0
  // because sqrt(2) is irrational.
  Rational n = x.u * x.u - 2 * x.v * x.v;
  if (n == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(sqrt2)");
  return {x.u / n, -x.v / n};
}

}  // namespace

ExactScalar ExactScalar::operator*(const ExactScalar& y) const {
  Qs2 re1{a, b}, im1{c, d}, re2{y.a, y.b}, im2{y.c, y.d};
  Qs2 re = sub(mul(re1, re2), mul(im1, im2));
  Qs2 im = add(mul(re1, im2), mul(im1, re2));
  return {re.u, re.v, im.u, im.v};
}

ExactScalar ExactScalar::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero scalar");
  // 1/(x + y i) = (x - y i) / (x^2 + y^2) with x, y in Q(sqrt2); the real
  // denominator x^2 + y^2 is nonzero since Q(sqrt2) is a subfield of R.
  Qs2 x{a, b}, y{c, d};
  Qs2 n = inv_qs2(add(mul(x, x), mul(y, y)));
  Qs2 re = mul(x, n);
  Qs2 im = mul(Qs2{-y.u, -y.v}, n);
  return {re.u, re.v, im.u, im.v};
}

ExactScalar ExactScalar::operator/(const ExactScalar& y) const {
  if (y.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero scalar");
  return *this * y.inv();
}

FloatScalar ExactScalar::to_float() const {
  const double s2 = std::sqrt(2.0);
  return {a.get_d() + b.get_d() * s2, c.get_d() + d.get_d() * s2};
}

std::string ExactScalar::str() const {
  std::string out = format_rational(a);
  if (b != 0) out += (sgn(b) < 0 ? "" : "+") + format_rational(b) + "*s2";
  if (c != 0) out += (sgn(c) < 0 ? "" : "+") + format_rational(c) + "*i";
  if (d != 0) out += (sgn(d) < 0 ? "" : "+") + format_rational(d) + "*i*s2";
  return out;
}

ExactScalar normalize_scalar(const mpz_class& an, const mpz_class& ad,
                             const mpz_class& bn, const mpz_class& bd,
                             const mpz_class& cn, const mpz_class& cd,
                             const mpz_class& dn, const mpz_class& dd) {
  if (ad == 0 || bd == 0 || cd == 0 || dd == 0)
    fail(ErrorKind::InvalidScalar, "zero denominator");
  auto mk = [](const mpz_class& n, const mpz_class& d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
  };
  return {mk(an, ad), mk(bn, bd), mk(cn, cd), mk(dn, dd)};
}

}  // namespace orthostab
