#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

#include "orthostab/errors.hpp"

namespace orthostab {

using Rational = mpq_class;
using FloatScalar = std::complex<double>;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

// Element of the number field Q(i, sqrt(2)), stored as
//   a + b*sqrt(2) + (c + d*sqrt(2))*i
// with reduced rational coordinates. The representation is unique because
// {1, sqrt(2), i, i*sqrt(2)} is a Q-basis.
struct ExactScalar {
  Rational a, b, c, d;

  ExactScalar() : a(0), b(0), c(0), d(0) {}
  ExactScalar(long v) : a(v), b(0), c(0), d(0) {}  // NOLINT: implicit by design
  ExactScalar(const Rational& v) : a(v), b(0), c(0), d(0) {}
  ExactScalar(Rational av, Rational bv, Rational cv, Rational dv)
      : a(std::move(av)), b(std::move(bv)), c(std::move(cv)), d(std::move(dv)) {}

  static ExactScalar rational(long num, long den);
  static ExactScalar i();            // the imaginary unit
  static ExactScalar sqrt2();        // sqrt(2)
  static ExactScalar inv_sqrt2();    // 1/sqrt(2)

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_real() const { return c == 0 && d == 0; }
  bool is_rational() const { return b == 0 && c == 0 && d == 0; }

  ExactScalar conj() const { return {a, b, -c, -d}; }  // complex conjugate

  ExactScalar operator-() const { return {-a, -b, -c, -d}; }
  ExactScalar operator+(const ExactScalar& y) const { return {a + y.a, b + y.b, c + y.c, d + y.d}; }
  ExactScalar operator-(const ExactScalar& y) const { return {a - y.a, b - y.b, c - y.c, d - y.d}; }
  ExactScalar operator*(const ExactScalar& y) const;
  ExactScalar operator/(const ExactScalar& y) const;

  ExactScalar& operator+=(const ExactScalar& y) { *this = *this + y; return *this; }
  ExactScalar& operator-=(const ExactScalar& y) { *this = *this - y; return *this; }
  ExactScalar& operator*=(const ExactScalar& y) { *this = *this * y; return *this; }
  ExactScalar& operator/=(const ExactScalar& y) { *this = *this / y; return *this; }

  bool operator==(const ExactScalar& y) const { return a == y.a && b == y.b && c == y.c && d == y.d; }
  bool operator!=(const ExactScalar& y) const { return !(*this == y); }

  ExactScalar inv() const;
  FloatScalar to_float() const;
  std::string str() const;
};

// Raw-rational constructor with explicit denominators; the single place where
// a zero denominator is rejected instead of hitting GMP undefined behavior.
ExactScalar normalize_scalar(const mpz_class& an, const mpz_class& ad,
                             const mpz_class& bn, const mpz_class& bd,
                             const mpz_class& cn, const mpz_class& cd,
                             const mpz_class& dn, const mpz_class& dd);

inline double magnitude(const ExactScalar& x) { return std::abs(x.to_float()); }
inline double magnitude(const FloatScalar& x) { return std::abs(x); }

}  // namespace orthostab
