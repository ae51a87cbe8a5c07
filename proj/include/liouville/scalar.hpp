#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace liouville {

using Rational = mpq_class;
using Integer = mpz_class;

// Bad input or violated precondition. The CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure could not reach its own verification gate.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class S>
struct Scalar;

template <>
struct Scalar<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact-rational";
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static int sign(const Rational& x) { return sgn(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_int(long v) { return Rational(v); }
};

template <>
struct Scalar<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float64";
  // storage test only: arithmetic zeros are dropped, small values are kept
  static bool is_zero(double x) { return x == 0.0; }
  static int sign(double x, double tol = 0.0) {
    if (x > tol) return 1;
    if (x < -tol) return -1;
    return 0;
  }
  static double to_double(double x) { return x; }
  static double from_int(long v) { return static_cast<double>(v); }
};

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw InputError("not a rational: " + text);
  q.canonicalize();
  return q;
}

inline Rational factorial_q(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline double factorial_d(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace liouville
