#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liouville/scalar.hpp"

namespace liouville {

// Univariate polynomial over Q, ascending coefficients, no trailing zeros.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> c);
  static RationalPoly monomial(const Rational& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  RationalPoly derivative() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a);
  RationalPoly operator-() const;
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);  // monic, or zero
RationalPoly squarefree_part(const RationalPoly& p);

// Newton divided differences through (xs[i], ys[i]).
RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Standard Sturm chain p, p', -rem(...), ...
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);
int sign_variations(const std::vector<RationalPoly>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<RationalPoly>& chain, int side);  // side = +1 or -1

// Number of distinct roots in (a, b].
int count_roots(const std::vector<RationalPoly>& chain, const Rational& a, const Rational& b);

// Disjoint intervals (lo, hi] in (a, b], each holding exactly one distinct root of p.
std::vector<std::pair<Rational, Rational>> isolate_roots(const RationalPoly& p, const Rational& a,
                                                         const Rational& b);

// Cauchy bound: every real root lies in (-bound, bound).
Rational root_bound(const RationalPoly& p);

}  // namespace liouville
