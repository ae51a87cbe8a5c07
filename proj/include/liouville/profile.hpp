#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace liouville {

// Point in parameter space; unused slots are ignored.
using Params = std::array<double, 2>;

enum class Smoothstep { quintic, septic };

const char* smoothstep_name(Smoothstep k);
Smoothstep smoothstep_from_name(const std::string& name);
// Ascending coefficients of the smoothstep polynomial on [0,1].
std::vector<double> smoothstep_poly(Smoothstep k);

// Real function of up to two parameters, built as an expression tree with a
// symbolic derivative.
class ProfileFn {
 public:
  struct Node;

  ProfileFn();  // zero
  static ProfileFn constant(double c);
  static ProfileFn var(int slot, double a = 1.0, double b = 0.0);  // a * p[slot] + b
  static ProfileFn exp(const ProfileFn& inner);
  static ProfileFn sin(const ProfileFn& inner);
  static ProfileFn cos(const ProfileFn& inner);
  // P(inner) on [0,1], P(0) below, P(1) above
  static ProfileFn clamped(std::vector<double> poly, const ProfileFn& inner);
  // P(inner) on [0,1], zero elsewhere
  static ProfileFn gate(std::vector<double> poly, const ProfileFn& inner);
  static ProfileFn smoothstep(Smoothstep k, const ProfileFn& inner);
  // left if p[slot] < at, right otherwise
  static ProfileFn piecewise(int slot, double at, const ProfileFn& left, const ProfileFn& right);

  double operator()(const Params& p) const;
  double operator()(double s) const { return (*this)(Params{s, 0.0}); }
  ProfileFn derivative(int slot = 0) const;

  bool is_constant() const;
  double constant_value() const;  // only meaningful when is_constant()
  std::string describe() const;

  friend ProfileFn operator+(const ProfileFn& a, const ProfileFn& b);
  friend ProfileFn operator-(const ProfileFn& a, const ProfileFn& b);
  friend ProfileFn operator*(const ProfileFn& a, const ProfileFn& b);
  friend ProfileFn operator*(double c, const ProfileFn& a);
  friend ProfileFn operator*(const ProfileFn& a, double c) { return c * a; }
  friend ProfileFn operator+(const ProfileFn& a, double c) { return a + constant(c); }
  friend ProfileFn operator+(double c, const ProfileFn& a) { return constant(c) + a; }
  friend ProfileFn operator-(double c, const ProfileFn& a) { return constant(c) - a; }
  ProfileFn operator-() const { return -1.0 * (*this); }

 private:
  explicit ProfileFn(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct DerivativeCheck {
  double max_rel_error = 0;
  Params worst{0, 0};
  int samples = 0;
};

// Central differences with step h against derivative(slot), on random points of the box.
DerivativeCheck check_derivative(const ProfileFn& f, int slot, const Params& lo, const Params& hi, int samples = 64,
                                 double h = 1e-5, unsigned seed = 0);
// Throws NumericalError when any slot in [0, arity) exceeds 1e-6.
void require_derivatives(const ProfileFn& f, int arity, const Params& lo, const Params& hi);

// s + 2 pi k S((s - eps/3) / (eps/3)): slope 1 outside [eps/3, 2eps/3], gains 2 pi k across it.
ProfileFn phi_k(int k, Smoothstep kind, double eps = 1.0);
// 1 exactly on [eps/3, 2eps/3], 0 outside [eps/12, 11eps/12].
ProfileFn lutz_psi(Smoothstep kind, double eps = 1.0);

}  // namespace liouville
