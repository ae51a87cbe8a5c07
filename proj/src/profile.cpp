#include "liouville/profile.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "liouville/scalar.hpp"

namespace liouville {

enum class Op { constant, var, exp, sin, cos, clamped, gate, add, mul, piecewise };

struct ProfileFn::Node {
  Op op = Op::constant;
  double a = 0, b = 0;  // constant: a; var: a * p + b; piecewise: b = breakpoint
  int slot = 0;
  std::vector<double> poly;
  std::shared_ptr<const Node> x, y;
};

namespace {

using NodePtr = std::shared_ptr<const ProfileFn::Node>;

double horner(const std::vector<double>& c, double x) {
  double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  return d;
}

double eval(const ProfileFn::Node& n, const Params& p) {
  switch (n.op) {
    case Op::constant: return n.a;
    case Op::var: return n.a * p[n.slot] + n.b;
    case Op::exp: return std::exp(eval(*n.x, p));
    case Op::sin: return std::sin(eval(*n.x, p));
    case Op::cos: return std::cos(eval(*n.x, p));
    case Op::clamped: {
      double t = eval(*n.x, p);
      return horner(n.poly, std::clamp(t, 0.0, 1.0));
    }
    case Op::gate: {
      double t = eval(*n.x, p);
      return (t < 0 || t > 1) ? 0.0 : horner(n.poly, t);
    }
    case Op::add: return eval(*n.x, p) + eval(*n.y, p);
    case Op::mul: return eval(*n.x, p) * eval(*n.y, p);
    case Op::piecewise: return p[n.slot] < n.b ? eval(*n.x, p) : eval(*n.y, p);
  }
  return 0;
}

std::string show(const ProfileFn::Node& n) {
  std::ostringstream o;
  switch (n.op) {
    case Op::constant: o << n.a; break;
    case Op::var: o << n.a << "*p" << n.slot << "+" << n.b; break;
    case Op::exp: o << "exp(" << show(*n.x) << ")"; break;
    case Op::sin: o << "sin(" << show(*n.x) << ")"; break;
    case Op::cos: o << "cos(" << show(*n.x) << ")"; break;
    case Op::clamped: o << "clamp-poly" << n.poly.size() - 1 << "(" << show(*n.x) << ")"; break;
    case Op::gate: o << "gate-poly" << (n.poly.empty() ? 0 : n.poly.size() - 1) << "(" << show(*n.x) << ")"; break;
    case Op::add: o << "(" << show(*n.x) << " + " << show(*n.y) << ")"; break;
    case Op::mul: o << show(*n.x) << "*" << show(*n.y); break;
    case Op::piecewise: o << "[p" << n.slot << "<" << n.b << " ? " << show(*n.x) << " : " << show(*n.y) << "]"; break;
  }
  return o.str();
}

}  // namespace

ProfileFn::ProfileFn() : ProfileFn(constant(0.0)) {}

ProfileFn ProfileFn::constant(double c) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->a = c;
  return ProfileFn(n);
}

ProfileFn ProfileFn::var(int slot, double a, double b) {
  if (slot < 0 || slot > 1) throw InputError("profile parameter slot must be 0 or 1");
  if (a == 0.0) return constant(b);
  auto n = std::make_shared<Node>();
  n->op = Op::var;
  n->slot = slot;
  n->a = a;
  n->b = b;
  return ProfileFn(n);
}

namespace {
ProfileFn::Node unary(Op op, const NodePtr& x) {
  ProfileFn::Node n;
  n.op = op;
  n.x = x;
  return n;
}
}  // namespace

ProfileFn ProfileFn::exp(const ProfileFn& inner) {
  if (inner.is_constant()) return constant(std::exp(inner.constant_value()));
  return ProfileFn(std::make_shared<Node>(unary(Op::exp, inner.node_)));
}

ProfileFn ProfileFn::sin(const ProfileFn& inner) {
  if (inner.is_constant()) return constant(std::sin(inner.constant_value()));
  return ProfileFn(std::make_shared<Node>(unary(Op::sin, inner.node_)));
}

ProfileFn ProfileFn::cos(const ProfileFn& inner) {
  if (inner.is_constant()) return constant(std::cos(inner.constant_value()));
  return ProfileFn(std::make_shared<Node>(unary(Op::cos, inner.node_)));
}

ProfileFn ProfileFn::clamped(std::vector<double> poly, const ProfileFn& inner) {
  if (poly.empty()) return constant(0.0);
  auto n = std::make_shared<Node>(unary(Op::clamped, inner.node_));
  n->poly = std::move(poly);
  return ProfileFn(n);
}

ProfileFn ProfileFn::gate(std::vector<double> poly, const ProfileFn& inner) {
  bool zero = true;
  for (double c : poly) zero = zero && c == 0.0;
  if (zero) return constant(0.0);
  auto n = std::make_shared<Node>(unary(Op::gate, inner.node_));
  n->poly = std::move(poly);
  return ProfileFn(n);
}

ProfileFn ProfileFn::smoothstep(Smoothstep k, const ProfileFn& inner) { return clamped(smoothstep_poly(k), inner); }

ProfileFn ProfileFn::piecewise(int slot, double at, const ProfileFn& left, const ProfileFn& right) {
  if (slot < 0 || slot > 1) throw InputError("profile parameter slot must be 0 or 1");
  auto n = std::make_shared<Node>();
  n->op = Op::piecewise;
  n->slot = slot;
  n->b = at;
  n->x = left.node_;
  n->y = right.node_;
  return ProfileFn(n);
}

double ProfileFn::operator()(const Params& p) const { return eval(*node_, p); }

bool ProfileFn::is_constant() const { return node_->op == Op::constant; }
double ProfileFn::constant_value() const { return node_->a; }
std::string ProfileFn::describe() const { return show(*node_); }

ProfileFn operator+(const ProfileFn& a, const ProfileFn& b) {
  if (a.is_constant() && b.is_constant()) return ProfileFn::constant(a.constant_value() + b.constant_value());
  if (a.is_constant() && a.constant_value() == 0.0) return b;
  if (b.is_constant() && b.constant_value() == 0.0) return a;
  auto n = std::make_shared<ProfileFn::Node>();
  n->op = Op::add;
  n->x = a.node_;
  n->y = b.node_;
  return ProfileFn(n);
}

ProfileFn operator-(const ProfileFn& a, const ProfileFn& b) { return a + (-1.0) * b; }

ProfileFn operator*(const ProfileFn& a, const ProfileFn& b) {
  if (a.is_constant()) return a.constant_value() * b;
  if (b.is_constant()) return b.constant_value() * a;
  auto n = std::make_shared<ProfileFn::Node>();
  n->op = Op::mul;
  n->x = a.node_;
  n->y = b.node_;
  return ProfileFn(n);
}

ProfileFn operator*(double c, const ProfileFn& a) {
  if (c == 0.0) return ProfileFn::constant(0.0);
  if (c == 1.0) return a;
  if (a.is_constant()) return ProfileFn::constant(c * a.constant_value());
  if (a.node_->op == Op::var) return ProfileFn::var(a.node_->slot, c * a.node_->a, c * a.node_->b);
  auto n = std::make_shared<ProfileFn::Node>();
  n->op = Op::mul;
  n->x = ProfileFn::constant(c).node_;
  n->y = a.node_;
  return ProfileFn(n);
}

ProfileFn ProfileFn::derivative(int slot) const {
  const Node& n = *node_;
  auto wrap = [](const NodePtr& p) { return ProfileFn(p); };
  switch (n.op) {
    case Op::constant: return constant(0.0);
    case Op::var: return constant(n.slot == slot ? n.a : 0.0);
    case Op::exp: return (*this) * wrap(n.x).derivative(slot);
    case Op::sin: return cos(wrap(n.x)) * wrap(n.x).derivative(slot);
    case Op::cos: return -1.0 * (sin(wrap(n.x)) * wrap(n.x).derivative(slot));
    case Op::clamped:
    case Op::gate: return gate(poly_derivative(n.poly), wrap(n.x)) * wrap(n.x).derivative(slot);
    case Op::add: return wrap(n.x).derivative(slot) + wrap(n.y).derivative(slot);
    case Op::mul:
      return wrap(n.x).derivative(slot) * wrap(n.y) + wrap(n.x) * wrap(n.y).derivative(slot);
    case Op::piecewise:
      return piecewise(n.slot, n.b, wrap(n.x).derivative(slot), wrap(n.y).derivative(slot));
  }
  return constant(0.0);
}

const char* smoothstep_name(Smoothstep k) { return k == Smoothstep::quintic ? "quintic" : "septic"; }

Smoothstep smoothstep_from_name(const std::string& name) {
  if (name == "quintic") return Smoothstep::quintic;
  if (name == "septic") return Smoothstep::septic;
  throw InputError("unknown smoothstep: " + name);
}

std::vector<double> smoothstep_poly(Smoothstep k) {
  if (k == Smoothstep::quintic) return {0, 0, 0, 10, -15, 6};
  return {0, 0, 0, 0, 35, -84, 70, -20};
}

DerivativeCheck check_derivative(const ProfileFn& f, int slot, const Params& lo, const Params& hi, int samples,
                                 double h, unsigned seed) {
  std::mt19937_64 rng(seed);
  ProfileFn df = f.derivative(slot);
  DerivativeCheck out;
  out.samples = samples;
  for (int i = 0; i < samples; ++i) {
    Params p{};
    for (int j = 0; j < 2; ++j) p[j] = std::uniform_real_distribution<double>(lo[j], hi[j])(rng);
    Params pp = p, pm = p;
    pp[slot] += h;
    pm[slot] -= h;
    double fd = (f(pp) - f(pm)) / (2 * h);
    double an = df(p);
    double err = std::abs(fd - an) / std::max(1.0, std::abs(an));
    if (err > out.max_rel_error) {
      out.max_rel_error = err;
      out.worst = p;
    }
  }
  return out;
}

void require_derivatives(const ProfileFn& f, int arity, const Params& lo, const Params& hi) {
  for (int slot = 0; slot < arity; ++slot) {
    auto c = check_derivative(f, slot, lo, hi);
    if (c.max_rel_error > 1e-6)
      throw NumericalError("profile derivative check failed for " + f.describe() + " (rel error " +
                           std::to_string(c.max_rel_error) + ")");
  }
}

ProfileFn phi_k(int k, Smoothstep kind, double eps) {
  ProfileFn s = ProfileFn::var(0);
  double w = eps / 3;
  return s + (2 * std::numbers::pi * k) * ProfileFn::smoothstep(kind, ProfileFn::var(0, 1 / w, -1.0));
}

ProfileFn lutz_psi(Smoothstep kind, double eps) {
  double w = eps / 4;
  auto up = ProfileFn::smoothstep(kind, ProfileFn::var(0, 1 / w, -(eps / 12) / w));
  auto down = ProfileFn::smoothstep(kind, ProfileFn::var(0, -1 / w, (11 * eps / 12) / w));
  return up * down;
}

}  // namespace liouville
