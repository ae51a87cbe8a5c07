#include "liouville/polynomial.hpp"

#include <algorithm>

namespace liouville {

RationalPoly::RationalPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

RationalPoly RationalPoly::monomial(const Rational& c, int deg) {
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double RationalPoly::eval(double x) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return r;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return RationalPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const Rational& s, const RationalPoly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= s;
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RationalPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[k] / b.leading();
    q[k - db] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
  }
  r.resize(db);
  return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p;
  RationalPoly g = poly_gcd(p, p.derivative());
  auto q = divmod(p, g).first;
  return (Rational(1) / q.leading()) * q;
}

RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InputError("interpolation needs matching nonempty nodes");
  size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      if (xs[i] == xs[i - level]) throw InputError("repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  RationalPoly out({dd[n - 1]});
  for (size_t k = n - 1; k-- > 0;) out = out * RationalPoly({-xs[k], Rational(1)}) + RationalPoly({dd[k]});
  return out;
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
  std::vector<RationalPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  RationalPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {
int count_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}
}  // namespace

int sign_variations(const std::vector<RationalPoly>& chain, const Rational& x) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(sgn(p.eval(x)));
  return count_changes(s);
}

int sign_variations_at_infinity(const std::vector<RationalPoly>& chain, int side) {
  std::vector<int> s;
  for (const auto& p : chain) {
    int lead = sgn(p.leading());
    if (side < 0 && (p.degree() % 2 == 1)) lead = -lead;
    s.push_back(lead);
  }
  return count_changes(s);
}

int count_roots(const std::vector<RationalPoly>& chain, const Rational& a, const Rational& b) {
  if (chain.empty()) throw InputError("root count of the zero polynomial");
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const RationalPoly& p, const Rational& a,
                                                         const Rational& b) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  auto chain = sturm_chain(squarefree_part(p));
  std::vector<std::pair<Rational, Rational>> stack{{a, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int k = count_roots(chain, lo, hi);
    if (k == 0) continue;
    if (k == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

Rational root_bound(const RationalPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace liouville
