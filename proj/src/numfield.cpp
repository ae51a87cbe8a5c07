#include "liouville/numfield.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>

#include "liouville/formfam.hpp"
#include "liouville/polynomial.hpp"

namespace liouville {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2 * std::numbers::pi;

RationalPoly to_rational_poly(const Poly& f) {
  std::vector<Rational> c;
  for (long x : f.c) c.emplace_back(x);
  return RationalPoly(c);
}

// f(x) == 0 for an integer x; roots lie below the Cauchy bound, so overflow means nonzero
bool is_int_root(const std::vector<long>& c, long x) {
  __int128 v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    v = v * x + c[i];
    if (v > (__int128(1) << 100) || v < -(__int128(1) << 100)) return false;
  }
  return v == 0;
}

bool has_rational_root(const std::vector<long>& c) {
  long c0 = c[0];
  if (c0 == 0) return true;
  long a = std::labs(c0);
  for (long d = 1; d * d <= a; ++d) {
    if (a % d) continue;
    for (long q : {d, a / d})
      for (long x : {q, -q})
        if (is_int_root(c, x)) return true;
  }
  return false;
}

// monic quartic = (X^2 + aX + b)(X^2 + cX + d) over Z
bool splits_into_quadratics(const std::vector<long>& f) {
  long f0 = f[0], f1 = f[1], f2 = f[2], f3 = f[3];
  long m = std::labs(f0);
  for (long b0 = 1; b0 <= m; ++b0) {
    if (m % b0) continue;
    for (long b : {b0, -b0}) {
      long d = f0 / b;
      auto check = [&](long a) {
        long c = f3 - a;
        return b + d + a * c == f2 && a * d + b * c == f1;
      };
      if (d != b) {
        long num = f1 - b * f3, den = d - b;
        if (num % den == 0 && check(num / den)) return true;
      } else if (f1 == b * f3) {
        // a^2 - f3 a + (f2 - 2b) = 0
        long disc = f3 * f3 - 4 * (f2 - 2 * b);
        if (disc < 0) continue;
        long s = std::lround(std::sqrt(static_cast<double>(disc)));
        for (long t = std::max(0L, s - 2); t <= s + 2; ++t)
          if (t * t == disc && (f3 + t) % 2 == 0 && check((f3 + t) / 2)) return true;
      }
    }
  }
  return false;
}

cplx eval_c(const std::vector<long>& c, cplx z) {
  cplx v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * z + static_cast<double>(c[i]);
  return v;
}

cplx eval_dc(const std::vector<long>& c, cplx z) {
  cplx v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i) v = v * z + static_cast<double>(i * c[i]);
  return v;
}

OrderElement times_x(const NumberField& k, const OrderElement& v) {
  int n = k.degree();
  OrderElement w(n, Integer(0));
  for (int i = 0; i + 1 < n; ++i) w[i + 1] = v[i];
  for (int i = 0; i < n; ++i) w[i] -= v[n - 1] * k.f.c[i];
  return w;
}

void require_element(const NumberField& k, const OrderElement& x) {
  if (static_cast<int>(x.size()) != k.degree()) throw InputError("element has the wrong number of coordinates");
}

bool is_one(const OrderElement& x) {
  if (x.empty() || x[0] != 1) return false;
  for (size_t i = 1; i < x.size(); ++i)
    if (x[i] != 0) return false;
  return true;
}

OrderElement negate(OrderElement x) {
  for (auto& v : x) v = -v;
  return x;
}

double log_length(const std::vector<cplx>& l) {
  double s = 0;
  for (const auto& z : l) s += z.real() * z.real();
  return std::sqrt(s);
}

// Smallest m <= 12 with u^m = 1, or 0.
int exact_order(const NumberField& k, const OrderElement& u) {
  OrderElement p = u;
  for (int m = 1; m <= 12; ++m) {
    if (is_one(p)) return m;
    p = multiply(k, p, u);
  }
  return 0;
}

}  // namespace

NumberField field_from_poly(const std::vector<long>& coeffs) {
  if (coeffs.size() < 2 || coeffs.size() > 5) throw InputError("polynomial degree must be between 1 and 4");
  if (coeffs.back() != 1) throw InputError("polynomial must be monic");
  NumberField k;
  k.f.c = coeffs;
  int n = k.degree();
  RationalPoly fq = to_rational_poly(k.f);
  if (n >= 2) {
    if (poly_gcd(fq, fq.derivative()).degree() > 0) throw InputError("polynomial is not squarefree");
    if (has_rational_root(coeffs)) throw InputError("polynomial has a rational root, so it is reducible");
    if (n == 4 && splits_into_quadratics(coeffs)) throw InputError("polynomial factors into two quadratics");
  }
  // roots: companion matrix, then Newton
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -static_cast<double>(coeffs[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  for (auto& z : roots)
    for (int it = 0; it < 10; ++it) {
      cplx d = eval_dc(coeffs, z);
      if (std::abs(d) == 0) break;
      z -= eval_c(coeffs, z) / d;
    }
  for (const auto& z : roots)
    if (std::abs(eval_c(coeffs, z)) > 1e-12 * std::pow(1 + std::abs(z), n))
      throw NumericalError("root refinement did not converge");
  // number of real roots from a Sturm count
  auto chain = sturm_chain(fq);
  Rational B = root_bound(fq);
  k.r = count_roots(chain, -B, B);
  k.s = (n - k.r) / 2;
  std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) { return std::abs(a.imag()) < std::abs(b.imag()); });
  for (int i = 0; i < k.r; ++i) k.real_roots.push_back(roots[i].real());
  for (int i = k.r; i < n; ++i)
    if (roots[i].imag() > 0) k.complex_roots.push_back(roots[i]);
  if (static_cast<int>(k.complex_roots.size()) != k.s) throw NumericalError("complex roots do not pair up");
  std::sort(k.real_roots.begin(), k.real_roots.end(), std::greater<>());
  std::sort(k.complex_roots.begin(), k.complex_roots.end(),
            [](const cplx& a, const cplx& b) { return a.real() > b.real(); });
  return k;
}

OrderElement order_one(const NumberField& k) {
  OrderElement e(k.degree(), Integer(0));
  e[0] = 1;
  return e;
}

OrderElement multiply(const NumberField& k, const OrderElement& x, const OrderElement& y) {
  require_element(k, x);
  require_element(k, y);
  int n = k.degree();
  OrderElement out(n, Integer(0)), xp = x;
  for (int j = 0; j < n; ++j) {
    if (j) xp = times_x(k, xp);
    if (y[j] == 0) continue;
    for (int i = 0; i < n; ++i) out[i] += y[j] * xp[i];
  }
  return out;
}

OrderElement power(const NumberField& k, const OrderElement& x, int e) {
  if (e < 0) return power(k, unit_inverse(k, x), -e);
  OrderElement out = order_one(k), b = x;
  for (; e; e >>= 1) {
    if (e & 1) out = multiply(k, out, b);
    b = multiply(k, b, b);
  }
  return out;
}

IntMatrix multiplication_matrix(const NumberField& k, const OrderElement& x) {
  require_element(k, x);
  int n = k.degree();
  IntMatrix M(n, std::vector<Integer>(n));
  OrderElement col = x;
  for (int j = 0; j < n; ++j) {
    if (j) col = times_x(k, col);
    for (int i = 0; i < n; ++i) M[i][j] = col[i];
  }
  return M;
}

Integer int_determinant(const IntMatrix& M0) {
  IntMatrix M = M0;
  int n = static_cast<int>(M.size());
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      int p = k + 1;
      while (p < n && M[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

Integer norm(const NumberField& k, const OrderElement& x) { return int_determinant(multiplication_matrix(k, x)); }

OrderElement unit_inverse(const NumberField& k, const OrderElement& u) {
  Integer N = norm(k, u);
  if (N != 1 && N != -1) throw InputError("element is not a unit");
  // solve M z = e_0 exactly
  IntMatrix M = multiplication_matrix(k, u);
  int n = k.degree();
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = M[i][j];
    A[i][n] = i == 0 ? 1 : 0;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (A[p][c] == 0) ++p;
    std::swap(A[c], A[p]);
    for (int i = 0; i < n; ++i) {
      if (i == c || A[i][c] == 0) continue;
      Rational f = A[i][c] / A[c][c];
      for (int j = c; j <= n; ++j) A[i][j] -= f * A[c][j];
    }
  }
  OrderElement z(n);
  for (int i = 0; i < n; ++i) {
    Rational v = A[i][n] / A[i][i];
    if (v.get_den() != 1) throw NumericalError("unit inverse is not integral");
    z[i] = v.get_num();
  }
  return z;
}

std::vector<cplx> embed(const NumberField& k, const OrderElement& x) {
  require_element(k, x);
  std::vector<cplx> out;
  auto at = [&](cplx z) {
    cplx v = 0;
    for (int i = k.degree() - 1; i >= 0; --i) v = v * z + x[i].get_d();
    return v;
  };
  for (double r : k.real_roots) out.push_back(at(r));
  for (const auto& z : k.complex_roots) out.push_back(at(z));
  return out;
}

double float_norm(const NumberField& k, const OrderElement& x) {
  auto e = embed(k, x);
  double N = 1;
  for (int i = 0; i < k.r; ++i) N *= e[i].real();
  for (int j = 0; j < k.s; ++j) N *= std::norm(e[k.r + j]);
  return N;
}

std::vector<cplx> log_embedding(const NumberField& k, const OrderElement& x) {
  auto e = embed(k, x);
  std::vector<cplx> out;
  for (int i = 0; i < k.r; ++i) out.emplace_back(std::log(std::abs(e[i].real())), 0.0);
  for (int j = 0; j < k.s; ++j) out.push_back(std::log(e[k.r + j]));
  return out;
}

long default_box_bound(int n, long limit) {
  long B = 0;
  while (std::pow(2.0 * (B + 1) + 1, n) <= static_cast<double>(limit)) ++B;
  return B;
}

UnitGroup find_units(const NumberField& k, long box_bound) {
  int n = k.degree();
  if (box_bound < 1) throw InputError("box_bound must be positive");
  long side = 2 * box_bound + 1;
  double total = std::pow(static_cast<double>(side), n);
  if (total > 1e6) throw InputError("box holds more than 10^6 candidates");
  UnitGroup g;
  g.box_bound = box_bound;
  g.candidates = static_cast<long>(total);
  long per_slice = g.candidates / side;
  std::vector<std::vector<OrderElement>> found(side);
  // slices by the leading coordinate, merged in order
  parallel_for(static_cast<int>(side), [&](int slice) {
    std::vector<long> x(n);
    for (long idx = 0; idx < per_slice; ++idx) {
      long rest = idx;
      for (int i = 0; i + 1 < n; ++i) {
        x[i] = rest % side - box_bound;
        rest /= side;
      }
      x[n - 1] = slice - box_bound;
      OrderElement e(n);
      for (int i = 0; i < n; ++i) e[i] = x[i];
      double N = float_norm(k, e);
      if (std::abs(std::abs(N) - 1) > 0.5) continue;
      Integer Ne = norm(k, e);
      if (Ne == 1 || Ne == -1) found[slice].push_back(std::move(e));
    }
  });
  std::vector<OrderElement> units;
  for (auto& f : found)
    for (auto& u : f) units.push_back(std::move(u));

  std::vector<std::pair<double, OrderElement>> nontorsion;
  for (auto& u : units) {
    double len = log_length(log_embedding(k, u));
    if (len <= 1e-9) {
      if (exact_order(k, u) == 0) throw NumericalError("small log vector without finite order");
      g.torsion.push_back(u);
    } else {
      nontorsion.emplace_back(len, u);
    }
  }
  // torsion generator: largest order, then smallest positive argument at the first complex place
  g.torsion_generator = order_one(k);
  double best_arg = 0;
  for (const auto& u : g.torsion) {
    int m = exact_order(k, u);
    double arg = k.s ? std::arg(embed(k, u)[k.r]) : 0;
    if (arg <= 0) arg += kTwoPi;
    if (m > g.torsion_order || (m == g.torsion_order && m > 1 && arg < best_arg)) {
      g.torsion_order = m;
      g.torsion_generator = u;
      best_arg = arg;
    }
  }
  if (static_cast<int>(g.torsion.size()) != g.torsion_order)
    throw NumericalError("roots of unity do not form a cyclic group");
  std::stable_sort(nontorsion.begin(), nontorsion.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  int want = k.r + k.s - 1;
  std::vector<Eigen::VectorXd> basis;  // orthonormalized real log vectors
  for (auto& [len, u] : nontorsion) {
    if (static_cast<int>(g.free.size()) == want) break;
    auto l = log_embedding(k, u);
    Eigen::VectorXd v(k.r + k.s);
    for (int i = 0; i < k.r + k.s; ++i) v(i) = l[i].real();
    Eigen::VectorXd res = v;
    for (const auto& b : basis) res -= b.dot(res) * b;
    if (res.norm() <= 1e-8 * v.norm()) continue;
    basis.push_back(res.normalized());
    // canonical representative: first nonzero log coordinate positive, then rho_1 > 0
    OrderElement c = u;
    for (int i = 0; i < v.size(); ++i)
      if (std::abs(v(i)) > 1e-9) {
        if (v(i) < 0) c = unit_inverse(k, c);
        break;
      }
    if (k.r > 0 && embed(k, c)[0].real() < 0) c = negate(c);
    g.free.push_back(c);
  }
  g.rank = static_cast<int>(g.free.size());
  if (g.rank < want)
    throw NumericalError("found unit rank " + std::to_string(g.rank) + " below the Dirichlet rank " +
                         std::to_string(want) + "; increase box_bound");
  return g;
}

bool is_positive(const NumberField& k, const OrderElement& u) {
  auto e = embed(k, u);
  for (int i = 0; i < k.r; ++i)
    if (e[i].real() <= 0) return false;
  return true;
}

PositiveUnits positive_units(const UnitGroup& g, const NumberField& k) {
  PositiveUnits p;
  for (const auto& u : g.torsion)
    if (is_positive(k, u)) p.torsion.push_back(u);
  p.torsion_generator = order_one(k);
  for (const auto& u : p.torsion) {
    int m = exact_order(k, u);
    if (m > p.torsion_order) {
      p.torsion_order = m;
      p.torsion_generator = u;
    }
  }
  // the torsion generator of the whole group stays preferred when it is positive
  if (is_positive(k, g.torsion_generator) && g.torsion_order == p.torsion_order) p.torsion_generator = g.torsion_generator;
  for (const auto& u : g.free) {
    if (is_positive(k, u)) {
      p.free.push_back(u);
      p.squared.push_back(false);
    } else {
      OrderElement sq = multiply(k, u, u);
      if (!is_positive(k, sq)) throw NumericalError("square of a unit is not positive");
      p.free.push_back(sq);
      p.squared.push_back(true);
    }
  }
  return p;
}

OrderElement pell_positive_unit(long d) {
  if (d < 2) throw InputError("pell needs d >= 2");
  long a0 = static_cast<long>(std::floor(std::sqrt(static_cast<double>(d))));
  while (a0 * a0 > d) --a0;
  while ((a0 + 1) * (a0 + 1) <= d) ++a0;
  if (a0 * a0 == d) throw InputError("pell needs a non-square d");
  // continued fraction of sqrt d with convergents p/q
  long m = 0, den = 1, a = a0;
  Integer p_prev = 1, p = a0, q_prev = 0, q = 1;
  for (int it = 0; it < 100000; ++it) {
    Integer N = p * p - Integer(d) * q * q;
    if (N == 1 || N == -1) {
      OrderElement u{p, q};
      if (N == -1) u = OrderElement{p * p + Integer(d) * q * q, 2 * p * q};
      return u;
    }
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    Integer pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  throw NumericalError("continued fraction did not reach a Pell solution");
}

std::vector<double> flatten(const GammaVector& g) {
  std::vector<double> out(g.t);
  for (const auto& w : g.w) {
    out.push_back(w.real());
    out.push_back(w.imag());
  }
  return out;
}

IntMatrix monodromy_matrix(const NumberField& k, const OrderElement& u) {
  IntMatrix M = multiplication_matrix(k, u);
  if (int_determinant(M) != 1) throw NumericalError("monodromy matrix does not have determinant 1");
  return M;
}

double monodromy_diagonalization_residual(const NumberField& k, const OrderElement& u) {
  int n = k.degree();
  Eigen::MatrixXd V(n, n), M(n, n), D = Eigen::MatrixXd::Zero(n, n);
  IntMatrix Mi = multiplication_matrix(k, u);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = Mi[i][j].get_d();
  auto e = embed(k, u);
  for (int i = 0; i < k.r; ++i) {
    for (int j = 0; j < n; ++j) V(i, j) = std::pow(k.real_roots[i], j);
    D(i, i) = e[i].real();
  }
  for (int s = 0; s < k.s; ++s) {
    int row = k.r + 2 * s;
    for (int j = 0; j < n; ++j) {
      cplx z = std::pow(k.complex_roots[s], j);
      V(row, j) = z.real();
      V(row + 1, j) = z.imag();
    }
    cplx a = e[k.r + s];
    D(row, row) = a.real();
    D(row, row + 1) = -a.imag();
    D(row + 1, row) = a.imag();
    D(row + 1, row + 1) = a.real();
  }
  Eigen::MatrixXd R = V * M * V.inverse() - D;
  return R.cwiseAbs().maxCoeff() / std::max(1.0, D.cwiseAbs().maxCoeff());
}

LatticeData gamma_lattice(const NumberField& k, const PositiveUnits& pu) {
  int n = k.degree();
  if (static_cast<int>(pu.free.size()) != k.r + k.s - 1) throw InputError("positive units do not have the Dirichlet rank");
  LatticeData L;
  for (const auto& u : pu.free) {
    GammaVector g;
    auto l = log_embedding(k, u);
    for (int i = 0; i < k.r; ++i) g.t.push_back(l[i].real());
    for (int j = 0; j < k.s; ++j) g.w.push_back(l[k.r + j]);
    g.unit = u;
    L.basis.push_back(g);
  }
  // imaginary parts: torsion logs and 2 pi i Z^s, all in (2 pi / m) Z^s
  if (k.s > 0) {
    int m = pu.torsion_order;
    auto lz = log_embedding(k, pu.torsion_generator);
    std::vector<std::vector<long>> rows;
    std::vector<long> coef;  // exponent of the torsion generator
    std::vector<long> kz(k.s);
    for (int j = 0; j < k.s; ++j) kz[j] = std::lround(lz[k.r + j].imag() * m / kTwoPi);
    rows.push_back(kz);
    coef.push_back(1);
    for (int j = 0; j < k.s; ++j) {
      std::vector<long> e(k.s, 0);
      e[j] = m;
      rows.push_back(e);
      coef.push_back(0);
    }
    // row echelon form by gcd steps
    int top = 0;
    for (int col = 0; col < k.s; ++col) {
      for (;;) {
        int piv = -1;
        for (int i = top; i < static_cast<int>(rows.size()); ++i)
          if (rows[i][col] != 0 && (piv < 0 || std::labs(rows[i][col]) < std::labs(rows[piv][col]))) piv = i;
        if (piv < 0) break;
        std::swap(rows[top], rows[piv]);
        std::swap(coef[top], coef[piv]);
        bool done = true;
        for (int i = top + 1; i < static_cast<int>(rows.size()); ++i) {
          long q = rows[i][col] / rows[top][col];
          if (q) {
            for (int c = 0; c < k.s; ++c) rows[i][c] -= q * rows[top][c];
            coef[i] -= q * coef[top];
          }
          if (rows[i][col] != 0) done = false;
        }
        if (done) break;
      }
      ++top;
    }
    for (int i = 0; i < k.s; ++i) {
      if (rows[i][i] < 0) {
        for (auto& x : rows[i]) x = -x;
        coef[i] = -coef[i];
      }
      GammaVector g;
      g.t.assign(k.r, 0.0);
      for (int j = 0; j < k.s; ++j) g.w.emplace_back(0.0, kTwoPi * rows[i][j] / m);
      long e = ((coef[i] % m) + m) % m;
      g.unit = power(k, pu.torsion_generator, static_cast<int>(e));
      L.basis.push_back(g);
    }
  }
  for (const auto& g : L.basis) {
    double sum = 0;
    for (double t : g.t) sum += t;
    for (const auto& w : g.w) sum += 2 * w.real();
    L.hyperplane_residual = std::max(L.hyperplane_residual, std::abs(sum));
    // exp of the vector acts as the unit
    auto e = embed(k, g.unit);
    for (int i = 0; i < k.r; ++i)
      if (std::abs(std::exp(g.t[i]) - e[i].real()) > 1e-9 * std::abs(e[i].real()))
        throw NumericalError("lattice vector does not exponentiate to its unit");
    for (int j = 0; j < k.s; ++j)
      if (std::abs(std::exp(g.w[j]) - e[k.r + j]) > 1e-9 * std::abs(e[k.r + j]))
        throw NumericalError("lattice vector does not exponentiate to its unit");
    L.monodromy.push_back(monodromy_matrix(k, g.unit));
    L.diagonalization_residual = std::max(L.diagonalization_residual, monodromy_diagonalization_residual(k, g.unit));
  }
  if (L.hyperplane_residual > 1e-10) throw NumericalError("lattice vector leaves the trace-zero hyperplane");
  L.rank = 0;
  if (!L.basis.empty()) {
    Eigen::MatrixXd G(L.basis.size(), n);
    for (size_t i = 0; i < L.basis.size(); ++i) {
      auto f = flatten(L.basis[i]);
      for (int j = 0; j < n; ++j) G(i, j) = f[j];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(G);
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 1e-8) ++L.rank;
  }
  if (L.rank != n - 1) throw NumericalError("lattice rank differs from n - 1");
  if (L.diagonalization_residual > 1e-8) throw NumericalError("monodromy does not diagonalize to the embeddings");
  return L;
}

HyperbolicSl2 hyperbolic_sl2_lattice(const IntMatrix& A) {
  if (A.size() != 2 || A[0].size() != 2 || A[1].size() != 2) throw InputError("need a 2x2 integer matrix");
  if (A[0][0] * A[1][1] - A[0][1] * A[1][0] != 1) throw InputError("need determinant 1");
  Integer tr = A[0][0] + A[1][1];
  if (abs(tr) <= 2) throw InputError("matrix is not hyperbolic (|trace| <= 2)");
  HyperbolicSl2 h;
  double a = A[0][0].get_d(), b = A[0][1].get_d(), c = A[1][0].get_d(), d = A[1][1].get_d(), t = tr.get_d();
  h.sign = t > 0 ? 1 : -1;
  double root = std::sqrt(t * t - 4);
  double big = (std::abs(t) + root) / 2;
  h.tau = std::log(big);
  auto vec = [&](double lam) {
    Eigen::Vector2d v = std::abs(b) >= std::abs(c) ? Eigen::Vector2d(b, lam - a) : Eigen::Vector2d(lam - d, c);
    return Eigen::Vector2d(v.normalized());
  };
  h.basis.col(0) = vec(h.sign / big);
  h.basis.col(1) = vec(h.sign * big);
  Eigen::Matrix2d D = Eigen::Vector2d(std::exp(-h.tau), std::exp(h.tau)).asDiagonal();
  Eigen::Matrix2d R = h.sign * h.basis * D * h.basis.inverse();
  Eigen::Matrix2d Ad;
  Ad << a, b, c, d;
  h.residual = (R - Ad).cwiseAbs().maxCoeff();
  if (h.residual > 1e-9 * std::max(1.0, Ad.cwiseAbs().maxCoeff())) throw NumericalError("eigenbasis does not reproduce A");
  return h;
}

LiealgPair build_liealg_pair(const NumberField& k, long box_bound) {
  if (k.s > 0) throw InputError("exact pair certificates need a totally real field");
  UnitGroup g = find_units(k, box_bound);
  PositiveUnits pu = positive_units(g, k);
  LatticeData lattice = gamma_lattice(k, pu);
  Preset preset = totally_real(k.degree());
  auto cert = liouville_pair_check(preset.algebra, preset.alpha_plus, preset.alpha_minus);
  return LiealgPair{std::move(preset), std::move(cert), std::move(lattice), std::move(pu)};
}

}  // namespace liouville
