#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "liouville/numfield.hpp"

using namespace liouville;

namespace {

OrderElement el(std::initializer_list<long> c) {
  OrderElement x;
  for (long v : c) x.emplace_back(v);
  return x;
}

IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix M;
  for (auto r : rows) {
    M.emplace_back();
    for (long v : r) M.back().emplace_back(v);
  }
  return M;
}

// Res(f, g) from the Sylvester matrix, f monic, by rational elimination.
Integer sylvester_resultant(const std::vector<long>& f, OrderElement g) {
  while (g.size() > 1 && g.back() == 0) g.pop_back();
  int n = static_cast<int>(f.size()) - 1, m = static_cast<int>(g.size()) - 1;
  if (m == 0) {
    Integer r = 1;
    for (int i = 0; i < n; ++i) r *= g[0];
    return r;
  }
  int N = n + m;
  std::vector<std::vector<Rational>> S(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S[i][i + j] = f[n - j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S[m + i][i + j] = g[m - j];
  Rational det = 1;
  for (int c = 0; c < N; ++c) {
    int p = c;
    while (p < N && S[p][c] == 0) ++p;
    if (p == N) return 0;
    if (p != c) {
      std::swap(S[p], S[c]);
      det = -det;
    }
    det *= S[c][c];
    for (int i = c + 1; i < N; ++i) {
      Rational q = S[i][c] / S[c][c];
      for (int j = c; j < N; ++j) S[i][j] -= q * S[c][j];
    }
  }
  return det.get_num();
}

// Plain product of float embeddings, roots from the quadratic formula.
double quadratic_norm_oracle(long b, long c, double x0, double x1) {
  double D = static_cast<double>(b * b - 4 * c);
  if (D >= 0) {
    double r1 = (-b + std::sqrt(D)) / 2, r2 = (-b - std::sqrt(D)) / 2;
    return (x0 + x1 * r1) * (x0 + x1 * r2);
  }
  double re = -b / 2.0, im = std::sqrt(-D) / 2;
  return std::pow(x0 + x1 * re, 2) + std::pow(x1 * im, 2);
}

}  // namespace

TEST_CASE("fields from polynomials") {
  auto q = field_from_poly({-1, 1});
  CHECK(q.r == 1);
  CHECK(q.s == 0);
  CHECK(q.real_roots[0] == doctest::Approx(1.0));

  auto gi = field_from_poly({1, 0, 1});
  CHECK(gi.r == 0);
  CHECK(gi.s == 1);
  CHECK(std::abs(gi.complex_roots[0] - std::complex<double>(0, 1)) < 1e-14);

  auto r2 = field_from_poly({-2, 0, 1});
  CHECK(r2.r == 2);
  CHECK(r2.real_roots[0] == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(r2.real_roots[1] == doctest::Approx(-std::numbers::sqrt2).epsilon(1e-15));

  auto c3 = field_from_poly({-1, -3, 0, 1});
  CHECK(c3.r == 3);
  auto m3 = field_from_poly({-2, 0, 0, 1});
  CHECK(m3.r == 1);
  CHECK(m3.s == 1);
  auto z8 = field_from_poly({1, 0, 0, 0, 1});
  CHECK(z8.s == 2);
  for (const auto& k : {q, gi, r2, c3, m3, z8}) {
    for (double x : k.real_roots) {
      double v = 0;
      for (int i = k.degree(); i >= 0; --i) v = v * x + k.f.c[i];
      CHECK(std::abs(v) <= 1e-12 * std::pow(1 + std::abs(x), k.degree()));
    }
    CHECK(k.r + 2 * k.s == k.degree());
    for (const auto& z : k.complex_roots) CHECK(z.imag() > 0);
  }
}

TEST_CASE("reducible and malformed polynomials are rejected") {
  CHECK_THROWS_AS(field_from_poly({-1, 0, 1}), InputError);        // (X-1)(X+1)
  CHECK_THROWS_AS(field_from_poly({0, 1, 1}), InputError);         // root 0
  CHECK_THROWS_AS(field_from_poly({1, 2, 1}), InputError);         // square
  CHECK_THROWS_AS(field_from_poly({2, 0, 3, 0, 1}), InputError);   // (X^2+1)(X^2+2)
  CHECK_THROWS_AS(field_from_poly({-1, 0, 0, 0, 1}), InputError);  // rational roots
  CHECK_THROWS_AS(field_from_poly({2, -2, 1, -2, 1}), InputError); // (X^2+1)(X^2-2X+2)
  CHECK_THROWS_AS(field_from_poly({1, 0, 2}), InputError);         // not monic
  CHECK_THROWS_AS(field_from_poly({1, 0, 0, 0, 0, 1}), InputError);
  CHECK_NOTHROW(field_from_poly({-2, 0, 0, 0, 1}));  // X^4 - 2
  CHECK_NOTHROW(field_from_poly({1, -1, 1, -1, 1}));
}

TEST_CASE("exact norms") {
  auto r2 = field_from_poly({-2, 0, 1});
  auto gi = field_from_poly({1, 0, 1});
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      CHECK(norm(r2, el({a, b})) == a * a - 2 * b * b);
      CHECK(norm(gi, el({a, b})) == a * a + b * b);
    }
  CHECK(norm(r2, el({3, 2})) == 1);
  CHECK(norm(r2, el({1, 0})) == 1);

  // resultant oracle and float cross-check on random elements
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-9, 9);
  for (const std::vector<long>& f : std::vector<std::vector<long>>{
           {-1, -3, 0, 1}, {-2, 0, 0, 1}, {1, 0, 0, 0, 1}, {-2, 0, 0, 0, 1}, {3, 1, -4, 2, 1}, {-3, 1, 1}}) {
    auto k = field_from_poly(f);
    for (int t = 0; t < 40; ++t) {
      OrderElement x(k.degree());
      for (auto& v : x) v = d(rng);
      Integer N = norm(k, x);
      CHECK(N == sylvester_resultant(f, x));
      double fl = float_norm(k, x);
      CHECK(std::abs(fl - N.get_d()) <= 1e-6 * std::max(1.0, std::abs(N.get_d())));
    }
  }
  auto q = field_from_poly({-3, 1, 1});
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      CHECK(norm(q, el({a, b})).get_d() == doctest::Approx(quadratic_norm_oracle(1, -3, a, b)).epsilon(1e-9));
}

TEST_CASE("arithmetic in the order") {
  auto c3 = field_from_poly({-1, -3, 0, 1});
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int t = 0; t < 30; ++t) {
    OrderElement x(3), y(3);
    for (auto& v : x) v = d(rng);
    for (auto& v : y) v = d(rng);
    auto xy = multiply(c3, x, y);
    CHECK(xy == multiply(c3, y, x));
    CHECK(norm(c3, xy) == norm(c3, x) * norm(c3, y));
    auto ex = embed(c3, x), ey = embed(c3, y), exy = embed(c3, xy);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(exy[i] - ex[i] * ey[i]) <= 1e-9 * (1 + std::abs(exy[i])));
  }
  auto r2 = field_from_poly({-2, 0, 1});
  CHECK(power(r2, el({1, 1}), 2) == el({3, 2}));
  CHECK(unit_inverse(r2, el({3, 2})) == el({3, -2}));
  CHECK(power(r2, el({1, 1}), -1) == el({-1, 1}));
  CHECK_THROWS_AS(unit_inverse(r2, el({2, 0})), InputError);
}

TEST_CASE("units of Q, Q[i], Q[sqrt 2]") {
  auto q = field_from_poly({-1, 1});
  auto gq = find_units(q, 20);
  CHECK(gq.rank == 0);
  CHECK(gq.torsion.size() == 2);
  auto pq = positive_units(gq, q);
  REQUIRE(pq.torsion.size() == 1);
  CHECK(pq.torsion[0] == el({1}));

  auto gi = field_from_poly({1, 0, 1});
  auto ug = find_units(gi, 30);
  CHECK(ug.rank == 0);
  CHECK(ug.torsion_order == 4);
  CHECK(ug.torsion.size() == 4);
  for (const auto& u : {el({1, 0}), el({-1, 0}), el({0, 1}), el({0, -1})})
    CHECK(std::find(ug.torsion.begin(), ug.torsion.end(), u) != ug.torsion.end());
  CHECK(ug.torsion_generator == el({0, 1}));
  auto pi = positive_units(ug, gi);
  CHECK(pi.torsion.size() == 4);  // no real places

  auto r2 = field_from_poly({-2, 0, 1});
  auto g2 = find_units(r2, default_box_bound(2));
  CHECK(g2.rank == 1);
  CHECK(g2.torsion.size() == 2);
  CHECK(g2.free[0] == el({1, 1}));
  CHECK(norm(r2, g2.free[0]) == -1);
  auto p2 = positive_units(g2, r2);
  CHECK(p2.free[0] == el({3, 2}));
  CHECK(p2.squared[0]);
  CHECK(p2.torsion.size() == 1);
}

TEST_CASE("box search agrees with the Pell oracle") {
  int compared = 0;
  for (long d = 2; d <= 60; ++d) {
    long s = std::lround(std::sqrt(static_cast<double>(d)));
    if (s * s == d) continue;
    OrderElement pell = pell_positive_unit(d);
    CHECK(pell[0] * pell[0] - Integer(d) * pell[1] * pell[1] == 1);
    auto k = field_from_poly({-d, 0, 1});
    long box = 150;
    // pell may not fit while its square root does
    if (abs(pell[0]) > box || abs(pell[1]) > box) {
      try {
        auto p = positive_units(find_units(k, box), k);
        CHECK(p.free[0] == pell);
      } catch (const NumericalError&) {
      }
      continue;
    }
    auto g = find_units(k, box);
    auto p = positive_units(g, k);
    CAPTURE(d);
    CHECK(p.free[0] == pell);
    ++compared;
  }
  CHECK(compared >= 25);
  CHECK_THROWS_AS(pell_positive_unit(9), InputError);
  CHECK(pell_positive_unit(2) == el({3, 2}));
  CHECK(pell_positive_unit(13) == el({649, 180}));
}

TEST_CASE("unit search reports rank deficiency") {
  auto k = field_from_poly({-46, 0, 1});  // unit 24335 + 3588 X
  CHECK_THROWS_WITH_AS(find_units(k, 100), doctest::Contains("increase box_bound"), NumericalError);
  CHECK_THROWS_AS(find_units(k, 600), InputError);  // more than 10^6 candidates
}

TEST_CASE("unit properties across fields") {
  for (const std::vector<long>& f : std::vector<std::vector<long>>{
           {-1, -3, 0, 1}, {-2, 0, 0, 1}, {1, 0, 0, 0, 1}, {-5, 0, 1}, {1, -1, 1}, {1, -3, 0, 1}, {-3, 0, 0, 0, 1}}) {
    CAPTURE(f.size());
    auto k = field_from_poly(f);
    auto g = find_units(k, default_box_bound(k.degree(), 200000));
    CHECK(g.rank == k.r + k.s - 1);
    std::vector<OrderElement> all = g.torsion;
    all.insert(all.end(), g.free.begin(), g.free.end());
    for (const auto& u : all) {
      Integer N = norm(k, u);
      CHECK((N == 1 || N == -1));
      CHECK(std::abs(float_norm(k, u) - N.get_d()) <= 1e-6);
      if (!is_positive(k, u)) CHECK(is_positive(k, multiply(k, u, u)));
    }
    auto p = positive_units(g, k);
    for (const auto& u : p.free) {
      CHECK(norm(k, u) == 1);
      CHECK(is_positive(k, u));
    }
    auto L = gamma_lattice(k, p);
    CHECK(L.rank == k.degree() - 1);
    CHECK(L.hyperplane_residual <= 1e-10);
    CHECK(L.diagonalization_residual <= 1e-8);
    for (const auto& M : L.monodromy) CHECK(int_determinant(M) == 1);
  }
}

TEST_CASE("gamma lattice and monodromy of Q[sqrt 2]") {
  auto k = field_from_poly({-2, 0, 1});
  auto p = positive_units(find_units(k, 10), k);
  auto L = gamma_lattice(k, p);
  REQUIRE(L.basis.size() == 1);
  CHECK(std::abs(L.basis[0].t[0] - std::log(3 + 2 * std::numbers::sqrt2)) <= 1e-10);
  CHECK(std::abs(L.basis[0].t[1] - std::log(3 - 2 * std::numbers::sqrt2)) <= 1e-10);
  CHECK(L.monodromy[0] == imat({{3, 4}, {2, 3}}));
}

TEST_CASE("gamma lattice and monodromy of Q[i]") {
  auto k = field_from_poly({1, 0, 1});
  auto p = positive_units(find_units(k, 10), k);
  auto L = gamma_lattice(k, p);
  REQUIRE(L.basis.size() == 1);
  CHECK(L.basis[0].t.empty());
  CHECK(std::abs(L.basis[0].w[0] - std::complex<double>(0, std::numbers::pi / 2)) <= 1e-10);
  CHECK(L.monodromy[0] == imat({{0, -1}, {1, 0}}));
  // four quarter turns
  IntMatrix M = L.monodromy[0], P = imat({{1, 0}, {0, 1}});
  for (int i = 0; i < 4; ++i) {
    IntMatrix Q(2, std::vector<Integer>(2, Integer(0)));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) Q[a][b] += P[a][c] * M[c][b];
    P = Q;
  }
  CHECK(P == imat({{1, 0}, {0, 1}}));
}

TEST_CASE("gamma lattice of Q and of the eighth cyclotomic field") {
  auto q = field_from_poly({-1, 1});
  auto L = gamma_lattice(q, positive_units(find_units(q, 5), q));
  CHECK(L.rank == 0);
  CHECK(L.basis.empty());
  CHECK(monodromy_matrix(q, el({1})) == imat({{1}}));

  auto z8 = field_from_poly({1, 0, 0, 0, 1});
  auto g = find_units(z8, 6);
  CHECK(g.torsion_order == 8);
  auto L8 = gamma_lattice(z8, positive_units(g, z8));
  CHECK(L8.rank == 3);
  // the torsion part of the lattice is generated by the arguments of zeta_8 at both places
  for (const auto& v : L8.basis)
    if (v.unit.size() && std::abs(v.w[0].real()) < 1e-12) {
      double a0 = v.w[0].imag() / (std::numbers::pi / 4), a1 = v.w[1].imag() / (std::numbers::pi / 4);
      CHECK(std::abs(a0 - std::round(a0)) < 1e-10);
      CHECK(std::abs(a1 - std::round(a1)) < 1e-10);
    }
}

TEST_CASE("monodromy of the identity and of random units") {
  auto c3 = field_from_poly({-1, -3, 0, 1});
  CHECK(monodromy_matrix(c3, el({1, 0, 0})) == imat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto g = find_units(c3, 8);
  auto p = positive_units(g, c3);
  CHECK(p.free.size() == 2);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      auto u = multiply(c3, power(c3, p.free[0], a), power(c3, p.free[1], b));
      CHECK(int_determinant(monodromy_matrix(c3, u)) == 1);
      CHECK(monodromy_diagonalization_residual(c3, u) <= 1e-8);
    }
  CHECK_THROWS_AS(monodromy_matrix(c3, el({-1, 0, 0})), NumericalError);  // det -1
}

TEST_CASE("hyperbolic SL(2,Z) matrices") {
  auto h = hyperbolic_sl2_lattice(imat({{3, 4}, {2, 3}}));
  CHECK(std::abs(h.tau - std::log(3 + 2 * std::numbers::sqrt2)) <= 1e-12);
  CHECK(h.residual <= 1e-9);
  auto h2 = hyperbolic_sl2_lattice(imat({{2, 1}, {1, 1}}));
  CHECK(std::abs(h2.tau - std::log((3 + std::sqrt(5.0)) / 2)) <= 1e-12);
  auto h3 = hyperbolic_sl2_lattice(imat({{-2, -1}, {-1, -1}}));
  CHECK(h3.sign == -1);
  CHECK(std::abs(h3.tau - std::log((3 + std::sqrt(5.0)) / 2)) <= 1e-12);
  CHECK_THROWS_AS(hyperbolic_sl2_lattice(imat({{1, 1}, {0, 1}})), InputError);
  CHECK_THROWS_AS(hyperbolic_sl2_lattice(imat({{2, 1}, {1, 2}})), InputError);
  // random hyperbolic products of the two elementary shears
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(1, 4);
  for (int t = 0; t < 50; ++t) {
    IntMatrix M = imat({{1, d(rng)}, {0, 1}}), L = imat({{1, 0}, {d(rng), 1}});
    IntMatrix A(2, std::vector<Integer>(2, Integer(0)));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) A[a][b] += M[a][c] * L[c][b];
    auto hh = hyperbolic_sl2_lattice(A);
    double tr = Integer(A[0][0] + A[1][1]).get_d();
    CHECK(std::abs(2 * std::cosh(hh.tau) - tr) <= 1e-9 * tr);
  }
}

TEST_CASE("Liouville pairs from totally real fields") {
  auto q = build_liealg_pair(field_from_poly({-1, 1}), 5);
  CHECK(q.preset.algebra.dim() == 1);
  CHECK(q.certificate.label() == "positive-exact");
  auto r2 = build_liealg_pair(field_from_poly({-2, 0, 1}), 10);
  CHECK(r2.preset.algebra.dim() == 3);
  CHECK(r2.certificate.label() == "positive-exact");
  CHECK(r2.lattice.monodromy[0] == imat({{3, 4}, {2, 3}}));
  auto c3 = build_liealg_pair(field_from_poly({-1, -3, 0, 1}), 10);
  CHECK(c3.preset.algebra.dim() == 5);
  CHECK(c3.certificate.label() == "positive-exact");
  CHECK(c3.lattice.rank == 2);
  CHECK_THROWS_AS(build_liealg_pair(field_from_poly({1, 0, 1}), 5), InputError);
}
