#include <doctest.h>

#include "liouville/exterior.hpp"
#include "liouville/json_io.hpp"
#include "liouville/liealg.hpp"
#include "test_support.hpp"

using namespace liouville;
using testsupport::random_form;

namespace {
using F = Form<Rational>;
CoframePtr xyzw() { return make_coframe({"dx", "dy", "dz", "dw"}); }
}  // namespace

TEST_CASE("wedge basics") {
  auto cf = xyzw();
  F dx = F::basis(cf, 0), dy = F::basis(cf, 1);
  CHECK(wedge(dx, dx).is_zero());
  CHECK(wedge(dx, dy) == -wedge(dy, dx));
  CHECK_THROWS_AS(wedge(dx, F::basis(make_coframe({"a", "b", "c", "d"}), 0)), InputError);
  F vol = F::volume(cf);
  CHECK_THROWS_AS(wedge(vol, dx), InputError);
}

TEST_CASE("top coefficient and orientation") {
  auto cf = make_coframe({"dx", "dy"});
  CHECK(top_coefficient(F::volume(cf)) == 1);
  CHECK(top_coefficient(wedge(F::basis(cf, 1), F::basis(cf, 0))) == -1);
  CHECK_THROWS_AS(top_coefficient(F::basis(cf, 0)), InputError);
}

TEST_CASE("power") {
  auto cf = xyzw();
  F w = wedge(F::basis(cf, 0), F::basis(cf, 1)) + wedge(F::basis(cf, 2), F::basis(cf, 3));
  CHECK(power(w, 1) == w);
  CHECK(power(w, 2) == F::volume(cf) * Rational(2));
  CHECK(power(w, 0) == F::scalar(cf, Rational(1)));
  CHECK_THROWS_AS(power(F::basis(cf, 0), 2), InputError);
  CHECK_THROWS_AS(power(w, 3), InputError);
}

TEST_CASE("power agrees with repeated wedge") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto cf = testsupport::numbered_coframe(8);
    F w = random_form(rng, cf, 2);
    F rep = w;
    for (int k = 2; k <= 4; ++k) {
      rep = wedge(rep, w);
      CHECK(power(w, k) == rep);
    }
  }
}

TEST_CASE("top coefficient of omega^n is n! Pf") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < (n <= 4 ? 10 : 3); ++trial) {
      auto A = testsupport::random_skew(rng, 2 * n);
      auto cf = testsupport::numbered_coframe(2 * n);
      F w = two_form_from_matrix(cf, A);
      CHECK(top_coefficient(power(w, n)) == factorial_q(n) * testsupport::pfaffian_oracle(A));
      CHECK(matrix_from_two_form(w) == A);
    }
  }
}

TEST_CASE("graded anticommutativity and associativity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 3 + trial % 6;
    auto cf = testsupport::numbered_coframe(dim);
    std::uniform_int_distribution<int> deg(0, 3);
    int p = std::min(deg(rng), dim), q = std::min(deg(rng), dim - p);
    int r = std::min(deg(rng), dim - p - q);
    F a = random_form(rng, cf, p), b = random_form(rng, cf, q), c = random_form(rng, cf, r);
    F ab = wedge(a, b), ba = wedge(b, a);
    CHECK(ab == ((p * q) % 2 ? -ba : ba));
    CHECK(wedge(ab, c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("interior product") {
  auto cf = make_coframe({"dx", "dy", "dz"});
  VectorElem<Rational> dxv(cf, {1, 0, 0});
  CHECK(interior_product(dxv, F::basis(cf, 0)) == F::scalar(cf, Rational(1)));
  CHECK(interior_product(dxv, wedge(F::basis(cf, 1), F::basis(cf, 2))).is_zero());
  CHECK_THROWS_AS(interior_product(dxv, F::scalar(cf, Rational(2))), InputError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 5 + trial % 4;
    auto c2 = testsupport::numbered_coframe(dim);
    std::vector<Rational> v(dim);
    for (auto& x : v) x = testsupport::random_rational(rng);
    VectorElem<Rational> ve(c2, v);
    int p = 1 + trial % 3, q = 1 + (trial / 3) % 2;
    F a = random_form(rng, c2, p), b = random_form(rng, c2, q);
    F lhs = interior_product(ve, wedge(a, b));
    F rhs = wedge(interior_product(ve, a), b) + (p % 2 ? -wedge(a, interior_product(ve, b)) : wedge(a, interior_product(ve, b)));
    CHECK(lhs == rhs);
    F ab = wedge(a, b);
    if (ab.degree() >= 2) CHECK(interior_product(ve, interior_product(ve, ab)).is_zero());
  }
}

TEST_CASE("pullback") {
  auto cf = make_coframe({"dx", "dy"});
  DenseMatrix<Rational> I{{1, 0}, {0, 1}}, D{{2, 0}, {0, 1}};
  std::mt19937_64 rng(9);
  F a = random_form(rng, cf, 1);
  CHECK(pullback(I, a) == a);
  CHECK(pullback(D, F::basis(cf, 0)) == F::basis(cf, 0) * Rational(2));

  for (int trial = 0; trial < 20; ++trial) {
    int dim = 3 + trial % 4;
    auto c2 = testsupport::numbered_coframe(dim);
    DenseMatrix<Rational> L(dim, std::vector<Rational>(dim));
    for (auto& row : L)
      for (auto& x : row) x = testsupport::random_rational(rng);
    F p = random_form(rng, c2, 1), q = random_form(rng, c2, 2);
    CHECK(pullback(L, wedge(p, q)) == wedge(pullback(L, p), pullback(L, q)));
    // determinant law on top forms, with the 1-form route as the second evaluation
    F vol = F::volume(c2);
    F pv = F::scalar(c2, Rational(1));
    for (int i = 0; i < dim; ++i) pv = wedge(pv, pullback(L, F::basis(c2, i)));
    CHECK(pullback(L, vol) == pv);
  }
  CHECK_THROWS_AS(pullback(DenseMatrix<Rational>{{1}}, a), InputError);
}

TEST_CASE("float conversion and json round trip") {
  std::mt19937_64 rng(13);
  auto cf = testsupport::numbered_coframe(6);
  for (int trial = 0; trial < 10; ++trial) {
    F a = random_form(rng, cf, 1 + trial % 4);
    Form<double> d = a.to_double();
    for (const auto& [b, c] : a.terms()) {
      double exact = c.get_d();
      CHECK(std::abs(d.coefficient(b) - exact) <= 1e-12 * std::abs(exact));
    }
    CHECK(exact_form_from_json(form_to_json(a)) == a);
    auto back = float_form_from_json(form_to_json(d));
    CHECK(back.terms().size() == d.terms().size());
  }
}

TEST_CASE("top coefficient of the n=1 pair") {
  Preset p = totally_real(2);
  Form<Rational> top = wedge(p.alpha_plus, ce_differential(p.algebra, p.alpha_plus));
  CHECK(p.algebra.coframe()->names() == std::vector<std::string>{"T1*", "Θ0*", "Θ1*"});
  CHECK(top_coefficient(top) == 2);
}
