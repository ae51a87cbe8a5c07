// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "liouville/formfam.hpp"
#include "liouville/liealg.hpp"
#include "liouville/numfield.hpp"
#include "liouville/symplin.hpp"

using namespace liouville;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs >= budget_s) o.require(false, "runtime over " + std::to_string(budget_s) + " s");
  if (!o.pass) ++failures;
  std::printf("%s %2d %-28s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.note.str().c_str());
  std::fflush(stdout);
}

IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix M;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (long v : r) row.emplace_back(v);
    M.push_back(row);
  }
  return M;
}

OrderElement el(std::initializer_list<long> c) {
  OrderElement x;
  for (long v : c) x.emplace_back(v);
  return x;
}

std::pair<Matrix, Matrix> conjugate_pair(const Matrix& M0, const Matrix& M1, const Matrix& P) {
  Matrix Pi = P.inverse();
  return {Pi.transpose() * M0 * Pi, Pi.transpose() * M1 * Pi};
}

Matrix random_invertible(std::mt19937_64& rng, int n, double spread) {
  std::normal_distribution<double> g(0, 1);
  Matrix P = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P(i, j) += spread * g(rng);
  return P;
}

// omega1 model on the standard Darboux coordinates (v_1..v_m, w_1..w_m)
Matrix skew(Matrix A) { return A - A.transpose(); }

Matrix real_model(const std::vector<double>& lambdas) {
  int m = static_cast<int>(lambdas.size());
  Matrix A = Matrix::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) A(i, m + i) = lambdas[i];
  return skew(A);
}

Matrix complex_model(double mu, double nu) {
  Matrix A = Matrix::Zero(4, 4);
  A(0, 2) = mu;
  A(0, 3) = nu;
  A(1, 2) = -nu;
  A(1, 3) = mu;
  return skew(A);
}

Matrix jordan_model(double lambda) {
  Matrix A = Matrix::Zero(4, 4);
  A(0, 2) = lambda;
  A(0, 3) = 1;
  A(1, 3) = lambda;
  return skew(A);
}

}  // namespace

int main() {
  criterion(1, "Q[sqrt 2] pipeline", 1.0, [](Outcome& o) {
    auto k = field_from_poly({-2, 0, 1});
    auto pu = positive_units(find_units(k, default_box_bound(2)), k);
    o.require(pu.free.size() == 1 && pu.free[0] == el({3, 2}), "positive unit 3+2X");
    auto L = gamma_lattice(k, pu);
    o.require(L.basis.size() == 1 && L.monodromy.size() == 1, "one lattice generator");
    if (!o.pass) return;
    o.require(L.monodromy[0] == imat({{3, 4}, {2, 3}}), "monodromy [[3,4],[2,3]]");
    double e0 = std::abs(L.basis[0].t[0] - std::log(3 + 2 * std::numbers::sqrt2));
    double e1 = std::abs(L.basis[0].t[1] - std::log(3 - 2 * std::numbers::sqrt2));
    o.require(e0 <= 1e-10 && e1 <= 1e-10, "Gamma generator");
    o.note << "gamma err " << std::max(e0, e1);
  });

  criterion(2, "Q[i] pipeline", 1.0, [](Outcome& o) {
    auto k = field_from_poly({1, 0, 1});
    auto g = find_units(k, default_box_bound(2));
    o.require(g.rank == 0 && g.torsion.size() == 4, "unit group of order 4, rank 0");
    for (const auto& u : {el({1, 0}), el({-1, 0}), el({0, 1}), el({0, -1})})
      o.require(std::find(g.torsion.begin(), g.torsion.end(), u) != g.torsion.end(), "torsion contains +-1, +-X");
    auto L = gamma_lattice(k, positive_units(g, k));
    o.require(L.basis.size() == 1 && L.monodromy.size() == 1, "one lattice generator");
    if (!o.pass) return;
    double e = std::abs(L.basis[0].w[0] - std::complex<double>(0, kPi / 2));
    o.require(L.basis[0].t.empty() && e <= 1e-10, "Gamma spanned by i pi/2");
    o.require(L.monodromy[0] == imat({{0, -1}, {1, 0}}), "quarter-turn monodromy");
    o.note << "gamma err " << e;
  });

  criterion(3, "exact pair certificates", 5.0, [](Outcome& o) {
    for (int m = 2; m <= 4; ++m) {
      Preset p = totally_real(m);
      int dim = p.algebra.dim();
      o.require(dim == 2 * m - 1, "dimension " + std::to_string(dim));
      auto c = liouville_pair_check(p.algebra, p.alpha_plus, p.alpha_minus);
      o.require(c.verdict == Verdict::positive && c.kind == "exact-sturm" && replay(c),
                "pair certificate in dim " + std::to_string(dim));
      o.require(contact_check(p.algebra, p.alpha_plus).verdict == Verdict::positive, "alpha+ positive");
      o.require(contact_check(p.algebra, p.alpha_minus).verdict == Verdict::negative, "alpha- negative");
    }
    o.note << "dims 3, 5, 7";
  });

  criterion(4, "Giroux torsion contact", 10.0, [](Outcome& o) {
    Preset circle = grs1(1, 0), sol = preset_from_id("sol:2,1,1,1");
    double worst_t3 = 0, min_top = INFINITY;
    for (int k = 1; k <= 3; ++k) {
      GridSpec grid{{0}, {2 * kPi * k}, 1024};
      for (const Preset* p : {&circle, &sol}) {
        auto r = contact_grid_check(gt_form(*p, k).to_form(), grid);
        o.require(r.pass && r.min_value > 0, p->id + " k=" + std::to_string(k));
        min_top = std::min(min_top, r.min_value);
      }
      auto g = gt_form(circle, k).to_form();
      auto t3 = t3_form(k);
      for (const auto& pt : grid_points(GridSpec{{0}, {2 * kPi}, 1024}))
        worst_t3 = std::max(worst_t3, (g.at({k * pt[0], 0}) - t3.at(pt)).max_abs());
      auto rt = contact_grid_check(t3, GridSpec{{0}, {2 * kPi}, 1024});
      o.require(rt.pass, "torus form k=" + std::to_string(k));
    }
    o.require(worst_t3 <= 1e-12, "S^1 family reproduces the torus forms");
    o.note << "min top " << min_top << ", torus err " << worst_t3;
  });

  criterion(5, "Reeb solver", 0, [](Outcome& o) {
    Preset circle = grs1(1, 0), sol = preset_from_id("sol:2,1,1,1");
    double r1 = 0, r2 = 0, closed = 0;
    int points = 0;
    for (int k = 1; k <= 3; ++k) {
      auto pts = grid_points(GridSpec{{0}, {2 * kPi * k}, 1024});
      for (const Preset* p : {&circle, &sol}) {
        auto t = gt_form(*p, k);
        for (const auto& pt : pts) {
          auto r = reeb_field(t, pt[0]);
          o.require(r.ok, "solver status");
          r1 = std::max(r1, r.r1);
          r2 = std::max(r2, r.r2);
          ++points;
          if (p == &circle)
            closed = std::max({closed, std::abs(r.X[0] - std::cos(pt[0])), std::abs(r.u - std::sin(pt[0]))});
        }
      }
    }
    o.require(r1 <= 1e-8, "|lambda(R) - 1|");
    o.require(r2 <= 1e-8, "|i_R d lambda|");
    o.require(closed <= 1e-10, "torus Reeb field cos s d_theta + sin s d_t");
    o.note << points << " points, r1 " << r1 << ", r2 " << r2 << ", torus err " << closed;
  });

  criterion(6, "pencil equivalence suite", 60.0, [](Outcome& o) {
    int mismatches = 0, pairs = 0, cotamable = 0;
    for (int d : {4, 6, 8, 10}) {
      auto r = pencil_equivalence_suite(d, 1000, 0);
      // both sides of the equivalence must actually occur
      o.require(r.cotamable > 0 && r.cotamable < r.trials, "one-sided sample in dim " + std::to_string(d));
      mismatches += r.mismatches;
      pairs += r.trials;
      cotamable += r.cotamable;
    }
    o.require(pairs == 4000 && mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.note << pairs << " pairs, " << cotamable << " cotamable, " << mismatches << " mismatches";
  });

  criterion(7, "Cayley map and interpolation", 0, [](Outcome& o) {
    auto r = cayley_suite(500, 0);
    o.require(r.worst_round_trip <= 1e-10, "round trip");
    o.require(r.preserved == 500, "taming preserved");
    o.note << "round trip " << r.worst_round_trip << ", preserved " << r.preserved << "/500";
  });

  criterion(8, "pencil reduction fixtures", 0, [](Outcome& o) {
    const double eps = 1e-3;
    double worst_param = 0, worst_res = 0;
    int fixtures = 0;
    auto track = [&](double err) { worst_param = std::max(worst_param, err); };
    for (int seed = 0; seed < 10; ++seed) {
      std::mt19937_64 rng(1000 + seed);
      // distinct real eigenvalues, no chains
      {
        std::vector<double> ls{0.5, 2.0, -1.5};
        auto [A0, A1] = conjugate_pair(standard_omega(6), real_model(ls), random_invertible(rng, 6, 0.3));
        auto pb = simultaneous_reduce(A0, A1, eps);
        o.require(pb.blocks.size() == 3, "real blocks");
        for (const auto& b : pb.blocks) {
          double best = INFINITY;
          for (double l : ls) best = std::min(best, std::abs(b.lambda - l));
          o.require(b.kind == PencilBlock::Kind::real && b.chain == 1, "real kind");
          track(best);
        }
        worst_res = std::max({worst_res, pb.residual0 / eps, pb.residual1 / eps});
        ++fixtures;
      }
      // one chain of length two
      {
        auto [A0, A1] = conjugate_pair(standard_omega(4), jordan_model(2), random_invertible(rng, 4, 0.2));
        auto pb = simultaneous_reduce(A0, A1, eps);
        o.require(pb.blocks.size() == 1 && pb.blocks[0].chain == 2, "chain block");
        if (!pb.blocks.empty()) track(std::abs(pb.blocks[0].lambda - 2));
        worst_res = std::max({worst_res, pb.residual0 / eps, pb.residual1 / eps});
        ++fixtures;
      }
      // complex quadruple
      {
        auto [A0, A1] = conjugate_pair(standard_omega(4), complex_model(1, 2), random_invertible(rng, 4, 0.3));
        auto pb = simultaneous_reduce(A0, A1, eps);
        o.require(pb.blocks.size() == 1 && pb.blocks[0].kind == PencilBlock::Kind::complex, "complex block");
        if (!pb.blocks.empty()) track(std::max(std::abs(pb.blocks[0].mu - 1), std::abs(pb.blocks[0].nu - 2)));
        worst_res = std::max({worst_res, pb.residual0 / eps, pb.residual1 / eps});
        ++fixtures;
      }
      // mixed, dimension 8
      {
        Matrix M1 = Matrix::Zero(8, 8);
        M1(0, 4) = 0.5;
        M1(1, 5) = 1.5;
        M1(1, 6) = 0.7;
        M1(2, 5) = -0.7;
        M1(2, 6) = 1.5;
        M1(3, 7) = 3;
        auto [A0, A1] = conjugate_pair(standard_omega(8), skew(M1), random_invertible(rng, 8, 0.3));
        auto pb = simultaneous_reduce(A0, A1, eps);
        int reals = 0, complexes = 0;
        for (const auto& b : pb.blocks) {
          if (b.kind == PencilBlock::Kind::real) {
            ++reals;
            track(std::min(std::abs(b.lambda - 0.5), std::abs(b.lambda - 3)));
          } else {
            ++complexes;
            track(std::max(std::abs(b.mu - 1.5), std::abs(b.nu - 0.7)));
          }
        }
        o.require(reals == 2 && complexes == 1, "mixed block structure");
        worst_res = std::max({worst_res, pb.residual0 / eps, pb.residual1 / eps});
        ++fixtures;
      }
    }
    o.require(worst_param <= 1e-6, "block parameters");
    o.require(worst_res <= 10, "residual over 10 eps");
    o.note << fixtures << " fixtures, param err " << worst_param << ", residual/eps " << worst_res;
  });

  criterion(9, "four-dimensional remark", 0, [](Outcome& o) {
    Matrix A0 = to_matrix(remark_omega0()), A1 = to_matrix(remark_omega1());
    auto c = construct_cotamed(A0, A1);
    o.require(tames(A0, c.J) && tames(A1, c.J), "constructed J tamed by both");
    o.require(tames(remark_omega0(), to_qmatrix(c.J)) && tames(remark_omega1(), to_qmatrix(c.J)), "exact taming");
    auto r = cocompatible_counterexample_suite(10000, 0);
    o.require(r.wedge_zero, "omega0 ^ omega1 = 0");
    o.require(r.trials == 10000 && r.survivors == 0, "every compatible J has a violating vector");
    o.note << "margins " << c.margin0 << ", " << c.margin1 << "; survivors " << r.survivors << "/" << r.trials;
  });

  criterion(10, "Geiges pairs", 0, [](Outcome& o) {
    for (int n : {2, 3}) {
      Preset g = geiges(n);
      o.require(g.algebra.dim() == 2 * n - 1, "dimension");
      o.require(geiges_pair_check(g.algebra, g.alpha_plus, g.alpha_minus), "pair in dim " + std::to_string(2 * n - 1));
    }
    double worst = 0;
    for (int n = 1; n <= 5; ++n) {
      auto iso = geiges_isomorphism(n);
      worst = std::max(worst, iso.residual);
      o.require(iso.residual <= 1e-10, "isomorphism n=" + std::to_string(n));
      o.require(static_cast<int>(iso.power_traces.size()) == n - 1, "trace count");
      for (const auto& t : iso.power_traces) o.require(t == 0, "tr(A^j) = 0 at n=" + std::to_string(n));
    }
    o.note << "iso residual " << worst;
  });

  criterion(11, "Lutz and Xi identities", 0, [](Outcome& o) {
    double lutz = 0, xi = 0;
    for (const char* id : {"sol:2,1,1,1", "totreal:3"}) {
      Preset p = preset_from_id(id);
      for (int k = 1; k <= 3; ++k)
        for (double tau : {0.0, 0.25, 0.5, 0.75}) lutz = std::max(lutz, lutz_family_check(p, k, tau, Smoothstep::quintic).max_rel_error);
    }
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.05, 2.0), D(-3, 3);
    const char* ids[] = {"sol:2,1,1,1", "totreal:3", "totreal:2", "grs1:1,0"};
    for (int i = 0; i < 100; ++i) {
      Preset p = preset_from_id(ids[i % 4]);
      auto r = xi_nondegenerate(p, U(rng), U(rng), U(rng), D(rng));
      o.require(r.nonzero, "Xi form nonzero");
      xi = std::max(xi, r.rel_error);
    }
    o.require(lutz <= 1e-8, "Lutz identity");
    o.require(xi <= 1e-9, "Xi identity");
    o.note << "lutz " << lutz << ", xi " << xi;
  });

  criterion(12, "weak filling and cutoff", 0, [](Outcome& o) {
    for (double eps : {1e-3, 1e-2}) {
      auto r = sol_weak_filling_fixture(eps);
      o.require(r.pass && r.exact_vanishing, "fixture at eps " + std::to_string(eps));
    }
    auto c = min_c_search(preset_from_id("sol:2,1,1,1"), Smoothstep::quintic);
    o.require(c.found && std::isfinite(c.c), "finite cutoff constant");
    o.require(c.refined.pass && c.refined.points >= 4 * 1024, "refined grid");
    o.note << "c = " << c.c << ", refined min " << c.refined.min_value;
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
