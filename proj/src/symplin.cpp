#include "liouville/symplin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "liouville/formfam.hpp"

namespace liouville {

Matrix to_matrix(const QMatrix& A) {
  int n = static_cast<int>(A.size());
  Matrix M(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(A[i].size()) != n) throw InputError("matrix must be square");
    for (int j = 0; j < n; ++j) M(i, j) = A[i][j].get_d();
  }
  return M;
}

QMatrix to_qmatrix(const Matrix& A) {
  QMatrix Q(A.rows(), std::vector<Rational>(A.cols()));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) Q[i][j] = Rational(A(i, j));
  return Q;
}

Matrix standard_omega(int n2) {
  if (n2 % 2) throw InputError("symplectic dimension must be even");
  int n = n2 / 2;
  Matrix O = Matrix::Zero(n2, n2);
  O.topRightCorner(n, n).setIdentity();
  O.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  return O;
}

Matrix standard_j(int n2) { return -standard_omega(n2); }

namespace {

void require_square_skew(const QMatrix& A) {
  size_t n = A.size();
  for (size_t i = 0; i < n; ++i) {
    if (A[i].size() != n) throw InputError("matrix must be square");
    for (size_t j = 0; j <= i; ++j)
      if (A[i][j] != -A[j][i]) throw InputError("matrix is not antisymmetric");
  }
}

}  // namespace

Rational determinant(const QMatrix& A) {
  size_t n = A.size();
  QMatrix M = A;
  Rational det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && sgn(M[p][k]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(M[p], M[k]);
      det = -det;
    }
    det *= M[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (sgn(M[i][k]) == 0) continue;
      Rational f = M[i][k] / M[k][k];
      for (size_t j = k; j < n; ++j) M[i][j] -= f * M[k][j];
    }
  }
  return det;
}

Rational pfaffian(const QMatrix& A) {
  require_square_skew(A);
  int n = static_cast<int>(A.size());
  if (n > 12) throw InputError("exact Pfaffian is limited to dimension 12");
  if (n % 2) return Rational(0);
  std::vector<Rational> memo(std::size_t(1) << n);
  std::vector<char> known(memo.size(), 0);
  auto rec = [&](auto&& self, std::uint32_t mask) -> Rational {
    if (mask == 0) return Rational(1);
    if (known[mask]) return memo[mask];
    int i = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    Rational total(0);
    int pos = 0;
    for (std::uint32_t r = rest; r; r &= r - 1) {
      int j = std::countr_zero(r);
      ++pos;
      if (sgn(A[i][j]) == 0) continue;
      Rational term = A[i][j] * self(self, rest & ~(std::uint32_t(1) << j));
      if (pos % 2) total += term;
      else total -= term;
    }
    known[mask] = 1;
    memo[mask] = total;
    return total;
  };
  Rational pf = rec(rec, n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t(1) << n) - 1));
  if (pf * pf != determinant(A)) throw NumericalError("Pfaffian check Pf^2 = det failed");
  return pf;
}

double pfaffian(const Matrix& A) {
  int n = static_cast<int>(A.rows());
  if (A.cols() != n) throw InputError("matrix must be square");
  if (n % 2) return 0.0;
  std::vector<double> a(A.data(), A.data() + n * n);  // column-major copy, a[i + j n] = A(i, j)
  auto at = [&](int i, int j) -> double& { return a[i + j * n]; };
  double pf = 1.0;
  for (int k = 0; k + 1 < n; k += 2) {
    int p = k + 1;
    double best = std::abs(at(k, k + 1));
    for (int j = k + 2; j < n; ++j)
      if (std::abs(at(k, j)) > best) {
        best = std::abs(at(k, j));
        p = j;
      }
    if (best == 0.0) return 0.0;
    if (p != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(at(k + 1, j), at(p, j));
      for (int j = 0; j < n; ++j) std::swap(at(j, k + 1), at(j, p));
      pf = -pf;
    }
    double piv = at(k, k + 1);
    pf *= piv;
    for (int i = k + 2; i < n; ++i) {
      double f = at(k, i) / piv;
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) at(i, j) -= f * at(k + 1, j);
      for (int j = k; j < n; ++j) at(j, i) -= f * at(j, k + 1);
    }
  }
  return pf;
}

bool is_nondegenerate(const QMatrix& A) { return sgn(pfaffian(A)) != 0; }

bool is_nondegenerate(const Matrix& A, double tol) {
  if (A.rows() % 2) return false;
  double scale = std::max(A.cwiseAbs().maxCoeff(), 1e-300);
  double pf = pfaffian(A / scale);
  return std::abs(pf) > tol;
}

void require_skew(const Matrix& A, const char* what) {
  if (A.rows() != A.cols()) throw InputError(std::string(what) + " must be square");
  if (A.rows() == 0 || A.rows() % 2) throw InputError(std::string(what) + " must have positive even dimension");
  double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  if ((A + A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InputError(std::string(what) + " is not antisymmetric");
}

double complex_structure_defect(const Matrix& J) {
  return (J * J + Matrix::Identity(J.rows(), J.cols())).cwiseAbs().maxCoeff();
}

double taming_margin(const Matrix& A, const Matrix& J) {
  if (A.rows() != J.rows() || A.cols() != J.cols()) throw InputError("dimension mismatch between form and J");
  Matrix S = (A * J - J.transpose() * A) / 2;
  S = (S + S.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<Matrix> es(S, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double norm = ev.cwiseAbs().maxCoeff();
  if (norm == 0.0) return 0.0;
  return ev.minCoeff() / norm;
}

bool tames(const Matrix& A, const Matrix& J, double tol) { return taming_margin(A, J) > tol; }

bool tames(const QMatrix& A, const QMatrix& J) {
  size_t n = A.size();
  if (J.size() != n) throw InputError("dimension mismatch between form and J");
  QMatrix S(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational s(0);
      for (size_t k = 0; k < n; ++k) s += A[i][k] * J[k][j] - J[k][i] * A[k][j];
      S[i][j] = s / 2;
    }
  // leading principal minors via elimination without pivoting
  for (size_t k = 0; k < n; ++k) {
    if (sgn(S[k][k]) <= 0) return false;
    for (size_t i = k + 1; i < n; ++i) {
      Rational f = S[i][k] / S[k][k];
      for (size_t j = k; j < n; ++j) S[i][j] -= f * S[k][j];
    }
  }
  return true;
}

Matrix pencil_endomorphism(const Matrix& A0, const Matrix& A1) {
  require_skew(A0, "omega0");
  require_skew(A1, "omega1");
  if (A0.rows() != A1.rows()) throw InputError("forms have different dimensions");
  if (!is_nondegenerate(A0)) throw InputError("omega0 is degenerate");
  Matrix B = A0.partialPivLu().solve(A1);
  Matrix C = A0 * B;
  double scale = std::max(1.0, C.cwiseAbs().maxCoeff());
  if ((C + C.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw NumericalError("pencil endomorphism is not omega0-symmetric");
  return B;
}

bool is_real_negative(std::complex<double> z) { return z.real() < 0 && std::abs(z.imag()) <= 1e-8 * std::abs(z.real()); }

namespace {

void require_pair(const Matrix& A0, const Matrix& A1) {
  require_skew(A0, "omega0");
  require_skew(A1, "omega1");
  if (A0.rows() != A1.rows()) throw InputError("forms have different dimensions");
  if (!is_nondegenerate(A0)) throw InputError("omega0 is degenerate");
  if (!is_nondegenerate(A1)) throw InputError("omega1 is degenerate");
}

bool spectrum_avoids_negative_axis(const Matrix& M) {
  Eigen::EigenSolver<Matrix> es(M, false);
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (is_real_negative(es.eigenvalues()(i))) return false;
  return true;
}

int sign_of(double x) { return (x > 0) - (x < 0); }

// Looks for a sign change of f on a sampled grid; cells around local minima of |f| are resampled.
template <class F>
PfaffianScan scan(const std::vector<double>& ts, F f, int end_sign) {
  PfaffianScan r;
  std::vector<double> v(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) v[i] = f(ts[i]);
  r.points = static_cast<int>(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) {
    if (v[i] == 0.0 || (i > 0 && sign_of(v[i]) != sign_of(v[i - 1]))) {
      r.degenerate = true;
      r.t = ts[i];
      return r;
    }
  }
  if (end_sign != 0 && end_sign != sign_of(v.back())) {
    r.degenerate = true;
    r.t = std::numeric_limits<double>::infinity();
    return r;
  }
  for (size_t i = 1; i + 1 < ts.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[i - 1]) || std::abs(v[i]) > std::abs(v[i + 1])) continue;
    ++r.refined_cells;
    const int sub = 256;
    for (int j = 1; j < sub; ++j) {
      double t = ts[i - 1] + (ts[i + 1] - ts[i - 1]) * j / sub;
      double x = f(t);
      r.points++;
      if (x == 0.0 || sign_of(x) != sign_of(v[i])) {
        r.degenerate = true;
        r.t = t;
        return r;
      }
    }
  }
  return r;
}

}  // namespace

std::vector<std::complex<double>> pencil_spectrum(const Matrix& A0, const Matrix& A1) {
  require_pair(A0, A1);
  Eigen::EigenSolver<Matrix> es(pencil_endomorphism(A0, A1), false);
  std::vector<std::complex<double>> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

bool segment_nondegenerate(const Matrix& A0, const Matrix& A1) {
  require_pair(A0, A1);
  return spectrum_avoids_negative_axis(A0.partialPivLu().solve(A1));
}

bool ray_nondegenerate(const Matrix& A0, const Matrix& A1) {
  require_pair(A0, A1);
  // omega0 + t omega1 degenerates iff -1/t is an eigenvalue of A0^-1 A1, iff -t is one of A1^-1 A0
  return spectrum_avoids_negative_axis(A1.partialPivLu().solve(A0));
}

bool cotamed_exists(const Matrix& A0, const Matrix& A1) {
  return segment_nondegenerate(A0, A1) && ray_nondegenerate(A0, A1);
}

PfaffianScan scan_segment(const Matrix& A0, const Matrix& A1, int points) {
  require_pair(A0, A1);
  double s = 1.0 / std::max(A0.cwiseAbs().maxCoeff(), A1.cwiseAbs().maxCoeff());
  std::vector<double> ts(points);
  for (int i = 0; i < points; ++i) ts[i] = static_cast<double>(i) / (points - 1);
  return scan(ts, [&](double t) { return pfaffian(Matrix(s * ((1 - t) * A0 + t * A1))); }, 0);
}

PfaffianScan scan_ray(const Matrix& A0, const Matrix& A1, int points) {
  require_pair(A0, A1);
  double s = 1.0 / std::max(A0.cwiseAbs().maxCoeff(), A1.cwiseAbs().maxCoeff());
  std::vector<double> ts(points + 1);
  ts[0] = 0;
  for (int i = 0; i < points; ++i) ts[i + 1] = std::pow(10.0, -6.0 + 12.0 * i / (points - 1));
  // scaled by 1/(1 + t) so large t stays finite
  auto f = [&](double t) { return pfaffian(Matrix(s * (A0 + t * A1) / (1 + t))); };
  return scan(ts, f, sign_of(pfaffian(Matrix(s * A1))));
}

Matrix rotation_block_j(double theta) {
  Eigen::Matrix2d Q;
  Q << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  Matrix J = Matrix::Zero(4, 4);
  J.topRightCorner(2, 2) = -Q;
  J.bottomLeftCorner(2, 2) = Q.transpose();
  return J;
}

Matrix cayley_map(const Matrix& J0, const Matrix& J) {
  if (J0.rows() != J.rows() || J0.cols() != J.cols()) throw InputError("dimension mismatch in Cayley map");
  Matrix S = J + J0;
  Eigen::JacobiSVD<Matrix> svd(S);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * std::max(1.0, sv(0))) throw InputError("J + J0 is singular");
  return S.partialPivLu().solve(J - J0);
}

Matrix cayley_inverse(const Matrix& J0, const Matrix& A) {
  if (J0.rows() != A.rows() || J0.cols() != A.cols()) throw InputError("dimension mismatch in Cayley map");
  double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  // relative to the product of the sizes: J0 may be far from orthogonal
  if ((A * J0 + J0 * A).cwiseAbs().maxCoeff() > 1e-8 * scale * std::max(1.0, J0.cwiseAbs().maxCoeff()))
    throw InputError("A does not anticommute with J0");
  Matrix M = A - Matrix::Identity(A.rows(), A.cols());
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * std::max(1.0, sv(0))) throw InputError("A has eigenvalue 1");
  // (A - I) J0 (A - I)^-1, computed as a right solve
  Matrix X = M * J0;
  return M.transpose().partialPivLu().solve(X.transpose()).transpose();
}

Interpolation interpolate_tamed(const Matrix& J0, const Matrix& J1, const Matrix& J2, double t,
                                const std::vector<Matrix>& forms) {
  for (const auto& F : forms)
    if (!tames(F, J0)) throw InputError("J0 must be tamed by every listed form");
  Matrix A = (1 - t) * cayley_map(J0, J1) + t * cayley_map(J0, J2);
  Interpolation r;
  r.J = cayley_inverse(J0, A);
  for (const auto& F : forms)
    if (tames(F, J1) && tames(F, J2) && !tames(F, r.J)) r.preserved = false;
  return r;
}

Threshold taming_threshold(const Matrix& Omega, const Matrix& D, const Matrix& J) {
  if (!tames(D, J)) throw InputError("D must tame J");
  Threshold r;
  auto ok = [&](double t) {
    double m = taming_margin(Omega + t * D, J);
    r.trajectory.emplace_back(t, m);
    return m > 1e-10;
  };
  if (ok(0.0)) return r;
  double lo = 0, hi = 1;
  while (!ok(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > 1e6) throw NumericalError("no taming threshold below 1e6");
  }
  while (hi - lo > 1e-6 * std::max(1.0, hi)) {
    double mid = (lo + hi) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid;
  }
  for (double f : {1.0, 2.0, 10.0, 1e3})
    if (!ok(f * hi)) throw NumericalError("taming threshold certificate failed at a multiple of T");
  r.T = hi;
  return r;
}

QMatrix remark_omega0() {
  QMatrix A(4, std::vector<Rational>(4, Rational(0)));
  A[0][2] = 1;
  A[2][0] = -1;
  A[1][3] = 1;
  A[3][1] = -1;
  return A;
}

QMatrix remark_omega1() {
  QMatrix A(4, std::vector<Rational>(4, Rational(0)));
  A[1][0] = 1;
  A[0][1] = -1;
  A[2][3] = 1;
  A[3][2] = -1;
  return A;
}

Matrix darboux_basis(const Matrix& A) {
  require_skew(A, "form");
  int n2 = static_cast<int>(A.rows()), n = n2 / 2;
  if (n2 % 2) throw InputError("form is degenerate");
  // a skew matrix is normal, so its real Schur form is block diagonal
  Eigen::RealSchur<Matrix> rs(A);
  const Matrix& T = rs.matrixT();
  const Matrix& Q = rs.matrixU();
  double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  Matrix M(n2, n2);
  for (int i = 0; i < n; ++i) {
    double b = T(2 * i, 2 * i + 1);
    if (std::abs(b) <= 1e-13 * scale || std::abs(T(2 * i + 1, 2 * i) + b) > 1e-8 * scale)
      throw InputError("form is degenerate");
    double s = 1 / std::sqrt(std::abs(b));
    Eigen::VectorXd e = s * Q.col(2 * i), f = s * Q.col(2 * i + 1);
    if (b < 0) std::swap(e, f);
    M.col(i) = e;
    M.col(n + i) = f;
  }
  return M;
}

Matrix random_skew(std::mt19937_64& rng, int n2) {
  std::normal_distribution<double> g(0, 1);
  Matrix A = Matrix::Zero(n2, n2);
  for (int i = 0; i < n2; ++i)
    for (int j = i + 1; j < n2; ++j) {
      A(i, j) = g(rng);
      A(j, i) = -A(i, j);
    }
  return A;
}

Matrix random_symplectic(std::mt19937_64& rng, int n2) {
  int n = n2 / 2;
  std::normal_distribution<double> g(0, 1);
  auto sym = [&] {
    Matrix X(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) X(i, j) = X(j, i) = 0.5 * g(rng);
    return X;
  };
  Matrix U = Matrix::Identity(n2, n2), L = U, D = Matrix::Zero(n2, n2);
  U.topRightCorner(n, n) = sym();
  L.bottomLeftCorner(n, n) = sym();
  // linear part with condition number at most 10
  Matrix G;
  for (;;) {
    G = Matrix::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) G(i, j) += 0.3 * g(rng);
    Eigen::JacobiSVD<Matrix> svd(G);
    if (svd.singularValues()(0) <= 10 * svd.singularValues()(n - 1)) break;
  }
  D.topLeftCorner(n, n) = G;
  D.bottomRightCorner(n, n) = G.inverse().transpose();
  return U * L * D;
}

Matrix random_compatible_j(std::mt19937_64& rng, const Matrix& A) {
  int n2 = static_cast<int>(A.rows());
  Matrix M = darboux_basis(A) * random_symplectic(rng, n2);
  return M * standard_j(n2) * M.inverse();
}

Matrix random_tame_j(std::mt19937_64& rng, const Matrix& A) { return random_tame_j(rng, A, random_compatible_j(rng, A)); }

Matrix random_tame_j(std::mt19937_64& rng, const Matrix& A, const Matrix& Jc) {
  int n2 = static_cast<int>(A.rows());
  std::normal_distribution<double> g(0, 1);
  Matrix Y(n2, n2);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) Y(i, j) = g(rng);
  Matrix X = (Y + Jc * Y * Jc) / 2;
  X /= X.operatorNorm();
  double r = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
  for (int i = 0; i < 60; ++i, r /= 2) {
    Matrix J = cayley_inverse(Jc, r * X);
    if (tames(A, J)) return J;
  }
  return Jc;
}

CounterexampleReport cocompatible_counterexample_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("trials must be positive");
  CounterexampleReport rep;
  rep.trials = trials;
  rep.seed = seed;
  QMatrix q0 = remark_omega0(), q1 = remark_omega1();
  auto cf = make_coframe({"dx1", "dx2", "dx3", "dx4"});
  auto w = wedge(two_form_from_matrix(cf, q0), two_form_from_matrix(cf, q1));
  rep.wedge_zero = sgn(top_coefficient(w)) == 0;
  Matrix A0 = to_matrix(q0), A1 = to_matrix(q1);
  std::vector<double> margins(trials);
  std::vector<char> survived(trials, 0);
  parallel_for(trials, [&](int i) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
    Matrix J = random_compatible_j(rng, A0);
    Matrix S = (A1 * J - J.transpose() * A1) / 2;
    S = (S + S.transpose()) / 2;
    Eigen::SelfAdjointEigenSolver<Matrix> es(S);
    Eigen::VectorXd v = es.eigenvectors().col(0);
    double value = v.dot(A1 * (J * v));
    margins[i] = es.eigenvalues()(0) / std::max(1e-300, es.eigenvalues().cwiseAbs().maxCoeff());
    survived[i] = value > 0;
  });
  rep.worst_margin = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < trials; ++i) {
    rep.survivors += survived[i];
    rep.worst_margin = std::max(rep.worst_margin, margins[i]);
  }
  return rep;
}

PencilSuiteReport pencil_equivalence_suite(int dim, int trials, std::uint64_t seed) {
  if (dim < 2 || dim % 2 || trials < 0) throw InputError("suite needs an even dimension and trials >= 0");
  PencilSuiteReport rep;
  rep.dim = dim;
  rep.trials = trials;
  rep.seed = seed;
  struct Outcome {
    bool cotamable = false, match = true;
    double margin = 1;
  };
  std::vector<Outcome> out(trials);
  parallel_for(trials, [&](int i) {
    std::mt19937_64 rng(seed + 1000000ULL * dim + i);
    Matrix A0, A1;
    do {
      A0 = random_skew(rng, dim);
      A1 = random_skew(rng, dim);
    } while (!is_nondegenerate(A0) || !is_nondegenerate(A1));
    bool seg = segment_nondegenerate(A0, A1), ray = ray_nondegenerate(A0, A1);
    bool spec = true;
    for (const auto& z : pencil_spectrum(A0, A1)) spec = spec && !is_real_negative(z);
    bool s1 = !scan_segment(A0, A1).degenerate, s2 = !scan_ray(A0, A1).degenerate;
    bool built = false;
    if (spec) {
      try {
        auto r = construct_cotamed(A0, A1);
        built = tames(A0, r.J) && tames(A1, r.J);
        out[i].margin = std::min(r.margin0, r.margin1);
      } catch (const NumericalError&) {
        built = false;
      }
    }
    out[i].cotamable = seg;
    out[i].match = seg == ray && seg == spec && seg == s1 && seg == s2 && seg == built;
  });
  rep.worst_margin = 1;
  for (int i = 0; i < trials; ++i) {
    rep.cotamable += out[i].cotamable;
    if (!out[i].match) {
      ++rep.mismatches;
      rep.mismatch_seeds.push_back(seed + 1000000ULL * dim + i);
    }
    if (out[i].cotamable) rep.worst_margin = std::min(rep.worst_margin, out[i].margin);
  }
  return rep;
}

CayleySuiteReport cayley_suite(int trials, std::uint64_t seed) {
  CayleySuiteReport rep;
  rep.trials = trials;
  rep.seed = seed;
  std::vector<double> err(trials);
  std::vector<char> kept(trials);
  parallel_for(trials, [&](int i) {
    std::mt19937_64 rng(seed + i);
    int n = 4 + 2 * (i % 3);
    Matrix O = random_skew(rng, n);
    Matrix Jc = random_compatible_j(rng, O);
    Matrix J1 = random_tame_j(rng, O, Jc), J2 = random_tame_j(rng, O, Jc);
    Matrix A = cayley_map(Jc, J1);
    err[i] = (J1 - cayley_inverse(Jc, A)).cwiseAbs().maxCoeff() / std::max(1.0, J1.cwiseAbs().maxCoeff());
    double t = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    auto r = interpolate_tamed(Jc, J1, J2, t, {O});
    kept[i] = r.preserved && tames(O, r.J);
  });
  for (int i = 0; i < trials; ++i) {
    rep.worst_round_trip = std::max(rep.worst_round_trip, err[i]);
    rep.preserved += kept[i];
  }
  return rep;
}

}  // namespace liouville
