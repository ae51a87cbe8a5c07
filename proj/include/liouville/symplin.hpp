#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liouville/exterior.hpp"

namespace liouville {

// Convention everywhere: omega(v, w) = v^T A w, and J acts on column vectors.
inline constexpr const char* kMatrixConvention = "omega(v,w) = v^T A w";

using Matrix = Eigen::MatrixXd;
using QMatrix = DenseMatrix<Rational>;

Matrix to_matrix(const QMatrix& A);
QMatrix to_qmatrix(const Matrix& A);  // exact binary value of each double

Matrix standard_omega(int n2);  // [[0, I], [-I, 0]]
Matrix standard_j(int n2);      // [[0, -I], [I, 0]], compatible with standard_omega

// Exact Pfaffian by expansion over index subsets, dim <= 12. Checks Pf^2 = det.
Rational pfaffian(const QMatrix& A);
Rational determinant(const QMatrix& A);  // Bareiss
// Float Pfaffian by skew elimination with pivoting.
double pfaffian(const Matrix& A);
bool is_nondegenerate(const QMatrix& A);
// |Pf| > tol * ||A||^(n/2)
bool is_nondegenerate(const Matrix& A, double tol = 1e-12);

void require_skew(const Matrix& A, const char* what);

double complex_structure_defect(const Matrix& J);  // max |J^2 + I|
// min eigenvalue of (AJ - J^T A)/2 divided by its norm
double taming_margin(const Matrix& A, const Matrix& J);
bool tames(const Matrix& A, const Matrix& J, double tol = 1e-10);
bool tames(const QMatrix& A, const QMatrix& J);  // leading principal minors

Matrix pencil_endomorphism(const Matrix& A0, const Matrix& A1);

// Real-negative: Re < 0 and |Im| <= 1e-8 |Re|.
bool is_real_negative(std::complex<double> z);
std::vector<std::complex<double>> pencil_spectrum(const Matrix& A0, const Matrix& A1);

bool segment_nondegenerate(const Matrix& A0, const Matrix& A1);  // spectrum of A0^-1 A1
bool ray_nondegenerate(const Matrix& A0, const Matrix& A1);      // spectrum of A1^-1 A0
bool cotamed_exists(const Matrix& A0, const Matrix& A1);

struct PfaffianScan {
  bool degenerate = false;
  double t = 0;  // first parameter where the sign flips
  int points = 0;
  int refined_cells = 0;
};
// Sign of Pf((1-t) A0 + t A1) on an even grid of [0, 1], refined near local minima of |Pf|.
PfaffianScan scan_segment(const Matrix& A0, const Matrix& A1, int points = 10000);
// Sign of Pf(A0 + t A1) on t = 0 and a log grid of [1e-6, 1e6], plus the sign of Pf(A1).
PfaffianScan scan_ray(const Matrix& A0, const Matrix& A1, int points = 10000);

struct PencilBlock {
  enum class Kind { real, complex } kind = Kind::real;
  double lambda = 0;    // real blocks
  double mu = 0, nu = 0;  // complex blocks, nu > 0
  int chain = 1;        // k + 1
  int offset = 0;
  int size = 0;         // 2 chain (real) or 4 chain (complex)
};

struct PencilBlocks {
  std::vector<PencilBlock> blocks;
  Matrix P;  // columns: block bases in order, each as (v half, w half)
  double eps = 0;
  double residual0 = 0;  // max |P^T A0 P - standard blocks|
  double residual1 = 0;  // max |P^T A1 P - model|
  bool experimental = false;  // some chain has length > 1
  int attempts = 0;
  double cond = 0;  // condition number of P

  Matrix model0() const;
  Matrix model1() const;
};

PencilBlocks simultaneous_reduce(const Matrix& A0, const Matrix& A1, double eps = 1e-3);

struct CotameResult {
  Matrix J;
  PencilBlocks blocks;
  double margin0 = 0, margin1 = 0;
  double defect = 0;
  double eps = 0;
  int attempts = 0;
};

CotameResult construct_cotamed(const Matrix& A0, const Matrix& A1);

// J_phi on the 4x4 block in the basis (v+, v-, w+, w-): [[0, -Q], [Q^-1, 0]] with Q the rotation by theta.
Matrix rotation_block_j(double theta);

Matrix cayley_map(const Matrix& J0, const Matrix& J);
Matrix cayley_inverse(const Matrix& J0, const Matrix& A);

struct Interpolation {
  Matrix J;
  bool preserved = true;  // every listed form taming J1 and J2 also tames J
};
Interpolation interpolate_tamed(const Matrix& J0, const Matrix& J1, const Matrix& J2, double t,
                                const std::vector<Matrix>& forms);

struct Threshold {
  double T = 0;
  std::vector<std::pair<double, double>> trajectory;  // (t, taming margin of Omega + t D)
};
Threshold taming_threshold(const Matrix& Omega, const Matrix& D, const Matrix& J);

// The four-dimensional pair dx1^dx3 + dx2^dx4 and dx2^dx1 + dx3^dx4.
QMatrix remark_omega0();
QMatrix remark_omega1();

struct CounterexampleReport {
  bool wedge_zero = false;
  int trials = 0;
  int survivors = 0;
  double worst_margin = 0;  // largest min eigenvalue of the omega1 symmetric part seen
  std::uint64_t seed = 0;
};
CounterexampleReport cocompatible_counterexample_suite(int trials, std::uint64_t seed = 0);

// Random pairs with seeds seed + 1000000 dim + i: both decisions, both scans, the spectrum and the construction.
struct PencilSuiteReport {
  int dim = 0, trials = 0;
  int cotamable = 0;  // pairs with a nondegenerate segment
  int mismatches = 0;
  double worst_margin = 0;  // smallest taming margin among constructed structures
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> mismatch_seeds;
};
PencilSuiteReport pencil_equivalence_suite(int dim, int trials, std::uint64_t seed = 0);

// Random tame structures: Cayley round trip, and interpolation at t in (0, 1).
struct CayleySuiteReport {
  int trials = 0;
  double worst_round_trip = 0;  // relative
  int preserved = 0;
  std::uint64_t seed = 0;
};
CayleySuiteReport cayley_suite(int trials, std::uint64_t seed = 0);

// Columns e_1..e_n, f_1..f_n with M^T A M = standard_omega.
Matrix darboux_basis(const Matrix& A);

Matrix random_skew(std::mt19937_64& rng, int n2);
Matrix random_symplectic(std::mt19937_64& rng, int n2);  // preserves standard_omega
Matrix random_compatible_j(std::mt19937_64& rng, const Matrix& A);
// Cayley perturbation of a random compatible structure, shrunk until A tames it.
Matrix random_tame_j(std::mt19937_64& rng, const Matrix& A);
Matrix random_tame_j(std::mt19937_64& rng, const Matrix& A, const Matrix& Jc);  // around a given compatible Jc

}  // namespace liouville
