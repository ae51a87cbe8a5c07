#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "liouville/certificate.hpp"
#include "liouville/exterior.hpp"
#include "liouville/liealg.hpp"

namespace liouville {

// Monic integer polynomial, ascending coefficients.
struct Poly {
  std::vector<long> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

struct NumberField {
  Poly f;
  int r = 0, s = 0;
  std::vector<double> real_roots;                  // descending
  std::vector<std::complex<double>> complex_roots;  // Im > 0, Re descending
  int degree() const { return f.degree(); }
};

// Coordinates in the power basis 1, X, ..., X^(n-1) of Z[X]/(f).
using OrderElement = std::vector<Integer>;
using IntMatrix = DenseMatrix<Integer>;

NumberField field_from_poly(const std::vector<long>& coeffs);

OrderElement order_one(const NumberField& k);
OrderElement multiply(const NumberField& k, const OrderElement& x, const OrderElement& y);
OrderElement power(const NumberField& k, const OrderElement& x, int e);
IntMatrix multiplication_matrix(const NumberField& k, const OrderElement& x);  // columns x * X^j
Integer int_determinant(const IntMatrix& M);                                      // Bareiss
Integer norm(const NumberField& k, const OrderElement& x);
OrderElement unit_inverse(const NumberField& k, const OrderElement& u);

// (rho_1(x), ..., rho_r(x), sigma_1(x), ..., sigma_s(x))
std::vector<std::complex<double>> embed(const NumberField& k, const OrderElement& x);
double float_norm(const NumberField& k, const OrderElement& x);
// (ln|rho_i|, ..., ln|sigma_j| + i arg sigma_j, ...)
std::vector<std::complex<double>> log_embedding(const NumberField& k, const OrderElement& x);

struct UnitGroup {
  std::vector<OrderElement> torsion;  // all roots of unity found
  OrderElement torsion_generator;
  int torsion_order = 1;
  std::vector<OrderElement> free;  // finite-index subgroup generators, shortest first
  int rank = 0;
  long candidates = 0;
  long box_bound = 0;
};

// Every integer vector with |coord| <= box_bound, at most 10^6 candidates.
UnitGroup find_units(const NumberField& k, long box_bound);

struct PositiveUnits {
  std::vector<OrderElement> torsion;  // positive roots of unity
  OrderElement torsion_generator;
  int torsion_order = 1;
  std::vector<OrderElement> free;
  std::vector<bool> squared;  // free[i] is the square of a unit generator
};
bool is_positive(const NumberField& k, const OrderElement& u);
PositiveUnits positive_units(const UnitGroup& g, const NumberField& k);

// Fundamental positive unit of Z[sqrt d] from the continued fraction of sqrt d.
OrderElement pell_positive_unit(long d);

struct GammaVector {
  std::vector<double> t;                  // real places
  std::vector<std::complex<double>> w;    // complex places
  OrderElement unit;                      // exp of this vector acts as multiplication by unit
};

struct LatticeData {
  std::vector<GammaVector> basis;
  std::vector<IntMatrix> monodromy;
  int rank = 0;
  double hyperplane_residual = 0;
  double diagonalization_residual = 0;
};

std::vector<double> flatten(const GammaVector& g);  // (t..., Re w1, Im w1, ...)
LatticeData gamma_lattice(const NumberField& k, const PositiveUnits& pu);
IntMatrix monodromy_matrix(const NumberField& k, const OrderElement& u);
// max |V M V^-1 - diag(embeddings)| relative, V the real embedding matrix
double monodromy_diagonalization_residual(const NumberField& k, const OrderElement& u);

struct HyperbolicSl2 {
  double tau = 0;
  int sign = 1;            // A = sign * P diag(e^-tau, e^tau) P^-1
  Eigen::Matrix2d basis;   // columns: e^-tau, e^tau eigenvectors
  double residual = 0;
};
HyperbolicSl2 hyperbolic_sl2_lattice(const IntMatrix& A);

struct LiealgPair {
  Preset preset;
  PositivityCertificate certificate;
  LatticeData lattice;
  PositiveUnits units;
};
// Totally real fields only.
LiealgPair build_liealg_pair(const NumberField& k, long box_bound);

// Largest box with (2B+1)^n <= limit.
long default_box_bound(int n, long limit = 1000000);

}  // namespace liouville
