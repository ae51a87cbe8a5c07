#pragma once

#include <string>
#include <vector>

#include "liouville/certificate.hpp"
#include "liouville/exterior.hpp"
#include "liouville/json_io.hpp"

namespace liouville {

// [e_i, e_j] = sum_k c(i,j,k) e_k
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> names, std::vector<Rational> constants);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const Rational& c(int i, int j, int k) const { return c_[(i * dim() + j) * dim() + k]; }
  const std::vector<Rational>& constants() const { return c_; }
  int index_of(const std::string& name) const;

  // Dual coframe, names suffixed with '*'.
  const CoframePtr& coframe() const { return coframe_; }

  // d e^k as exact 2-forms
  const std::vector<Form<Rational>>& basis_differentials() const { return d_basis_; }

  LieAlgebra permuted(const std::vector<int>& order) const;  // new basis = old[order[0]], ...

  Json to_json() const;
  static LieAlgebra from_json(const Json& j);

 private:
  std::vector<std::string> names_;
  std::vector<Rational> c_;
  CoframePtr coframe_;
  std::vector<Form<Rational>> d_basis_;
};

// Chevalley-Eilenberg differential, d e^k = - sum_{i<j} c(i,j,k) e^i ^ e^j, extended as a derivation.
Form<Rational> ce_differential(const LieAlgebra& g, const Form<Rational>& a);
Form<double> ce_differential(const LieAlgebra& g, const Form<double>& a);

// Generic Leibniz extension given d of each coframe covector.
template <class S>
Form<S> leibniz_differential(const std::vector<Form<S>>& d_basis, const Form<S>& a) {
  const CoframePtr& cf = a.coframe();
  Form<S> out(cf, a.degree() + 1);
  if (a.degree() + 1 > cf->dim()) return out;
  for (const auto& [b, c] : a.terms()) {
    auto idx = blade_indices(b);
    for (size_t m = 0; m < idx.size(); ++m) {
      const Form<S>& de = d_basis[idx[m]];
      if (de.is_zero()) continue;
      Form<S> left = Form<S>::scalar(cf, (m % 2) ? S(-c) : c);
      for (size_t q = 0; q < m; ++q) left = wedge(left, Form<S>::basis(cf, idx[q]));
      Form<S> t = wedge(left, de);
      for (size_t q = m + 1; q < idx.size(); ++q) t = wedge(t, Form<S>::basis(cf, idx[q]));
      out += t;
    }
  }
  return out;
}

bool jacobi_check(const LieAlgebra& g);
bool d_squared_check(const LieAlgebra& g);

// Commuting matrices A_i acting on R^fiber_dim: [a_i, v_k] = sum_l A_i[l][k] v_l.
LieAlgebra semidirect_sum(const std::vector<DenseMatrix<Rational>>& action, int fiber_dim,
                          std::vector<std::string> base_names = {}, std::vector<std::string> fiber_names = {});

std::string orientation_string(const CoframePtr& cf);

PositivityCertificate contact_check(const LieAlgebra& g, const Form<Rational>& a);
PositivityCertificate liouville_pair_check(const LieAlgebra& g, const Form<Rational>& ap, const Form<Rational>& am);
// P(C+, C-) at one point, the quantity the pair check interpolates
Rational liouville_polynomial_value(const LieAlgebra& g, const Form<Rational>& ap, const Form<Rational>& am,
                                    const Rational& cp, const Rational& cm);
bool geiges_pair_check(const LieAlgebra& g, const Form<Rational>& ap, const Form<Rational>& am);

struct GeigesIsomorphism {
  int n = 0, r = 0, s = 0;
  std::vector<std::vector<double>> map;  // rows: Geiges basis (y..., x...), columns: grs(r,s) basis
  double residual = 0;                   // max structure-constant mismatch
  double kernel_residual = 0;            // trace functional on the image of the base
  int image_rank = 0;
  std::vector<Rational> power_traces;    // tr(A^j), j = 1..n-1, exact
  bool traces_vanish = false;
};

DenseMatrix<Rational> geiges_matrix(int n);
GeigesIsomorphism geiges_isomorphism(int n);

struct Preset {
  std::string id;
  LieAlgebra algebra;
  bool has_pair = false;
  Form<Rational> alpha_plus, alpha_minus;
  std::string note;
};

Preset aff_r();
Preset aff_c();
Preset grs(int r, int s);
Preset grs1(int r, int s);
Preset geiges(int n);
Preset totally_real(int m);
Preset sol_from_sl2(const DenseMatrix<Rational>& A);
Preset preset_from_id(const std::string& id);

// 1-form from name -> coefficient pairs, names with or without the trailing '*'.
Form<Rational> left_invariant_form(const LieAlgebra& g, const std::vector<std::pair<std::string, Rational>>& terms);

}  // namespace liouville
