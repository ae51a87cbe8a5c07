#include "liouville/liealg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>

namespace liouville {

LieAlgebra::LieAlgebra(std::vector<std::string> names, std::vector<Rational> constants)
    : names_(std::move(names)), c_(std::move(constants)) {
  int n = dim();
  if (n < 1 || n > kMaxCoframeDim) throw InputError("Lie algebra dimension must be in 1..16");
  if (static_cast<int>(c_.size()) != n * n * n) throw InputError("structure constant tensor has wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k)) throw InputError("structure constants are not antisymmetric");
  std::vector<std::string> cn;
  for (const auto& s : names_) cn.push_back(s + "*");
  coframe_ = make_coframe(cn);
  if (!jacobi_check(*this)) throw InputError("structure constants violate the Jacobi identity");
  for (int k = 0; k < n; ++k) {
    Form<Rational> f(coframe_, 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) f.add_term((Blade(1) << i) | (Blade(1) << j), -c(i, j, k));
    d_basis_.push_back(std::move(f));
  }
}

int LieAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (names_[i] == name || names_[i] + "*" == name) return i;
  throw InputError("unknown basis element: " + name);
}

LieAlgebra LieAlgebra::permuted(const std::vector<int>& order) const {
  int n = dim();
  if (static_cast<int>(order.size()) != n) throw InputError("permutation has wrong length");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    if (order[a] < 0 || order[a] >= n || inv[order[a]] != -1) throw InputError("not a permutation");
    inv[order[a]] = a;
  }
  std::vector<std::string> nn(n);
  std::vector<Rational> cc(n * n * n);
  for (int a = 0; a < n; ++a) nn[a] = names_[order[a]];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) cc[(a * n + b) * n + inv[k]] = c(order[a], order[b], k);
  return LieAlgebra(nn, cc);
}

Json LieAlgebra::to_json() const {
  int n = dim();
  Json tensor = Json::array();
  for (int i = 0; i < n; ++i) {
    Json mi = Json::array();
    for (int j = 0; j < n; ++j) {
      Json row = Json::array();
      for (int k = 0; k < n; ++k) row.push_back(rational_to_json(c(i, j, k)));
      mi.push_back(row);
    }
    tensor.push_back(mi);
  }
  return Json{{"names", names_}, {"constants", tensor}};
}

LieAlgebra LieAlgebra::from_json(const Json& j) {
  auto names = j.at("names").get<std::vector<std::string>>();
  int n = static_cast<int>(names.size());
  std::vector<Rational> c(n * n * n);
  const Json& t = j.at("constants");
  if (static_cast<int>(t.size()) != n) throw InputError("constant tensor shape mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(t[i].size()) != n) throw InputError("constant tensor shape mismatch");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(t[i][a].size()) != n) throw InputError("constant tensor shape mismatch");
      for (int k = 0; k < n; ++k) c[(i * n + a) * n + k] = rational_from_json(t[i][a][k]);
    }
  }
  return LieAlgebra(names, c);
}

Form<Rational> ce_differential(const LieAlgebra& g, const Form<Rational>& a) {
  if (!same_coframe(g.coframe(), a.coframe())) throw InputError("form does not live on this algebra");
  return leibniz_differential(g.basis_differentials(), a);
}

Form<double> ce_differential(const LieAlgebra& g, const Form<double>& a) {
  if (!same_coframe(g.coframe(), a.coframe())) throw InputError("form does not live on this algebra");
  std::vector<Form<double>> db;
  for (const auto& f : g.basis_differentials()) db.push_back(f.to_double());
  return leibniz_differential(db, a);
}

bool jacobi_check(const LieAlgebra& g) {
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          Rational s(0);
          // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
          for (int l = 0; l < n; ++l)
            s += g.c(j, k, l) * g.c(i, l, m) + g.c(k, i, l) * g.c(j, l, m) + g.c(i, j, l) * g.c(k, l, m);
          if (sgn(s) != 0) return false;
        }
  return true;
}

bool d_squared_check(const LieAlgebra& g) {
  const auto& cf = g.coframe();
  int n = g.dim();
  for (int k = 0; k < n; ++k)
    if (!ce_differential(g, ce_differential(g, Form<Rational>::basis(cf, k))).is_zero()) return false;
  if (n >= 4) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Form<Rational> e = wedge(Form<Rational>::basis(cf, i), Form<Rational>::basis(cf, j));
        if (!ce_differential(g, ce_differential(g, e)).is_zero()) return false;
      }
  }
  return true;
}

LieAlgebra semidirect_sum(const std::vector<DenseMatrix<Rational>>& action, int fiber_dim,
                          std::vector<std::string> base_names, std::vector<std::string> fiber_names) {
  int m = static_cast<int>(action.size());
  int f = fiber_dim;
  if (f < 0) throw InputError("negative fiber dimension");
  for (const auto& A : action) {
    if (static_cast<int>(A.size()) != f) throw InputError("action matrix has wrong size");
    for (const auto& row : A)
      if (static_cast<int>(row.size()) != f) throw InputError("action matrix has wrong size");
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) {
          Rational ab(0), ba(0);
          for (int k = 0; k < f; ++k) {
            ab += action[a][i][k] * action[b][k][j];
            ba += action[b][i][k] * action[a][k][j];
          }
          if (ab != ba) throw InputError("action matrices do not commute");
        }
  if (base_names.empty())
    for (int a = 0; a < m; ++a) base_names.push_back("a" + std::to_string(a + 1));
  if (fiber_names.empty())
    for (int k = 0; k < f; ++k) fiber_names.push_back("v" + std::to_string(k + 1));
  if (static_cast<int>(base_names.size()) != m || static_cast<int>(fiber_names.size()) != f)
    throw InputError("name list length mismatch");
  int n = m + f;
  std::vector<std::string> names = base_names;
  names.insert(names.end(), fiber_names.begin(), fiber_names.end());
  std::vector<Rational> c(n * n * n, Rational(0));
  for (int a = 0; a < m; ++a)
    for (int k = 0; k < f; ++k)
      for (int l = 0; l < f; ++l) {
        const Rational& v = action[a][l][k];
        c[(a * n + (m + k)) * n + (m + l)] = v;
        c[((m + k) * n + a) * n + (m + l)] = -v;
      }
  return LieAlgebra(names, c);
}

std::string orientation_string(const CoframePtr& cf) {
  std::string s;
  for (int i = 0; i < cf->dim(); ++i) {
    if (i) s += "^";
    s += cf->name(i);
  }
  return s;
}

PositivityCertificate contact_check(const LieAlgebra& g, const Form<Rational>& a) {
  if (g.dim() % 2 == 0) throw InputError("contact_check needs an odd-dimensional algebra");
  if (a.degree() != 1) throw InputError("contact_check needs a 1-form");
  if (!same_coframe(g.coframe(), a.coframe())) throw InputError("form does not live on this algebra");
  int m = (g.dim() - 1) / 2;
  Form<Rational> top = wedge(a, power(ce_differential(g, a), m));
  auto cert = certify_value(top_coefficient(top));
  cert.orientation = orientation_string(g.coframe());
  return cert;
}

Rational liouville_polynomial_value(const LieAlgebra& g, const Form<Rational>& ap, const Form<Rational>& am,
                                    const Rational& cp, const Rational& cm) {
  int n = (g.dim() + 1) / 2;
  Form<Rational> gamma = ap * cp - am * cm;
  Form<Rational> omega = ce_differential(g, ap) * cp + ce_differential(g, am) * cm;
  return top_coefficient(wedge(gamma, power(omega, n - 1)));
}

PositivityCertificate liouville_pair_check(const LieAlgebra& g, const Form<Rational>& ap, const Form<Rational>& am) {
  if (g.dim() % 2 == 0) throw InputError("liouville_pair_check needs an odd-dimensional algebra");
  if (ap.degree() != 1 || am.degree() != 1) throw InputError("liouville_pair_check needs 1-forms");
  if (!same_coframe(g.coframe(), ap.coframe()) || !same_coframe(g.coframe(), am.coframe()))
    throw InputError("forms do not live on this algebra");
  int n = (g.dim() + 1) / 2;
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= n; ++k) {
    Rational x(k, n);
    x.canonicalize();
    xs.push_back(x);
    ys.push_back(liouville_polynomial_value(g, ap, am, x, 1 - x));
  }
  auto cert = certify_unit_interval(xs, ys);
  cert.orientation = orientation_string(g.coframe());
  return cert;
}

bool geiges_pair_check(const LieAlgebra& g, const Form<Rational>& ap, const Form<Rational>& am) {
  if (g.dim() % 2 == 0) throw InputError("geiges_pair_check needs an odd-dimensional algebra");
  if (ap.degree() != 1 || am.degree() != 1) throw InputError("geiges_pair_check needs 1-forms");
  int n = (g.dim() - 1) / 2;
  Form<Rational> dp = ce_differential(g, ap), dm = ce_differential(g, am);
  Rational vp = top_coefficient(wedge(ap, power(dp, n)));
  Rational vm = top_coefficient(wedge(am, power(dm, n)));
  if (sgn(vp) <= 0 || vp != -vm) return false;
  for (int k = 0; k < n; ++k) {
    if (!wedge(wedge(ap, power(dp, k)), power(dm, n - k)).is_zero()) return false;
    if (!wedge(wedge(am, power(dm, k)), power(dp, n - k)).is_zero()) return false;
  }
  return true;
}

DenseMatrix<Rational> geiges_matrix(int n) {
  if (n < 1) throw InputError("Geiges matrix needs n >= 1");
  DenseMatrix<Rational> A(n, std::vector<Rational>(n, Rational(0)));
  if (n == 1) {
    A[0][0] = 1;
    return A;
  }
  A[0][1] = -1;
  for (int i = 1; i + 1 < n; ++i) A[i][i + 1] = 1;
  A[n - 1][0] = -1;
  return A;
}

namespace {

DenseMatrix<Rational> mat_mul(const DenseMatrix<Rational>& a, const DenseMatrix<Rational>& b) {
  size_t n = a.size();
  DenseMatrix<Rational> c(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

DenseMatrix<Rational> zero_matrix(int n) { return DenseMatrix<Rational>(n, std::vector<Rational>(n, Rational(0))); }

std::vector<std::string> numbered(const std::string& stem, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

// fiber layout shared by grs and grs1: Theta_1..Theta_r, then X_j, Y_j pairs
struct GrsAction {
  std::vector<DenseMatrix<Rational>> T, U, V;
};

GrsAction grs_generators(int r, int s) {
  int f = r + 2 * s;
  GrsAction g;
  for (int i = 0; i < r; ++i) {
    auto A = zero_matrix(f);
    A[i][i] = 1;
    g.T.push_back(A);
  }
  for (int j = 0; j < s; ++j) {
    int x = r + 2 * j, y = x + 1;
    auto U = zero_matrix(f);
    U[x][x] = 1;
    U[y][y] = 1;
    auto V = zero_matrix(f);
    V[y][x] = 1;   // [V,X] = Y
    V[x][y] = -1;  // [V,Y] = -X
    g.U.push_back(U);
    g.V.push_back(V);
  }
  return g;
}

std::vector<std::string> grs_fiber_names(int r, int s) {
  std::vector<std::string> out = numbered("Θ", 1, r);
  for (int j = 1; j <= s; ++j) {
    out.push_back("X" + std::to_string(j));
    out.push_back("Y" + std::to_string(j));
  }
  return out;
}

DenseMatrix<Rational> lin(const DenseMatrix<Rational>& a, const Rational& ca, const DenseMatrix<Rational>& b,
                          const Rational& cb) {
  auto out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) out[i][j] = ca * a[i][j] + cb * b[i][j];
  return out;
}

Form<Rational> permute_form(const Form<Rational>& f, const CoframePtr& target, const std::vector<int>& order) {
  // order[a] = old index placed at new position a
  std::vector<int> inv(order.size());
  for (size_t a = 0; a < order.size(); ++a) inv[order[a]] = static_cast<int>(a);
  Form<Rational> out(target, f.degree());
  for (const auto& [b, c] : f.terms()) {
    std::vector<int> idx;
    for (int i : blade_indices(b)) idx.push_back(inv[i]);
    out.add_indices(idx, c);
  }
  return out;
}

// Transposes the last two generators when the listed order gives the pair a negative Liouville sign.
void orient_pair(Preset& p) {
  const LieAlgebra& g = p.algebra;
  if (g.dim() < 3) return;
  Rational mid = liouville_polynomial_value(g, p.alpha_plus, p.alpha_minus, Rational(1, 2), Rational(1, 2));
  if (sgn(mid) >= 0) return;
  std::vector<int> order(g.dim());
  for (int i = 0; i < g.dim(); ++i) order[i] = i;
  std::swap(order[g.dim() - 1], order[g.dim() - 2]);
  LieAlgebra h = g.permuted(order);
  Form<Rational> ap = permute_form(p.alpha_plus, h.coframe(), order);
  Form<Rational> am = permute_form(p.alpha_minus, h.coframe(), order);
  p.algebra = h;
  p.alpha_plus = ap;
  p.alpha_minus = am;
  p.note += (p.note.empty() ? "" : "; ") + std::string("last two generators transposed to orient the pair");
}

Preset no_pair(std::string id, LieAlgebra g, std::string note = "") {
  Form<Rational> z(g.coframe(), 1);
  return Preset{std::move(id), g, false, z, z, std::move(note)};
}

Preset with_pair(std::string id, LieAlgebra g, const std::vector<std::pair<std::string, Rational>>& plus,
                 const std::vector<std::pair<std::string, Rational>>& minus, std::string note = "") {
  Form<Rational> ap = left_invariant_form(g, plus), am = left_invariant_form(g, minus);
  Preset p{std::move(id), g, true, ap, am, std::move(note)};
  orient_pair(p);
  return p;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InputError("bad integer in preset id: " + tok);
    } catch (const std::logic_error&) {
      throw InputError("bad integer in preset id: " + tok);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Form<Rational> left_invariant_form(const LieAlgebra& g, const std::vector<std::pair<std::string, Rational>>& terms) {
  Form<Rational> f(g.coframe(), 1);
  for (const auto& [name, c] : terms) f.add_term(Blade(1) << g.index_of(name), c);
  return f;
}

GeigesIsomorphism geiges_isomorphism(int n) {
  if (n < 1) throw InputError("geiges_isomorphism needs n >= 1");
  GeigesIsomorphism out;
  out.n = n;
  out.r = (n % 2 == 1) ? 1 : 2;
  out.s = (n - out.r) / 2;
  int r = out.r, s = out.s;
  auto A = geiges_matrix(n);

  auto Ak = A;
  for (int j = 1; j <= n - 1; ++j) {
    Rational t(0);
    for (int i = 0; i < n; ++i) t += Ak[i][i];
    out.power_traces.push_back(t);
    Ak = mat_mul(Ak, A);
  }
  out.traces_vanish = true;
  for (const auto& t : out.power_traces) out.traces_vanish = out.traces_vanish && sgn(t) == 0;

  // real eigenbasis Q with Q^{-1} A Q = diag(1, (-1), R_theta, ..., R_{s theta})
  Eigen::MatrixXd Ad(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Ad(i, j) = A[i][j].get_d();
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> es(Ad);
  const double theta = 2 * std::numbers::pi / n;
  auto eigvec_near = [&](std::complex<double> target) {
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(es.eigenvalues()(i) - target) < std::abs(es.eigenvalues()(best) - target)) best = i;
    return Eigen::VectorXcd(es.eigenvectors().col(best));
  };
  auto real_vec = [](Eigen::VectorXcd v) {
    Eigen::Index k;
    v.cwiseAbs().maxCoeff(&k);
    v *= std::conj(v(k)) / std::abs(v(k));
    return Eigen::VectorXd(v.real());
  };
  Eigen::MatrixXd Q(n, n);
  int col = 0;
  Q.col(col++) = real_vec(eigvec_near(1.0));
  if (r == 2) Q.col(col++) = real_vec(eigvec_near(-1.0));
  for (int j = 1; j <= s; ++j) {
    Eigen::VectorXcd w = eigvec_near(std::polar(1.0, j * theta));
    Q.col(col++) = w.real();
    Q.col(col++) = -w.imag();
  }
  Eigen::MatrixXd P = Q.inverse();

  // grs(r,s): base T1..Tr, U1,V1,..., fiber Theta1..Theta_r, X1,Y1,...
  Preset target = grs(r, s);
  const LieAlgebra& h = target.algebra;
  int base_h = r + 2 * s;
  int dg = 2 * n - 1, dh = h.dim();
  out.map.assign(dg, std::vector<double>(dh, 0.0));
  for (int k = 1; k <= n - 1; ++k) {
    auto& row = out.map[k - 1];
    row[0] = 1.0;
    if (r == 2) row[1] = (k % 2 == 0) ? 1.0 : -1.0;
    for (int j = 1; j <= s; ++j) {
      row[r + 2 * (j - 1)] = std::cos(j * k * theta);
      row[r + 2 * (j - 1) + 1] = std::sin(j * k * theta);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) out.map[n - 1 + i][base_h + l] = P(l, i);

  // Geiges algebra and pushforward comparison
  Preset src = geiges(n);
  const LieAlgebra& g = src.algebra;
  double res = 0;
  for (int a = 0; a < dg; ++a)
    for (int b = 0; b < dg; ++b) {
      std::vector<double> lhs(dh, 0.0), rhs(dh, 0.0);
      for (int c = 0; c < dg; ++c) {
        double gc = g.c(a, b, c).get_d();
        if (gc == 0) continue;
        for (int m = 0; m < dh; ++m) lhs[m] += gc * out.map[c][m];
      }
      for (int p = 0; p < dh; ++p) {
        double xa = out.map[a][p];
        if (xa == 0) continue;
        for (int q = 0; q < dh; ++q) {
          double xb = out.map[b][q];
          if (xb == 0) continue;
          for (int m = 0; m < dh; ++m) rhs[m] += xa * xb * h.c(p, q, m).get_d();
        }
      }
      for (int m = 0; m < dh; ++m) res = std::max(res, std::abs(lhs[m] - rhs[m]));
    }
  out.residual = res;
  double kres = 0;
  for (int k = 0; k < n - 1; ++k) {
    double t = 0;
    for (int i = 0; i < r; ++i) t += out.map[k][i];
    for (int j = 0; j < s; ++j) t += 2 * out.map[k][r + 2 * j];
    kres = std::max(kres, std::abs(t));
  }
  out.kernel_residual = kres;
  Eigen::MatrixXd M(dg, dh);
  for (int a = 0; a < dg; ++a)
    for (int m = 0; m < dh; ++m) M(a, m) = out.map[a][m];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  lu.setThreshold(1e-10);
  out.image_rank = static_cast<int>(lu.rank());
  return out;
}

Preset aff_r() {
  return no_pair("affr", semidirect_sum({{{Rational(1)}}}, 1, {"T"}, {"Θ"}));
}

Preset aff_c() {
  auto g = grs_generators(0, 1);
  return no_pair("affc", semidirect_sum({g.U[0], g.V[0]}, 2, {"U", "V"}, {"X", "Y"}));
}

Preset grs(int r, int s) {
  if (r < 0 || s < 0 || r + 2 * s < 1) throw InputError("grs needs r, s >= 0 and r + 2s >= 1");
  auto g = grs_generators(r, s);
  std::vector<DenseMatrix<Rational>> act = g.T;
  std::vector<std::string> names = numbered("T", 1, r);
  for (int j = 0; j < s; ++j) {
    act.push_back(g.U[j]);
    act.push_back(g.V[j]);
    names.push_back("U" + std::to_string(j + 1));
    names.push_back("V" + std::to_string(j + 1));
  }
  return no_pair("grs:" + std::to_string(r) + "," + std::to_string(s),
                 semidirect_sum(act, r + 2 * s, names, grs_fiber_names(r, s)));
}

Preset grs1(int r, int s) {
  if (r < 0 || s < 0 || r + 2 * s < 1) throw InputError("grs1 needs r, s >= 0 and r + 2s >= 1");
  auto g = grs_generators(r, s);
  std::string id = "grs1:" + std::to_string(r) + "," + std::to_string(s);
  std::vector<DenseMatrix<Rational>> act;
  std::vector<std::string> names;
  // kernel of t_1 + ... + t_r + 2 (u_1 + ... + u_s)
  if (r >= 1) {
    std::string Tr = "T" + std::to_string(r);
    for (int i = 0; i + 1 < r; ++i) {
      act.push_back(lin(g.T[i], 1, g.T[r - 1], -1));
      names.push_back("T" + std::to_string(i + 1) + "-" + Tr);
    }
    for (int j = 0; j < s; ++j) {
      act.push_back(lin(g.U[j], 1, g.T[r - 1], -2));
      names.push_back("U" + std::to_string(j + 1) + "-2" + Tr);
      act.push_back(g.V[j]);
      names.push_back("V" + std::to_string(j + 1));
    }
  } else {
    std::string Us = "U" + std::to_string(s);
    for (int j = 0; j + 1 < s; ++j) {
      act.push_back(lin(g.U[j], 1, g.U[s - 1], -1));
      names.push_back("U" + std::to_string(j + 1) + "-" + Us);
    }
    for (int j = 0; j < s; ++j) {
      act.push_back(g.V[j]);
      names.push_back("V" + std::to_string(j + 1));
    }
  }
  // distinguished fiber generator Theta_r listed first
  int f = r + 2 * s;
  std::vector<int> forder;
  if (r >= 1) forder.push_back(r - 1);
  for (int k = 0; k < f; ++k)
    if (!(r >= 1 && k == r - 1)) forder.push_back(k);
  auto fnames_old = grs_fiber_names(r, s);
  std::vector<std::string> fnames;
  for (int k : forder) fnames.push_back(fnames_old[k]);
  for (auto& A : act) {
    auto B = zero_matrix(f);
    for (int a = 0; a < f; ++a)
      for (int b = 0; b < f; ++b) B[a][b] = A[forder[a]][forder[b]];
    A = B;
  }
  LieAlgebra alg = semidirect_sum(act, f, names, fnames);
  if (r == 0) return no_pair(id, alg, "no Liouville pair preset for r = 0");
  std::vector<std::pair<std::string, Rational>> plus, minus;
  for (const auto& fn : fnames) {
    bool lead = fn == "Θ" + std::to_string(r);
    plus.emplace_back(fn, Rational(1));
    minus.emplace_back(fn, Rational(lead ? -1 : 1));
  }
  return with_pair(id, alg, plus, minus);
}

Preset geiges(int n) {
  if (n < 1) throw InputError("geiges needs n >= 1");
  auto A = geiges_matrix(n);
  std::vector<DenseMatrix<Rational>> act;
  auto P = A;
  for (int k = 1; k <= n - 1; ++k) {
    act.push_back(P);
    P = mat_mul(P, A);
  }
  LieAlgebra g = semidirect_sum(act, n, numbered("y", 1, n - 1), numbered("x", 1, n));
  std::string id = "geiges:" + std::to_string(n);
  const auto& cf = g.coframe();
  int base = n - 1;
  if (n == 1) {
    return Preset{id, g, true, Form<Rational>::basis(cf, 0), Form<Rational>::basis(cf, 0, Rational(-1)),
                  "pair found by coordinate search"};
  }
  // deterministic search over signed coordinate covectors
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int sp : {1, -1})
        for (int sm : {1, -1}) {
          auto ap = Form<Rational>::basis(cf, base + i, Rational(sp));
          auto am = Form<Rational>::basis(cf, base + j, Rational(sm));
          if (geiges_pair_check(g, ap, am)) return Preset{id, g, true, ap, am, "pair found by coordinate search"};
        }
    }
  return no_pair(id, g, "coordinate search found no Geiges pair");
}

Preset totally_real(int m) {
  if (m < 1) throw InputError("totally_real needs m >= 1");
  int n = m - 1;
  std::vector<DenseMatrix<Rational>> act;
  for (int i = 1; i <= n; ++i) {
    auto A = zero_matrix(n + 1);
    A[0][0] = -1;
    A[i][i] = 1;
    act.push_back(A);
  }
  LieAlgebra g = semidirect_sum(act, n + 1, numbered("T", 1, n), numbered("Θ", 0, n));
  std::vector<std::pair<std::string, Rational>> plus, minus;
  for (int k = 0; k <= n; ++k) {
    std::string nm = "Θ" + std::to_string(k);
    plus.emplace_back(nm, Rational(1));
    minus.emplace_back(nm, Rational(k == 0 ? -1 : 1));
  }
  return with_pair("totreal:" + std::to_string(m), g, plus, minus);
}

Preset sol_from_sl2(const DenseMatrix<Rational>& A) {
  if (A.size() != 2 || A[0].size() != 2 || A[1].size() != 2) throw InputError("sol preset needs a 2x2 matrix");
  for (const auto& row : A)
    for (const auto& x : row)
      if (x.get_den() != 1) throw InputError("sol preset needs an integer matrix");
  if (A[0][0] * A[1][1] - A[0][1] * A[1][0] != 1) throw InputError("sol preset needs det A = 1");
  Rational tr = A[0][0] + A[1][1];
  if (abs(tr) <= 2) throw InputError("sol preset needs a hyperbolic matrix (|trace| > 2)");
  auto act = zero_matrix(2);
  act[0][0] = -1;
  act[1][1] = 1;
  LieAlgebra g = semidirect_sum({act}, 2, {"T"}, {"X", "Y"});
  std::string id = "sol:" + A[0][0].get_str() + "," + A[0][1].get_str() + "," + A[1][0].get_str() + "," +
                   A[1][1].get_str();
  return with_pair(id, g, {{"X", 1}, {"Y", 1}}, {{"X", -1}, {"Y", 1}});
}

Preset preset_from_id(const std::string& id) {
  auto colon = id.find(':');
  std::string head = id.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) args = parse_int_list(id.substr(colon + 1));
  auto need = [&](size_t k) {
    if (args.size() != k) throw InputError("preset '" + head + "' expects " + std::to_string(k) + " arguments");
  };
  if (head == "affr") return aff_r();
  if (head == "affc") return aff_c();
  if (head == "grs") {
    need(2);
    return grs(args[0], args[1]);
  }
  if (head == "grs1") {
    need(2);
    return grs1(args[0], args[1]);
  }
  if (head == "geiges") {
    need(1);
    return geiges(args[0]);
  }
  if (head == "totreal") {
    need(1);
    return totally_real(args[0]);
  }
  if (head == "sol") {
    need(4);
    DenseMatrix<Rational> A{{Rational(args[0]), Rational(args[1])}, {Rational(args[2]), Rational(args[3])}};
    return sol_from_sl2(A);
  }
  throw InputError("unknown preset id: " + id);
}

}  // namespace liouville
