#include "liouville/formfam.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace liouville {

namespace {
std::atomic<int> g_threads{0};
constexpr double kPi = std::numbers::pi;
}  // namespace

void set_worker_threads(int n) { g_threads = std::max(0, n); }

int worker_threads() {
  int n = g_threads.load();
  if (n > 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int n, const std::function<void(int)>& body) {
  int w = std::min(worker_threads(), n);
  if (w <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  for (int t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < n && !failed; i += w) body(i);
      } catch (...) {
        if (!failed.exchange(true)) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

// ---- frames and parameter forms ----

FramePtr make_frame(const std::vector<std::string>& leading,
                    const std::vector<std::pair<std::string, std::string>>& params, const LieAlgebra& g) {
  auto fr = std::make_shared<FrameContext>();
  std::vector<std::string> names = leading;
  for (const auto& nm : g.coframe()->names()) names.push_back(nm);
  fr->coframe = make_coframe(names);
  fr->algebra_offset = static_cast<int>(leading.size());
  if (params.size() > 2) throw InputError("at most two parameters");
  for (const auto& [pname, cov] : params) {
    int idx = fr->coframe->index_of(cov);
    if (idx >= fr->algebra_offset) throw InputError("parameter covector must be a leading coordinate");
    fr->param_index.push_back(idx);
    fr->param_names.push_back(pname);
  }
  for (int i = 0; i < fr->algebra_offset; ++i) fr->d_basis.emplace_back(fr->coframe, 2);
  FramePtr tmp = fr;
  for (const auto& de : g.basis_differentials()) fr->d_basis.push_back(embed(tmp, de));
  return fr;
}

namespace {
template <class S>
Form<double> shift_into(const CoframePtr& cf, int offset, const Form<S>& a) {
  Form<double> out(cf, a.degree());
  for (const auto& [b, c] : a.terms()) out.add_term(b << offset, Scalar<S>::to_double(c));
  return out;
}
}  // namespace

Form<double> embed(const FramePtr& fr, const Form<Rational>& a) {
  if (a.dim() + fr->algebra_offset != fr->coframe->dim()) throw InputError("form does not fit the frame");
  return shift_into(fr->coframe, fr->algebra_offset, a);
}

Form<double> embed(const FramePtr& fr, const Form<double>& a) {
  if (a.dim() + fr->algebra_offset != fr->coframe->dim()) throw InputError("form does not fit the frame");
  return shift_into(fr->coframe, fr->algebra_offset, a);
}

void ParamForm::add_term(Blade b, const ProfileFn& c) {
  if (blade_degree(b) != degree_) throw InputError("blade degree mismatch");
  if (c.is_constant() && c.constant_value() == 0.0) return;
  auto it = terms_.find(b);
  if (it == terms_.end())
    terms_.emplace(b, c);
  else
    it->second = it->second + c;
}

void ParamForm::add(const ProfileFn& c, const Form<double>& a) {
  if (!same_coframe(a.coframe(), fr_->coframe)) throw InputError("coframe mismatch in parameter form");
  if (a.degree() != degree_) throw InputError("degree mismatch in parameter form");
  for (const auto& [b, v] : a.terms()) add_term(b, v * c);
}

Form<double> ParamForm::at(const Params& p) const {
  Form<double> out(fr_->coframe, degree_);
  for (const auto& [b, c] : terms_) out.add_term(b, c(p));
  return out;
}

ParamForm operator+(ParamForm a, const ParamForm& b) {
  if (a.fr_ != b.fr_ || a.degree_ != b.degree_) throw InputError("parameter form mismatch");
  for (const auto& [bl, c] : b.terms_) a.add_term(bl, c);
  return a;
}

ParamForm d_param(const ParamForm& a) {
  const auto& fr = a.frame();
  ParamForm out(fr, a.degree() + 1);
  if (a.degree() + 1 > fr->coframe->dim()) return out;
  for (const auto& [b, c] : a.terms()) {
    for (size_t slot = 0; slot < fr->param_index.size(); ++slot) {
      ProfileFn dc = c.derivative(static_cast<int>(slot));
      if (dc.is_constant() && dc.constant_value() == 0.0) continue;
      Blade e = Blade(1) << fr->param_index[slot];
      int sg = wedge_sign(e, b);
      if (sg == 0) continue;
      out.add_term(e | b, sg > 0 ? dc : -dc);
    }
    Form<double> unit(fr->coframe, a.degree());
    unit.add_term(b, 1.0);
    Form<double> db = leibniz_differential(fr->d_basis, unit);
    out.add(c, db);
  }
  return out;
}

// ---- grids ----

namespace {
std::vector<double> axis(double lo, double hi, int n, bool crit) {
  std::vector<double> v;
  if (n <= 1 || hi == lo) {
    v.push_back(lo);
    if (hi != lo) v.push_back(hi);
  } else {
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  }
  if (crit) {
    long j0 = static_cast<long>(std::ceil(lo / (kPi / 2))), j1 = static_cast<long>(std::floor(hi / (kPi / 2)));
    for (long j = j0; j <= j1; ++j) v.push_back(j * kPi / 2);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}
}  // namespace

std::vector<Params> grid_points(const GridSpec& g) {
  if (g.lo.empty() || g.lo.size() != g.hi.size() || g.lo.size() > 2) throw InputError("grid needs 1 or 2 axes");
  if (g.points < 1) throw InputError("empty grid");
  std::vector<Params> out;
  auto a0 = axis(g.lo[0], g.hi[0], g.points, g.critical_angles);
  if (g.lo.size() == 1) {
    for (double x : a0) out.push_back({x, 0});
    return out;
  }
  auto a1 = axis(g.lo[1], g.hi[1], g.points, g.critical_angles);
  for (double x : a0)
    for (double y : a1) out.push_back({x, y});
  return out;
}

double contact_top(const ParamForm& lambda, const ParamForm& dlambda, const Params& p) {
  int dim = lambda.frame()->coframe->dim();
  return top_coefficient(wedge(lambda.at(p), power(dlambda.at(p), (dim - 1) / 2)));
}

namespace {
GridResult scan(const std::vector<Params>& pts, const std::function<double(const Params&)>& value,
                const CoframePtr& cf) {
  std::vector<double> vals(pts.size());
  parallel_for(static_cast<int>(pts.size()), [&](int i) { vals[i] = value(pts[i]); });
  GridResult r;
  r.points = static_cast<int>(pts.size());
  r.orientation = orientation_string(cf);
  r.min_value = std::numeric_limits<double>::infinity();
  r.max_value = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] < r.min_value) {
      r.min_value = vals[i];
      r.argmin = pts[i];
    }
    r.max_value = std::max(r.max_value, vals[i]);
  }
  r.pass = r.min_value > 0;
  return r;
}
}  // namespace

GridResult contact_grid_check(const ParamForm& lambda, const GridSpec& grid) {
  int dim = lambda.frame()->coframe->dim();
  if (dim % 2 == 0) throw InputError("contact_grid_check needs an odd total dimension");
  if (lambda.degree() != 1) throw InputError("contact_grid_check needs a 1-form");
  ParamForm dl = d_param(lambda);
  return scan(grid_points(grid), [&](const Params& p) { return contact_top(lambda, dl, p); }, lambda.frame()->coframe);
}

GridResult liouville_grid_check(const ParamForm& beta, const GridSpec& grid) {
  int dim = beta.frame()->coframe->dim();
  if (dim % 2 != 0) throw InputError("liouville_grid_check needs an even total dimension");
  if (beta.degree() != 1) throw InputError("liouville_grid_check needs a 1-form");
  ParamForm db = d_param(beta);
  return scan(grid_points(grid), [&](const Params& p) { return top_coefficient(power(db.at(p), dim / 2)); },
              beta.frame()->coframe);
}

// ---- profile triples ----

FramePtr st_frame(const LieAlgebra& g) { return make_frame({"ds", "dt"}, {{"s", "ds"}}, g); }

void ProfileTriple::validate(int grid_n) const {
  Params lo{s0, 0}, hi{s1, 0};
  require_derivatives(f, 1, lo, hi);
  require_derivatives(g, 1, lo, hi);
  require_derivatives(h, 1, lo, hi);
  GridSpec gs{{s0}, {s1}, grid_n, true};
  for (const auto& p : grid_points(gs)) {
    double fv = f(p), gv = g(p);
    if (fv < -1e-14 || gv < -1e-14) throw InputError("profile triple needs f, g >= 0");
    if (std::max(fv, gv) <= 1e-14) throw InputError("profile triple has f = g = 0");
  }
}

ParamForm ProfileTriple::to_form() const {
  if (!pair.has_pair) throw InputError("preset has no pair");
  auto fr = st_frame(pair.algebra);
  ParamForm lam(fr, 1);
  lam.add(f, embed(fr, pair.alpha_plus));
  lam.add(g, embed(fr, pair.alpha_minus));
  lam.add(h, Form<double>::basis(fr->coframe, 1));
  return lam;
}

ProfileTriple gt_form(const Preset& pair, int k) {
  if (k < 1) throw InputError("gt_form needs k >= 1");
  if (!pair.has_pair) throw InputError("preset has no pair");
  ProfileFn s = ProfileFn::var(0);
  return ProfileTriple{0.5 + 0.5 * ProfileFn::cos(s), 0.5 - 0.5 * ProfileFn::cos(s), ProfileFn::sin(s), pair, 0,
                       2 * kPi * k};
}

ParamForm t3_form(int k) {
  if (k < 1) throw InputError("t3_form needs k >= 1");
  Preset p = grs1(1, 0);
  auto fr = st_frame(p.algebra);
  ParamForm lam(fr, 1);
  lam.add(ProfileFn::cos(ProfileFn::var(0, k)), embed(fr, p.alpha_plus));
  lam.add(ProfileFn::sin(ProfileFn::var(0, k)), Form<double>::basis(fr->coframe, 1));
  return lam;
}

// ---- Reeb field ----

ReebResult reeb_field(const ProfileTriple& t, double s, double tol) {
  const LieAlgebra& g = t.pair.algebra;
  int d = g.dim();
  Params p{s, 0};
  double f = t.f(p), gg = t.g(p), h = t.h(p);
  double fp = t.f.derivative()(p), gp = t.g.derivative()(p), hp = t.h.derivative()(p);
  if (std::abs(h) < 1e-12 && std::abs(hp) < 1e-12) throw InputError("invalid triple: h and h' both vanish");

  std::vector<double> ap(d, 0.0), am(d, 0.0);
  for (const auto& [b, c] : t.pair.alpha_plus.terms()) ap[std::countr_zero(b)] = c.get_d();
  for (const auto& [b, c] : t.pair.alpha_minus.terms()) am[std::countr_zero(b)] = c.get_d();
  auto Wp = matrix_from_two_form(ce_differential(g, t.pair.alpha_plus.to_double()));
  auto Wm = matrix_from_two_form(ce_differential(g, t.pair.alpha_minus.to_double()));

  Eigen::MatrixXd M(d + 1, d);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d + 1);
  for (int j = 0; j < d; ++j) M(0, j) = (h * fp - hp * f) * ap[j] + (h * gp - hp * gg) * am[j];
  rhs(0) = -hp;
  // i_X (f d a+ + g d a-) evaluated on e_j is sum_i X_i W_ij
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) M(1 + j, i) = f * Wp[i][j] + gg * Wm[i][j];
  Eigen::VectorXd X = M.completeOrthogonalDecomposition().solve(rhs);

  ReebResult r;
  r.lsq_residual = (M * X - rhs).lpNorm<Eigen::Infinity>();
  if (r.lsq_residual > tol)
    throw NumericalError("Reeb system inconsistent at s = " + std::to_string(s) + " (residual " +
                         std::to_string(r.lsq_residual) + "); the form is not contact there");
  r.X.assign(X.data(), X.data() + d);
  double apX = 0, amX = 0;
  for (int j = 0; j < d; ++j) {
    apX += ap[j] * X(j);
    amX += am[j] * X(j);
  }
  double uh = std::abs(h) > 1e-12 ? (1 - f * apX - gg * amX) / h : std::numeric_limits<double>::quiet_NaN();
  double uhp = std::abs(hp) > 1e-12 ? -(fp * apX + gp * amX) / hp : std::numeric_limits<double>::quiet_NaN();
  if (std::abs(h) > 1e-8) {
    r.u = uh;
    r.u_other = uhp;
    r.branch = "h";
  } else {
    r.u = uhp;
    r.u_other = uh;
    r.branch = "h'";
  }

  ParamForm lam = t.to_form();
  ParamForm dl = d_param(lam);
  const auto& cf = lam.frame()->coframe;
  std::vector<double> R(cf->dim(), 0.0);
  R[1] = r.u;
  for (int j = 0; j < d; ++j) R[2 + j] = X(j);
  r.r1 = std::abs(evaluate(lam.at(p), R) - 1.0);
  r.r2 = interior_product(VectorElem<double>(cf, R), dl.at(p)).max_abs();
  r.ok = r.r1 <= tol && r.r2 <= tol;
  return r;
}

// ---- cutoff Liouville forms ----

namespace {
FramePtr s_frame(const LieAlgebra& g) { return make_frame({"ds"}, {{"s", "ds"}}, g); }
}  // namespace

ParamForm cutoff_liouville(const Preset& pair, double c, Smoothstep psi) {
  if (!pair.has_pair) throw InputError("preset has no pair");
  auto fr = s_frame(pair.algebra);
  ParamForm beta(fr, 1);
  auto up = ProfileFn::smoothstep(psi, ProfileFn::var(0, 1, c));
  auto down = ProfileFn::smoothstep(psi, ProfileFn::var(0, -1, c));
  beta.add(up * ProfileFn::exp(ProfileFn::var(0)), embed(fr, pair.alpha_plus));
  beta.add(down * ProfileFn::exp(ProfileFn::var(0, -1)), embed(fr, pair.alpha_minus));
  return beta;
}

GridResult cutoff_grid_check(const Preset& pair, double c, Smoothstep psi, int grid_n) {
  // odd count keeps s = 0 on the grid
  GridSpec gs{{-c - 1}, {c + 1}, grid_n % 2 ? grid_n : grid_n + 1, false};
  return liouville_grid_check(cutoff_liouville(pair, c, psi), gs);
}

CutoffResult min_c_search(const Preset& pair, Smoothstep psi, int grid_n, double cap) {
  CutoffResult out;
  // positivity has to clear roundoff on the scale of the contact volumes of the pair
  double scale = std::abs(contact_check(pair.algebra, pair.alpha_plus).exact_value.get_d()) +
                 std::abs(contact_check(pair.algebra, pair.alpha_minus).exact_value.get_d());
  double floor = kCutoffMargin * scale;
  auto clear = [floor](const GridResult& r) { return r.pass && r.min_value > floor; };
  auto top = cutoff_grid_check(pair, cap, psi, grid_n);
  if (!clear(top)) {
    out.at_c = top;
    out.c = cap;
    out.violating_s.push_back(top.argmin[0]);
    return out;
  }
  double lo = 0, hi = cap;
  auto zero = cutoff_grid_check(pair, 0, psi, grid_n);
  if (clear(zero)) {
    hi = 0;
  } else {
    while (hi - lo > 1e-3) {
      double mid = 0.5 * (lo + hi);
      if (clear(cutoff_grid_check(pair, mid, psi, grid_n)))
        hi = mid;
      else
        lo = mid;
    }
  }
  out.c = hi;
  out.at_c = cutoff_grid_check(pair, hi, psi, grid_n);
  out.refined = cutoff_grid_check(pair, hi, psi, 4 * grid_n);
  out.found = clear(out.at_c) && clear(out.refined);
  if (!out.found) out.violating_s.push_back(out.refined.argmin[0]);
  return out;
}

// ---- Lutz-Mori family ----

LutzResult lutz_family_check(const Preset& pair, int k, double tau, Smoothstep psi_kind, int grid_n) {
  if (!pair.has_pair) throw InputError("preset has no pair");
  if (k < 0) throw InputError("lutz_family_check needs k >= 0");
  if (tau < 0 || tau > 1) throw InputError("tau must lie in [0,1]");
  auto fr = st_frame(pair.algebra);
  ProfileFn phi = phi_k(k, psi_kind), psi = lutz_psi(psi_kind);
  ParamForm lk(fr, 1);
  lk.add(0.5 + 0.5 * ProfileFn::cos(phi), embed(fr, pair.alpha_plus));
  lk.add(0.5 - 0.5 * ProfileFn::cos(phi), embed(fr, pair.alpha_minus));
  lk.add(ProfileFn::sin(phi), Form<double>::basis(fr->coframe, 1));
  ProfileFn scale = 1.0 - tau * psi;
  ParamForm lkt(fr, 1);
  for (const auto& [b, c] : lk.terms()) lkt.add_term(b, scale * c);
  lkt.add(tau * psi, Form<double>::basis(fr->coframe, 0));
  require_derivatives(phi, 1, {-1, 0}, {1, 0});
  require_derivatives(psi, 1, {-1, 0}, {1, 0});

  ParamForm dk = d_param(lk), dkt = d_param(lkt);
  int n = (fr->coframe->dim() + 1) / 2;
  auto pts = grid_points(GridSpec{{-1.0}, {1.0}, grid_n, false});
  std::vector<double> err(pts.size()), lhsv(pts.size());
  parallel_for(static_cast<int>(pts.size()), [&](int i) {
    const auto& p = pts[i];
    double base = contact_top(lk, dk, p);
    double lhs = contact_top(lkt, dkt, p);
    double rhs = std::pow(scale(p), n) * base;
    err[i] = std::abs(lhs - rhs) / std::abs(base);
    lhsv[i] = lhs;
  });
  LutzResult r;
  r.points = static_cast<int>(pts.size());
  r.min_contact = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i) {
    if (err[i] > r.max_rel_error) {
      r.max_rel_error = err[i];
      r.worst = pts[i];
    }
    r.min_contact = std::min(r.min_contact, lhsv[i]);
  }
  return r;
}

// ---- the space of 2-forms on S^1 x M ----

XiResult xi_nondegenerate(const Preset& pair, double cp, double cm, double B, double delta) {
  if (!pair.has_pair) throw InputError("preset has no pair");
  if (cp < 0 || cm < 0) throw InputError("C+ and C- must be nonnegative");
  if (cp == 0 && cm == 0) throw InputError("C+ and C- must not both vanish");
  if (B < 0) throw InputError("B must be nonnegative");
  const LieAlgebra& g = pair.algebra;
  auto fr = make_frame({"dt"}, {}, g);
  Form<double> ap = embed(fr, pair.alpha_plus), am = embed(fr, pair.alpha_minus);
  Form<double> dap = embed(fr, ce_differential(g, pair.alpha_plus));
  Form<double> dam = embed(fr, ce_differential(g, pair.alpha_minus));
  Form<double> dt = Form<double>::basis(fr->coframe, 0);
  Form<double> gamma = ap * cp - am * cm;
  Form<double> Om = dap * cp + dam * cm;
  Form<double> omega = Om + wedge(ap, am) * delta + wedge(dt, gamma) * B;
  int m = (g.dim() + 1) / 2;
  XiResult r;
  r.lhs = top_coefficient(power(omega, m));
  r.rhs = m * B * top_coefficient(wedge(wedge(dt, gamma), power(Om, m - 1)));
  double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
  r.rel_error = scale == 0 ? 0 : std::abs(r.lhs - r.rhs) / scale;
  r.nonzero = std::abs(r.lhs) > 0;
  return r;
}

// ---- linear models of contact products ----

LinearModelResult linear_model_pair_check(const LieAlgebra& g, const Form<Rational>& alpha, double mu, double nu,
                                          int grid_n, double box) {
  if (!(nu > mu)) throw InputError("linear model needs nu > mu");
  auto cc = contact_check(g, alpha);
  if (cc.verdict != Verdict::positive) throw InputError("base form is not a positive contact form");
  int q = (g.dim() - 1) / 2;
  auto fr = make_frame({"ds", "dθ", "dt"}, {{"s", "ds"}, {"t", "dt"}}, g);
  ProfileFn es = ProfileFn::exp(ProfileFn::var(0)), ems = ProfileFn::exp(ProfileFn::var(0, -1));
  ProfileFn a = es + ems, b = es - ems;
  ParamForm B(fr, 1);
  B.add(a * ProfileFn::exp(ProfileFn::var(1, nu)), embed(fr, alpha));
  B.add(b * ProfileFn::exp(ProfileFn::var(1, mu)), Form<double>::basis(fr->coframe, 1));
  ParamForm dB = d_param(B);
  double cvol = cc.exact_value.get_d();

  auto pts = grid_points(GridSpec{{-box, -box}, {box, box}, grid_n, false});
  std::vector<double> vals(pts.size()), errs(pts.size());
  parallel_for(static_cast<int>(pts.size()), [&](int i) {
    const auto& p = pts[i];
    double v = top_coefficient(power(dB.at(p), q + 2));
    double av = a(p), bv = b(p);
    double f = (q + 1) * (q + 2) * std::pow(av, q) * std::exp((mu + (q + 1) * nu) * p[1]);
    double closed = f * (nu * av * av - mu * bv * bv) * cvol;
    vals[i] = v;
    errs[i] = std::abs(v - closed) / std::abs(closed);
  });
  LinearModelResult r;
  r.contact_volume = cvol;
  r.grid.points = static_cast<int>(pts.size());
  r.grid.orientation = orientation_string(fr->coframe);
  r.grid.min_value = std::numeric_limits<double>::infinity();
  r.grid.max_value = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i) {
    if (vals[i] < r.grid.min_value) {
      r.grid.min_value = vals[i];
      r.grid.argmin = pts[i];
    }
    r.grid.max_value = std::max(r.grid.max_value, vals[i]);
    r.max_factor_error = std::max(r.max_factor_error, errs[i]);
  }
  r.grid.pass = r.grid.min_value > 0;
  r.pass = r.grid.pass && r.max_factor_error <= 1e-8;
  return r;
}

// ---- weak domination along a ray ----

RayCheck weak_domination_ray_check(const LieAlgebra& g, const Form<Rational>& alpha, const Form<Rational>& Omega) {
  if (g.dim() % 2 == 0) throw InputError("ray check needs an odd-dimensional algebra");
  if (alpha.degree() != 1 || Omega.degree() != 2) throw InputError("ray check needs a 1-form and a 2-form");
  if (!same_coframe(alpha.coframe(), g.coframe()) || !same_coframe(Omega.coframe(), g.coframe()))
    throw InputError("forms do not live on this algebra");
  int m = (g.dim() - 1) / 2;
  Form<Rational> da = ce_differential(g, alpha);
  std::vector<Rational> nodes, values;
  for (int k = 0; k <= m; ++k) {
    nodes.emplace_back(k);
    values.push_back(top_coefficient(wedge(alpha, power(Omega + da * Rational(k), m))));
  }
  RayCheck r;
  r.certificate = certify_half_line(nodes, values);
  r.certificate.orientation = orientation_string(g.coframe());
  r.symplectic_half = sgn(values[0]) > 0;
  // strip the root at tau = 0 and certify the rest on [0, inf)
  RationalPoly p = interpolate(nodes, values);
  if (p.is_zero()) return r;
  auto c = p.coeffs();
  size_t v = 0;
  while (v < c.size() && sgn(c[v]) == 0) ++v;
  RationalPoly stripped(std::vector<Rational>(c.begin() + v, c.end()));
  std::vector<Rational> sv;
  for (const auto& x : nodes) sv.push_back(stripped.eval(x));
  r.ray_half = certify_half_line(nodes, sv).verdict == Verdict::positive;
  return r;
}

RayCheck weak_domination_ray_check(const Form<double>& alpha, const Form<double>& dalpha, const Form<double>& Omega,
                                   int orientation) {
  int dim = alpha.dim();
  if (dim % 2 == 0) throw InputError("ray check needs odd dimension");
  if (alpha.degree() != 1 || dalpha.degree() != 2 || Omega.degree() != 2)
    throw InputError("ray check needs a 1-form and two 2-forms");
  int m = (dim - 1) / 2;
  double sign = orientation < 0 ? -1.0 : 1.0;
  auto value = [&](double tau) { return sign * top_coefficient(wedge(alpha, power(Omega + dalpha * tau, m))); };
  double lead = sign * top_coefficient(wedge(alpha, power(dalpha, m)));
  RayCheck r;
  auto& c = r.certificate;
  c.kind = "grid";
  c.domain = "[0,inf)";
  c.orientation = orientation_string(alpha.coframe());
  if (sign < 0) c.orientation = "-" + c.orientation;
  double v0 = value(0.0);
  double vmin = v0, amin = 0;
  bool ray = lead > 0;
  const int N = 2048;
  for (int i = 1; i <= N; ++i) {
    double tau = 1e-6 * std::pow(1e9, static_cast<double>(i) / N);  // 1e-6 .. 1e3
    double v = value(tau);
    if (v < vmin) {
      vmin = v;
      amin = tau;
    }
    if (!(v > 0)) ray = false;
  }
  c.grid_min = vmin;
  c.grid_argmin = amin;
  c.grid_points = N + 1;
  r.symplectic_half = v0 > 0;
  r.ray_half = ray;
  c.verdict = (r.symplectic_half && r.ray_half) ? Verdict::positive
                                                 : (vmin < 0 && lead < 0 ? Verdict::negative : Verdict::indefinite);
  return r;
}

// ---- Sol weak filling model ----

namespace {

template <class S>
Form<S> restrict_drop(const Form<S>& a, int drop, const CoframePtr& target) {
  Form<S> out(target, a.degree());
  Blade lowmask = (Blade(1) << drop) - 1u;
  for (const auto& [b, c] : a.terms()) {
    if (b & (Blade(1) << drop)) continue;
    Blade nb = (b & lowmask) | ((b >> (drop + 1)) << drop);
    out.add_term(nb, c);
  }
  return out;
}

}  // namespace

WeakFillingResult sol_weak_filling_fixture(double eps, int grid_n, double c) {
  if (eps < 0) throw InputError("eps must be nonnegative");
  WeakFillingResult r;
  r.eps = eps;
  Preset sol = sol_from_sl2({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}});
  const LieAlgebra& g = sol.algebra;

  // left-invariant coframe (dθ, T*, X*, Y*)
  bool exact = true;
  {
    auto cf = make_coframe({"dθ", "T*", "X*", "Y*"});
    auto lift = [&](const Form<Rational>& a) {
      Form<Rational> out(cf, a.degree());
      for (const auto& [b, v] : a.terms()) out.add_term(b << 1, v);
      return out;
    };
    using FR = Form<Rational>;
    FR omega = wedge(FR::basis(cf, 0), FR::basis(cf, 1)) + wedge(FR::basis(cf, 2), FR::basis(cf, 3));
    exact = exact && wedge(omega, lift(ce_differential(g, sol.alpha_plus))).is_zero();
    exact = exact && wedge(omega, lift(ce_differential(g, sol.alpha_minus))).is_zero();
  }
  // coordinate coframe (dφ, dt, dx, dy) at sampled E = e^t
  {
    auto cf = make_coframe({"dφ", "dt", "dx", "dy"});
    using FR = Form<Rational>;
    FR omega = wedge(FR::basis(cf, 0), FR::basis(cf, 1)) + wedge(FR::basis(cf, 2), FR::basis(cf, 3));
    for (Rational E : {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(7, 5)}) {
      Rational Ei = 1 / E;
      for (int sg : {1, -1}) {
        FR da = wedge(FR::basis(cf, 1), FR::basis(cf, 2)) * Rational(sg * E) -
                wedge(FR::basis(cf, 1), FR::basis(cf, 3)) * Ei;
        exact = exact && wedge(omega, da).is_zero();
      }
    }
  }
  r.exact_vanishing = exact;

  // (dσ, dθ, ds, M), slots σ -> 0, s -> 1
  auto fr = make_frame({"dσ", "dθ", "ds"}, {{"σ", "dσ"}, {"s", "ds"}}, g);
  const auto& cf = fr->coframe;
  ParamForm lam(fr, 1);
  lam.add(ProfileFn::exp(ProfileFn::var(1)), embed(fr, sol.alpha_plus));
  lam.add(ProfileFn::exp(ProfileFn::var(1, -1)), embed(fr, sol.alpha_minus));
  lam.add(ProfileFn::var(0), Form<double>::basis(cf, 1));
  ParamForm dlam = d_param(lam);
  int Tix = fr->algebra_offset + g.index_of("T"), Xix = fr->algebra_offset + g.index_of("X"),
      Yix = fr->algebra_offset + g.index_of("Y");
  Form<double> omega = wedge(Form<double>::basis(cf, 1), Form<double>::basis(cf, Tix)) +
                       wedge(Form<double>::basis(cf, Xix), Form<double>::basis(cf, Yix));
  auto omega_eps = [&](const Params& p) { return dlam.at(p) + omega * eps; };

  auto vol = scan(grid_points(GridSpec{{-1, -c}, {1, c}, grid_n, false}),
                  [&](const Params& p) { return top_coefficient(power(omega_eps(p), 3)); }, cf);
  r.min_volume = vol.min_value;
  r.nondegenerate = vol.pass;

  // boundary faces: σ = ±1 (drop dσ), s = ±c (drop ds)
  std::vector<std::string> n_sigma = cf->names(), n_s = cf->names();
  n_sigma.erase(n_sigma.begin());
  n_s.erase(n_s.begin() + 2);
  auto cf_sigma = make_coframe(n_sigma), cf_s = make_coframe(n_s);
  struct Face {
    int drop;
    int orient;
    bool sigma_fixed;
    double value;
  };
  std::vector<Face> faces{{0, 1, true, 1.0}, {0, -1, true, -1.0}, {2, 1, false, c}, {2, -1, false, -c}};
  std::vector<Params> samples;
  std::vector<int> face_of;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    for (int i = 0; i < grid_n; ++i) {
      double x = grid_n == 1 ? 0 : -1 + 2.0 * i / (grid_n - 1);
      Params p = faces[fi].sigma_fixed ? Params{faces[fi].value, c * x} : Params{x, faces[fi].value};
      samples.push_back(p);
      face_of.push_back(static_cast<int>(fi));
    }
  }
  std::vector<char> ok(samples.size(), 0);
  parallel_for(static_cast<int>(samples.size()), [&](int i) {
    const Face& f = faces[face_of[i]];
    const auto& tcf = f.drop == 0 ? cf_sigma : cf_s;
    Form<double> a = restrict_drop(lam.at(samples[i]), f.drop, tcf);
    Form<double> da = restrict_drop(dlam.at(samples[i]), f.drop, tcf);
    Form<double> Om = restrict_drop(omega_eps(samples[i]), f.drop, tcf);
    auto rc = weak_domination_ray_check(a, da, Om, f.orient);
    ok[i] = rc.symplectic_half && rc.ray_half;
  });
  r.face_samples = static_cast<int>(samples.size());
  r.faces_pass = std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; });
  r.pass = r.exact_vanishing && r.nondegenerate && r.faces_pass;
  return r;
}

// ---- annulus and reparametrization identities ----

AnnulusResult ideal_annulus_check() {
  auto cf = make_coframe({"dθ", "dt"});
  using FR = Form<Rational>;
  AnnulusResult r;
  r.exact_identity = true;
  // rational points of the circle: u = tan(s/2) > 0
  for (Rational u : {Rational(1, 9), Rational(1, 3), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                     Rational(5), Rational(41, 7)}) {
    Rational d = 1 + u * u;
    Rational sn = 2 * u / d, cs = (1 - u * u) / d;
    Rational cot = cs / sn;
    FR lhs = (FR::basis(cf, 0) * cot + FR::basis(cf, 1)) * sn;
    FR rhs = FR::basis(cf, 0) * cs + FR::basis(cf, 1) * sn;
    r.exact_identity = r.exact_identity && lhs == rhs;
    if (u == 1) r.exact_identity = r.exact_identity && lhs == FR::basis(cf, 1);
    ++r.samples;
  }
  return r;
}

double gt_reparam_check(const Preset& pair, int grid_n) {
  ProfileTriple t = gt_form(pair, 1);
  ParamForm lam = t.to_form();
  const auto& fr = lam.frame();
  Form<double> ap = embed(fr, pair.alpha_plus), am = embed(fr, pair.alpha_minus);
  Form<double> dt = Form<double>::basis(fr->coframe, 1);
  double worst = 0;
  for (int i = 0; i < grid_n; ++i) {
    double s = kPi * (i + 1) / (grid_n + 1);
    double phi = std::log((1 + std::cos(s)) / std::sin(s));
    Form<double> other = (dt + (ap * std::exp(phi) + am * std::exp(-phi)) * 0.5) * std::sin(s);
    worst = std::max(worst, (other - lam.at({s, 0})).max_abs());
  }
  return worst;
}

}  // namespace liouville
