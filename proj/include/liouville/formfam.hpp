#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liouville/certificate.hpp"
#include "liouville/exterior.hpp"
#include "liouville/liealg.hpp"
#include "liouville/profile.hpp"

namespace liouville {

// Worker count for grid loops; results never depend on it.
void set_worker_threads(int n);
int worker_threads();
// Runs body(i) for i in [0, n) on the worker pool.
void parallel_for(int n, const std::function<void(int)>& body);

// Product coframe: closed coordinate covectors first, then an algebra coframe.
// Parameter slot p is the coordinate whose differential sits at param_index[p].
struct FrameContext {
  CoframePtr coframe;
  std::vector<int> param_index;
  std::vector<std::string> param_names;
  int algebra_offset = 0;
  std::vector<Form<double>> d_basis;
};
using FramePtr = std::shared_ptr<const FrameContext>;

// leading: names of the coordinate covectors; params: (name of parameter, covector name).
FramePtr make_frame(const std::vector<std::string>& leading,
                    const std::vector<std::pair<std::string, std::string>>& params, const LieAlgebra& g);

// Exact algebra form moved into the product coframe.
Form<double> embed(const FramePtr& fr, const Form<Rational>& a);
Form<double> embed(const FramePtr& fr, const Form<double>& a);

class ParamForm {
 public:
  ParamForm(FramePtr fr, int degree) : fr_(std::move(fr)), degree_(degree) {}

  const FramePtr& frame() const { return fr_; }
  int degree() const { return degree_; }
  const std::map<Blade, ProfileFn>& terms() const { return terms_; }

  void add_term(Blade b, const ProfileFn& c);
  // c * a for a constant form on the product coframe
  void add(const ProfileFn& c, const Form<double>& a);

  Form<double> at(const Params& p) const;

  friend ParamForm operator+(ParamForm a, const ParamForm& b);

 private:
  FramePtr fr_;
  int degree_;
  std::map<Blade, ProfileFn> terms_;
};

ParamForm d_param(const ParamForm& a);

// Parameter box with a sample count per axis; critical angles j*pi/2 inside the box are always added.
struct GridSpec {
  std::vector<double> lo, hi;
  int points = 1024;
  bool critical_angles = true;
};
std::vector<Params> grid_points(const GridSpec& g);

struct GridResult {
  bool pass = false;
  double min_value = 0;
  Params argmin{0, 0};
  double max_value = 0;
  int points = 0;
  std::string orientation;
  std::string kind = "grid";
};

// top coefficient of lambda ^ (d lambda)^(n-1) over the grid
GridResult contact_grid_check(const ParamForm& lambda, const GridSpec& grid);
// top coefficient of (d beta)^n for an even-dimensional product
GridResult liouville_grid_check(const ParamForm& beta, const GridSpec& grid);

double contact_top(const ParamForm& lambda, const ParamForm& dlambda, const Params& p);

struct ProfileTriple {
  ProfileFn f, g, h;
  Preset pair;
  double s0 = 0, s1 = 1;

  // checks derivatives, f, g >= 0 and (f, g) != 0 on a grid
  void validate(int grid_n = 1024) const;
  // f alpha_+ + g alpha_- + h dt on the coframe (ds, dt, M)
  ParamForm to_form() const;
};

FramePtr st_frame(const LieAlgebra& g);  // coframe (ds, dt, M), slot 0 = s

ProfileTriple gt_form(const Preset& pair, int k);
// cos(k s) dtheta + sin(k s) dt, s in [0, 2 pi], on the S^1 pair
ParamForm t3_form(int k);

struct ReebResult {
  std::vector<double> X;  // coordinates on the algebra basis
  double u = 0;
  double lsq_residual = 0;
  double r1 = 0;  // |lambda(R) - 1|
  double r2 = 0;  // sup norm of i_R d lambda
  double u_other = 0;  // the other branch formula, NaN when its divisor vanishes
  std::string branch;
  bool ok = false;
};

ReebResult reeb_field(const ProfileTriple& t, double s, double tol = 1e-8);

struct CutoffResult {
  bool found = false;
  double c = 0;
  GridResult at_c, refined;
  std::vector<double> violating_s;  // when the cap is exceeded
};

ParamForm cutoff_liouville(const Preset& pair, double c, Smoothstep psi);  // coframe (ds, M)
GridResult cutoff_grid_check(const Preset& pair, double c, Smoothstep psi, int grid_n);
// accepted c needs min volume > kCutoffMargin * (|vol alpha+| + |vol alpha-|) on the grid
inline constexpr double kCutoffMargin = 1e-9;
CutoffResult min_c_search(const Preset& pair, Smoothstep psi, int grid_n = 1024, double cap = 64.0);

struct LutzResult {
  double max_rel_error = 0;
  Params worst{0, 0};
  int points = 0;
  double min_contact = 0;  // min over grid of lambda_{k,tau} ^ d lambda_{k,tau}^(n-1)
};

LutzResult lutz_family_check(const Preset& pair, int k, double tau, Smoothstep psi, int grid_n = 512);

struct XiResult {
  double lhs = 0, rhs = 0, rel_error = 0;
  bool nonzero = false;
};

// omega = C+ d a+ + C- d a- + delta a+ ^ a- + B dt ^ (C+ a+ - C- a-) on (dt, M), dim M = 2m - 1;
// compares omega^m with m B dt ^ (C+ a+ - C- a-) ^ (C+ d a+ + C- d a-)^(m-1).
XiResult xi_nondegenerate(const Preset& pair, double cp, double cm, double B, double delta);

struct LinearModelResult {
  bool pass = false;
  GridResult grid;
  double max_factor_error = 0;
  double contact_volume = 0;
};

// B = (e^s + e^-s) e^(nu t) alpha + (e^s - e^-s) e^(mu t) dtheta on (ds, dtheta, dt, M)
LinearModelResult linear_model_pair_check(const LieAlgebra& g, const Form<Rational>& alpha, double mu, double nu,
                                          int grid_n = 64, double box = 2.0);

struct RayCheck {
  PositivityCertificate certificate;  // polynomial in tau on [0, inf)
  bool symplectic_half = false;       // alpha ^ Omega^(n-1) > 0
  bool ray_half = false;              // alpha ^ (Omega + tau d alpha)^(n-1) > 0 for tau > 0
};

RayCheck weak_domination_ray_check(const LieAlgebra& g, const Form<Rational>& alpha, const Form<Rational>& Omega);
// float version with d alpha given; grid on [0, 1e3] plus the leading coefficient
// orientation = -1 reads top coefficients against the reversed coframe.
RayCheck weak_domination_ray_check(const Form<double>& alpha, const Form<double>& dalpha, const Form<double>& Omega,
                                   int orientation = 1);

struct WeakFillingResult {
  bool pass = false;
  bool exact_vanishing = false;     // omega ^ d alpha_+- = 0, both coframes
  bool nondegenerate = false;       // omega_eps^3 > 0 on the (sigma, s) grid
  double min_volume = 0;
  bool faces_pass = false;          // ray check on the boundary faces
  int face_samples = 0;
  double eps = 0;
};

WeakFillingResult sol_weak_filling_fixture(double eps, int grid_n = 128, double c = 1.0);

struct AnnulusResult {
  bool exact_identity = false;
  int samples = 0;
};
AnnulusResult ideal_annulus_check();

double gt_reparam_check(const Preset& pair, int grid_n = 512);

}  // namespace liouville
