#include "liouville/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "liouville/formfam.hpp"
#include "liouville/json_io.hpp"
#include "liouville/liealg.hpp"
#include "liouville/numfield.hpp"
#include "liouville/symplin.hpp"

namespace liouville {

namespace {

constexpr const char* kSchema = "liouville-lab/1";
constexpr double kPi = std::numbers::pi;

struct Global {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 0;
  bool timing = false;
};

// Body of a report; exit code follows `pass`.
struct Outcome {
  std::string operation;
  Json inputs = Json::object();
  bool pass = false;
  std::string kind;  // exact | grid | randomized
  Json tolerances = Json::object();
  std::string orientation;
  Json result = Json::object();
};

Json read_json_arg(const std::string& spec) {
  std::string text = spec;
  if (spec.empty() || (spec[0] != '[' && spec[0] != '{')) {
    std::ifstream in(spec);
    if (!in) throw InputError("cannot read " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

// inline JSON, a file, or remark0 / remark1 / standard:N
QMatrix read_form_matrix(const std::string& spec) {
  if (spec == "remark0") return remark_omega0();
  if (spec == "remark1") return remark_omega1();
  if (spec.rfind("standard:", 0) == 0) return to_qmatrix(standard_omega(std::stoi(spec.substr(9))));
  Json j = read_json_arg(spec);
  bool has_float = false;
  if (j.is_array())
    for (const auto& row : j)
      for (const auto& x : row) has_float = has_float || x.is_number_float();
  if (!has_float) return exact_matrix_from_json(j);
  // float entries are taken at their exact binary value
  auto d = float_matrix_from_json(j);
  QMatrix Q;
  for (const auto& row : d) {
    Q.emplace_back();
    for (double x : row) Q.back().emplace_back(x);
  }
  return Q;
}

Json eigen_to_json(const Matrix& M) {
  DenseMatrix<double> d(M.rows(), std::vector<double>(M.cols()));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) d[i][j] = M(i, j);
  return matrix_to_json(d);
}

Json int_matrix_json(const IntMatrix& M) {
  Json rows = Json::array();
  for (const auto& r : M) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()));
    rows.push_back(row);
  }
  return rows;
}

Json element_json(const OrderElement& x) {
  Json a = Json::array();
  for (const auto& v : x) a.push_back(v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()));
  return a;
}

Json grid_json(const GridResult& g) {
  return Json{{"pass", g.pass},
              {"min", stable_double(g.min_value)},
              {"argmin", stable_double(g.argmin[0])},
              {"max", stable_double(g.max_value)},
              {"points", g.points}};
}

Json blocks_json(const PencilBlocks& b) {
  Json blocks = Json::array();
  for (const auto& blk : b.blocks) {
    Json j{{"kind", blk.kind == PencilBlock::Kind::real ? "real" : "complex"}, {"chain", blk.chain}, {"size", blk.size}};
    if (blk.kind == PencilBlock::Kind::real) {
      j["lambda"] = stable_double(blk.lambda);
    } else {
      j["mu"] = stable_double(blk.mu);
      j["nu"] = stable_double(blk.nu);
    }
    blocks.push_back(j);
  }
  return Json{{"blocks", blocks},
              {"eps", stable_double(b.eps)},
              {"residual0", stable_double(b.residual0)},
              {"residual1", stable_double(b.residual1)},
              {"experimental", b.experimental},
              {"attempts", b.attempts},
              {"cond", stable_double(b.cond)},
              {"P", eigen_to_json(b.P)}};
}

Preset preset_with_pair(const std::string& id) {
  Preset p = preset_from_id(id);
  if (!p.has_pair) throw InputError("preset " + id + " carries no pair");
  return p;
}

// ---- subcommands ----

Outcome cmd_cotame(const std::string& s0, const std::string& s1) {
  Outcome o;
  o.operation = "symplin.construct_cotamed";
  QMatrix Q0 = read_form_matrix(s0), Q1 = read_form_matrix(s1);
  o.inputs = Json{{"omega0", matrix_to_json(Q0)}, {"omega1", matrix_to_json(Q1)}};
  o.orientation = kMatrixConvention;
  o.tolerances = Json{{"tames", 1e-10}, {"defect", 1e-10}, {"real_negative", 1e-8}};
  Matrix A0 = to_matrix(Q0), A1 = to_matrix(Q1);
  require_skew(A0, "omega0");
  require_skew(A1, "omega1");
  if (!is_nondegenerate(Q0) || !is_nondegenerate(Q1)) throw InputError("both forms must be nondegenerate");
  bool seg = segment_nondegenerate(A0, A1), ray = ray_nondegenerate(A0, A1);
  o.result = Json{{"segment_nondegenerate", seg}, {"ray_nondegenerate", ray}};
  if (!(seg && ray)) {
    o.kind = "grid";
    auto sc = scan_segment(A0, A1);
    o.result["pfaffian_sign_change_t"] = stable_double(sc.t);
    return o;
  }
  auto r = construct_cotamed(A0, A1);
  // exact check of the rounded J against the exact forms
  QMatrix Jq = to_qmatrix(r.J);
  bool e0 = tames(Q0, Jq), e1 = tames(Q1, Jq);
  o.kind = "exact";
  o.pass = e0 && e1;
  o.result.update(Json{{"J", eigen_to_json(r.J)},
                       {"exact_tames_omega0", e0},
                       {"exact_tames_omega1", e1},
                       {"margin0", stable_double(r.margin0)},
                       {"margin1", stable_double(r.margin1)},
                       {"defect", stable_double(r.defect)},
                       {"eps", stable_double(r.eps)},
                       {"attempts", r.attempts},
                       {"blocks", blocks_json(r.blocks)["blocks"]}});
  return o;
}

Outcome cmd_pencil_reduce(const std::string& s0, const std::string& s1, double eps) {
  Outcome o;
  o.operation = "symplin.simultaneous_reduce";
  QMatrix Q0 = read_form_matrix(s0), Q1 = read_form_matrix(s1);
  o.inputs = Json{{"omega0", matrix_to_json(Q0)}, {"omega1", matrix_to_json(Q1)}, {"eps", eps}};
  o.orientation = kMatrixConvention;
  o.tolerances = Json{{"residual1", "10 eps"}, {"cluster", "1e-7 max(1, |B|)"}};
  o.kind = "grid";
  Matrix A0 = to_matrix(Q0), A1 = to_matrix(Q1);
  require_skew(A0, "omega0");
  require_skew(A1, "omega1");
  auto b = simultaneous_reduce(A0, A1, eps);
  o.pass = true;
  o.result = blocks_json(b);
  return o;
}

Outcome cmd_verify_pair(const std::string& id) {
  Outcome o;
  o.operation = "liealg.liouville_pair_check";
  Preset p = preset_with_pair(id);
  o.inputs = Json{{"preset", id}};
  auto c = liouville_pair_check(p.algebra, p.alpha_plus, p.alpha_minus);
  o.kind = "exact";
  o.orientation = c.orientation;
  o.pass = c.verdict == Verdict::positive;
  o.result = Json{{"certificate", c.label()}, {"detail", to_json(c)}, {"dim", p.algebra.dim()}};
  return o;
}

Outcome cmd_verify_contact(const std::string& id, const std::string& which) {
  Outcome o;
  o.operation = "liealg.contact_check";
  Preset p = preset_with_pair(id);
  if (which != "plus" && which != "minus") throw InputError("--form must be plus or minus");
  o.inputs = Json{{"preset", id}, {"form", which}};
  const auto& a = which == "plus" ? p.alpha_plus : p.alpha_minus;
  auto c = contact_check(p.algebra, a);
  o.kind = "exact";
  o.orientation = c.orientation.empty() ? orientation_string(p.algebra.coframe()) : c.orientation;
  o.pass = c.verdict != Verdict::indefinite;
  o.result = Json{{"certificate", c.label()}, {"sign", verdict_name(c.verdict)}, {"detail", to_json(c)}};
  return o;
}

Outcome cmd_giroux(const std::string& id, int k, int points) {
  Outcome o;
  o.operation = "formfam.contact_grid_check";
  Preset p = preset_with_pair(id);
  o.inputs = Json{{"preset", id}, {"k", k}, {"points", points}};
  o.kind = "grid";
  o.tolerances = Json{{"min_top_coefficient", "> 0"}};
  auto g = contact_grid_check(gt_form(p, k).to_form(), GridSpec{{0}, {2 * kPi * k}, points});
  o.orientation = g.orientation;
  o.pass = g.pass;
  o.result = grid_json(g);
  return o;
}

Outcome cmd_reeb(const std::string& id, int k, int points) {
  Outcome o;
  o.operation = "formfam.reeb_field";
  Preset p = preset_with_pair(id);
  o.inputs = Json{{"preset", id}, {"k", k}, {"points", points}};
  o.kind = "grid";
  o.tolerances = Json{{"lambda_R_minus_1", 1e-8}, {"i_R_dlambda", 1e-8}};
  if (points < 1) throw InputError("--points must be positive");
  auto t = gt_form(p, k);
  double r1 = 0, r2 = 0;
  bool ok = true;
  for (int i = 0; i < points; ++i) {
    double s = 2 * kPi * k * i / points;
    auto r = reeb_field(t, s);
    ok = ok && r.ok;
    r1 = std::max(r1, r.r1);
    r2 = std::max(r2, r.r2);
  }
  auto r0 = reeb_field(t, 0.0);
  Json x0 = Json::array();
  for (double v : r0.X) x0.push_back(stable_double(v));
  o.pass = ok && r1 <= 1e-8 && r2 <= 1e-8;
  o.result = Json{{"max_r1", stable_double(r1)}, {"max_r2", stable_double(r2)}, {"points", points},
                  {"R_at_0", Json{{"X", x0}, {"u", stable_double(r0.u)}, {"branch", r0.branch}}}};
  return o;
}

Outcome cmd_lutz(const std::string& id, int k, double tau, const std::string& kind, int points) {
  Outcome o;
  o.operation = "formfam.lutz_family_check";
  Preset p = preset_with_pair(id);
  o.inputs = Json{{"preset", id}, {"k", k}, {"tau", tau}, {"smoothstep", kind}, {"points", points}};
  o.kind = "grid";
  o.tolerances = Json{{"relative", 1e-8}};
  auto r = lutz_family_check(p, k, tau, smoothstep_from_name(kind), points);
  o.pass = r.max_rel_error <= 1e-8;
  o.result = Json{{"max_rel_error", stable_double(r.max_rel_error)},
                  {"worst", {stable_double(r.worst[0]), stable_double(r.worst[1])}},
                  {"points", r.points},
                  {"min_contact", stable_double(r.min_contact)}};
  return o;
}

Outcome cmd_cutoff(const std::string& id, const std::string& kind, int points, double cap) {
  Outcome o;
  o.operation = "formfam.min_c_search";
  Preset p = preset_with_pair(id);
  o.inputs = Json{{"preset", id}, {"smoothstep", kind}, {"points", points}, {"cap", cap}};
  o.kind = "grid";
  o.tolerances = Json{{"refinement", 4}};
  auto r = min_c_search(p, smoothstep_from_name(kind), points, cap);
  o.orientation = r.at_c.orientation;
  o.pass = r.found && r.refined.pass;
  o.result = Json{{"found", r.found}, {"c", stable_double(r.c)}, {"at_c", grid_json(r.at_c)}, {"refined", grid_json(r.refined)}};
  if (!r.found) {
    Json v = Json::array();
    for (double s : r.violating_s) v.push_back(stable_double(s));
    o.result["violating_s"] = v;
  }
  return o;
}

Outcome cmd_numfield(const std::vector<long>& poly, long box) {
  Outcome o;
  o.operation = "numfield.gamma_lattice";
  auto k = field_from_poly(poly);
  if (box <= 0) box = default_box_bound(k.degree());
  o.inputs = Json{{"poly", poly}, {"box_bound", box}};
  o.kind = "exact";
  o.tolerances = Json{{"torsion_log", 1e-9}, {"hyperplane", 1e-10}, {"diagonalization", 1e-8}};
  auto g = find_units(k, box);
  auto pu = positive_units(g, k);
  auto L = gamma_lattice(k, pu);
  Json roots = Json::array();
  for (double r : k.real_roots) roots.push_back(stable_double(r));
  for (const auto& z : k.complex_roots) roots.push_back({stable_double(z.real()), stable_double(z.imag())});
  Json torsion = Json::array(), free = Json::array(), pos = Json::array();
  for (const auto& u : g.torsion) torsion.push_back(element_json(u));
  for (const auto& u : g.free) free.push_back(element_json(u));
  for (const auto& u : pu.free) pos.push_back(element_json(u));
  Json gamma = Json::array(), mono = Json::array();
  for (const auto& v : L.basis) {
    Json t = Json::array(), w = Json::array();
    for (double x : v.t) t.push_back(stable_double(x));
    for (const auto& z : v.w) w.push_back({stable_double(z.real()), stable_double(z.imag())});
    gamma.push_back(Json{{"t", t}, {"w", w}, {"unit", element_json(v.unit)}});
  }
  for (const auto& M : L.monodromy) mono.push_back(int_matrix_json(M));
  o.result = Json{{"poly", poly},
                  {"signature", {k.r, k.s}},
                  {"roots", roots},
                  {"units", Json{{"torsion", torsion},
                                 {"torsion_generator", element_json(g.torsion_generator)},
                                 {"free", free},
                                 {"positive_free", pos},
                                 {"rank", g.rank},
                                 {"candidates", g.candidates}}},
                  {"gamma_basis", gamma},
                  {"gamma_rank", L.rank},
                  {"monodromy", mono}};
  o.pass = L.rank == k.degree() - 1;
  if (k.degree() == 2 && k.s == 0) {
    auto h = hyperbolic_sl2_lattice(L.monodromy[0]);
    o.result["tau"] = stable_double(h.tau);
  }
  if (k.s == 0) {
    Preset p = totally_real(k.degree());
    auto c = liouville_pair_check(p.algebra, p.alpha_plus, p.alpha_minus);
    o.result["liouville_certificate"] = c.label();
    o.orientation = c.orientation;
    o.pass = o.pass && c.verdict == Verdict::positive;
  } else {
    o.result["liouville_certificate"] = "not-applicable";
  }
  return o;
}

Outcome cmd_geiges(int n) {
  Outcome o;
  o.operation = "liealg.geiges_pair_check";
  o.inputs = Json{{"n", n}};
  o.kind = "exact";
  o.tolerances = Json{{"isomorphism_residual", 1e-10}};
  Preset p = geiges(n);
  bool pair = geiges_pair_check(p.algebra, p.alpha_plus, p.alpha_minus);
  auto iso = geiges_isomorphism(n);
  Json traces = Json::array();
  for (const auto& q : iso.power_traces) traces.push_back(rational_to_json(q));
  o.orientation = orientation_string(p.algebra.coframe());
  o.pass = pair && iso.residual <= 1e-10 && iso.traces_vanish;
  o.result = Json{{"pair", pair},
                  {"dim", p.algebra.dim()},
                  {"signature", {iso.r, iso.s}},
                  {"residual", stable_double(iso.residual)},
                  {"kernel_residual", stable_double(iso.kernel_residual)},
                  {"power_traces", traces},
                  {"traces_vanish", iso.traces_vanish}};
  return o;
}

Outcome cmd_suite(const std::string& name, int trials, const std::vector<int>& dims, std::uint64_t seed) {
  Outcome o;
  o.inputs = Json{{"name", name}, {"trials", trials}, {"dims", dims}};
  o.kind = "randomized";
  if (trials < 0) throw InputError("--trials must be nonnegative");
  if (name == "pencil") {
    o.operation = "symplin.pencil_equivalence_suite";
    o.tolerances = Json{{"tames", 1e-10}, {"real_negative", 1e-8}};
    int mismatches = 0;
    double worst = 1;
    Json seeds = Json::array(), per = Json::array();
    for (int d : dims) {
      auto r = pencil_equivalence_suite(d, trials, seed);
      mismatches += r.mismatches;
      worst = std::min(worst, r.worst_margin);
      for (auto s : r.mismatch_seeds) seeds.push_back(s);
      per.push_back(Json{{"dim", d}, {"cotamable", r.cotamable}, {"mismatches", r.mismatches}});
    }
    o.pass = mismatches == 0;
    o.result = Json{{"trials", trials * static_cast<int>(dims.size())}, {"mismatches", mismatches},
                    {"worst_margin", stable_double(worst)}, {"seeds", seeds}, {"per_dim", per}};
  } else if (name == "cayley") {
    o.operation = "symplin.cayley_suite";
    o.tolerances = Json{{"round_trip", 1e-10}};
    auto r = cayley_suite(trials, seed);
    o.pass = r.worst_round_trip <= 1e-10 && r.preserved == trials;
    o.result = Json{{"trials", trials}, {"mismatches", trials - r.preserved},
                    {"worst_round_trip", stable_double(r.worst_round_trip)}, {"seeds", {seed, seed + trials}}};
  } else if (name == "counterexample") {
    o.operation = "symplin.cocompatible_counterexample_suite";
    o.tolerances = Json{{"tames", 1e-10}};
    auto r = cocompatible_counterexample_suite(trials, seed);
    o.pass = r.wedge_zero && r.survivors == 0;
    o.result = Json{{"trials", r.trials}, {"mismatches", r.survivors}, {"worst_margin", stable_double(r.worst_margin)},
                    {"wedge_zero", r.wedge_zero}, {"seeds", {seed, seed + trials}}};
  } else {
    throw InputError("unknown suite: " + name);
  }
  return o;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stol(item, &pos));
      if (pos != item.size()) throw InputError("bad integer list: " + s);
    } catch (const std::logic_error&) {
      throw InputError("bad integer list: " + s);
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

void print_human(std::ostream& out, const Json& rep, bool monodromy) {
  out << rep["command"].get<std::string>() << ": " << rep["verdict"].get<std::string>() << " ("
      << rep["certificate"].get<std::string>() << ")\n";
  const Json& r = rep["result"];
  for (auto it = r.begin(); it != r.end(); ++it) {
    if (it.key() == "detail" || it.key() == "P") continue;
    if (it.key() == "monodromy" && !monodromy) continue;
    out << "  " << it.key() << " = " << it.value().dump() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"liouville-lab: certificates for Liouville pairs, tamed structures and number-field lattices"};
  app.require_subcommand(1, 1);
  Global G;
  app.add_flag("--json", G.json, "JSON report on stdout");
  app.add_option("--seed", G.seed, "random seed (default 0)");
  app.add_option("--threads", G.threads, "worker cap")->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", G.timing, "add wall time to the report");

  std::function<Outcome()> action;
  std::string command;
  bool show_monodromy = false;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string o0, o1;
  double eps = 1e-3;
  auto* c_cotame = sub("cotame", "construct J tamed by both forms");
  c_cotame->add_option("--omega0", o0, "matrix: JSON, file, remark0|remark1|standard:N")->required();
  c_cotame->add_option("--omega1", o1, "matrix")->required();
  c_cotame->callback([&] { action = [&] { return cmd_cotame(o0, o1); }; });

  auto* c_reduce = sub("pencil-reduce", "simultaneous normal form of a pencil");
  c_reduce->add_option("--omega0", o0)->required();
  c_reduce->add_option("--omega1", o1)->required();
  c_reduce->add_option("--eps", eps)->check(CLI::PositiveNumber);
  c_reduce->callback([&] { action = [&] { return cmd_pencil_reduce(o0, o1, eps); }; });

  std::string preset = "sol:2,1,1,1", which = "plus", kind = "quintic";
  int k = 1, points = 1024;
  double tau = 0.5, cap = 64.0;
  auto* c_pair = sub("verify-pair", "exact Liouville pair certificate");
  c_pair->add_option("--preset", preset)->required();
  c_pair->callback([&] { action = [&] { return cmd_verify_pair(preset); }; });

  auto* c_contact = sub("verify-contact", "exact contact sign of a preset form");
  c_contact->add_option("--preset", preset)->required();
  c_contact->add_option("--form", which, "plus | minus");
  c_contact->callback([&] { action = [&] { return cmd_verify_contact(preset, which); }; });

  auto* c_gt = sub("giroux-torsion", "contact grid check of the torsion family");
  c_gt->add_option("--preset", preset);
  c_gt->add_option("--k", k)->check(CLI::PositiveNumber);
  c_gt->add_option("--points", points);
  c_gt->callback([&] { action = [&] { return cmd_giroux(preset, k, points); }; });

  auto* c_reeb = sub("reeb", "Reeb field residuals along the torsion family");
  c_reeb->add_option("--preset", preset);
  c_reeb->add_option("--k", k)->check(CLI::PositiveNumber);
  c_reeb->add_option("--points", points);
  c_reeb->callback([&] { action = [&] { return cmd_reeb(preset, k, points); }; });

  auto* c_lutz = sub("lutz-check", "Lutz family identity");
  c_lutz->add_option("--preset", preset);
  c_lutz->add_option("--k", k)->check(CLI::PositiveNumber);
  c_lutz->add_option("--tau", tau);
  c_lutz->add_option("--smoothstep", kind);
  c_lutz->add_option("--points", points);
  c_lutz->callback([&] { action = [&] { return cmd_lutz(preset, k, tau, kind, points); }; });

  auto* c_cut = sub("cutoff", "smallest cutoff c with a Liouville form");
  c_cut->add_option("--preset", preset);
  c_cut->add_option("--smoothstep", kind);
  c_cut->add_option("--points", points);
  c_cut->add_option("--cap", cap);
  c_cut->callback([&] { action = [&] { return cmd_cutoff(preset, kind, points, cap); }; });

  std::string poly;
  long box = 0;
  auto* c_nf = sub("numfield", "units, lattice and monodromy of Q[X]/(f)");
  c_nf->add_option("--poly", poly, "ascending integer coefficients, e.g. -2,0,1")->required();
  c_nf->add_option("--box", box, "unit search box (default: 10^6 candidates)");
  c_nf->add_flag("--monodromy", show_monodromy, "print the monodromy matrices");
  c_nf->callback([&] { action = [&] { return cmd_numfield(parse_long_list(poly), box); }; });

  int n = 3;
  auto* c_geiges = sub("geiges", "Geiges pair and isomorphism");
  c_geiges->add_option("--n", n)->check(CLI::Range(1, 8));
  c_geiges->callback([&] { action = [&] { return cmd_geiges(n); }; });

  std::string suite_name = "pencil", dims_text = "4,6,8,10";
  int trials = 100;
  auto* c_suite = sub("suite", "randomized suites: pencil | cayley | counterexample");
  c_suite->add_option("--name", suite_name);
  c_suite->add_option("--trials", trials);
  c_suite->add_option("--dims", dims_text);
  c_suite->callback([&] {
    action = [&] {
      std::vector<int> dims;
      for (long d : parse_long_list(dims_text)) dims.push_back(static_cast<int>(d));
      return cmd_suite(suite_name, trials, dims, G.seed);
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  command = app.get_subcommands().front()->get_name();
  if (G.threads > 0) set_worker_threads(G.threads);

  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = action();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    Json rep{{"schema", kSchema}, {"command", command}, {"verdict", "fail"}, {"certificate", "none"},
             {"error", e.what()}, {"seed", G.seed}};
    if (G.json) out << rep.dump(2) << "\n";
    else out << command << ": fail (" << e.what() << ")\n";
    return 1;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Json rep{{"schema", kSchema},
           {"command", command},
           {"operation", o.operation},
           {"inputs", o.inputs},
           {"verdict", o.pass ? "pass" : "fail"},
           {"certificate", o.kind},
           {"tolerances", o.tolerances},
           {"orientation", o.orientation},
           {"seed", G.seed},
           {"result", o.result}};
  if (G.timing) rep["timing_ms"] = stable_double(ms);
  if (G.json) out << rep.dump(2) << "\n";
  else print_human(out, rep, show_monodromy || command != "numfield");
  return o.pass ? 0 : 1;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace liouville
