#include "liouville/json_io.hpp"

#include <cstdio>
#include <limits>

namespace liouville {

namespace {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad integer string");
    return z;
  }
  throw InputError("expected an integer");
}

CoframePtr coframe_from_json(const Json& j) {
  if (!j.contains("coframe")) throw InputError("form JSON needs a coframe");
  return make_coframe(j.at("coframe").get<std::vector<std::string>>());
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return Json{{"num", integer_to_json(q.get_num())}, {"den", integer_to_json(q.get_den())}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object()) {
    Rational q(integer_from_json(j.at("num")), j.contains("den") ? integer_from_json(j.at("den")) : Integer(1));
    if (q.get_den() == 0) throw InputError("zero denominator");
    q.canonicalize();
    return q;
  }
  throw InputError("expected a rational");
}

Json form_to_json(const Form<Rational>& f) {
  Json terms = Json::array();
  for (const auto& [b, c] : f.terms()) {
    Json t = rational_to_json(c);
    t = Json{{"blade", blade_indices(b)}, {"num", t["num"]}, {"den", t["den"]}};
    terms.push_back(t);
  }
  return Json{{"coframe", f.coframe()->names()}, {"degree", f.degree()}, {"terms", terms}};
}

Json form_to_json(const Form<double>& f) {
  Json terms = Json::array();
  for (const auto& [b, c] : f.terms()) terms.push_back(Json{{"blade", blade_indices(b)}, {"coeff", stable_double(c)}});
  return Json{{"coframe", f.coframe()->names()}, {"degree", f.degree()}, {"terms", terms}};
}

Form<Rational> exact_form_from_json(const Json& j) {
  auto cf = coframe_from_json(j);
  Form<Rational> f(cf, j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    Blade b = blade_from_indices(t.at("blade").get<std::vector<int>>(), cf->dim());
    if (t.contains("coeff")) throw InputError("float coefficient in exact form");
    f.add_term(b, rational_from_json(t));
  }
  return f;
}

Form<double> float_form_from_json(const Json& j) {
  auto cf = coframe_from_json(j);
  Form<double> f(cf, j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    Blade b = blade_from_indices(t.at("blade").get<std::vector<int>>(), cf->dim());
    double c = t.contains("coeff") ? t.at("coeff").get<double>() : rational_from_json(t).get_d();
    f.add_term(b, c);
  }
  return f;
}

Json matrix_to_json(const DenseMatrix<Rational>& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& q : r) row.push_back(rational_to_json(q));
    rows.push_back(row);
  }
  return rows;
}

Json matrix_to_json(const DenseMatrix<double>& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (double x : r) row.push_back(stable_double(x));
    rows.push_back(row);
  }
  return rows;
}

DenseMatrix<Rational> exact_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  DenseMatrix<Rational> m;
  for (const auto& r : j) {
    std::vector<Rational> row;
    for (const auto& x : r) {
      if (x.is_number_float()) throw InputError("float entry in exact matrix");
      row.push_back(rational_from_json(x));
    }
    m.push_back(row);
  }
  return m;
}

DenseMatrix<double> float_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  DenseMatrix<double> m;
  for (const auto& r : j) {
    std::vector<double> row;
    for (const auto& x : r) row.push_back(x.is_number() ? x.get<double>() : rational_from_json(x).get_d());
    m.push_back(row);
  }
  return m;
}

double stable_double(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace liouville
