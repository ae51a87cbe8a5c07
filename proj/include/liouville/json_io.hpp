#pragma once

#include <json.hpp>

#include "liouville/exterior.hpp"

namespace liouville {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json form_to_json(const Form<Rational>& f);
Json form_to_json(const Form<double>& f);
Form<Rational> exact_form_from_json(const Json& j);
Form<double> float_form_from_json(const Json& j);

Json matrix_to_json(const DenseMatrix<Rational>& m);
Json matrix_to_json(const DenseMatrix<double>& m);
DenseMatrix<Rational> exact_matrix_from_json(const Json& j);
DenseMatrix<double> float_matrix_from_json(const Json& j);

// Round to 15 significant digits so reports are byte-stable.
double stable_double(double x);

}  // namespace liouville
