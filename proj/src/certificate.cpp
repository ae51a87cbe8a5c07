#include "liouville/certificate.hpp"

namespace liouville {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::positive: return "positive";
    case Verdict::negative: return "negative";
    default: return "indefinite";
  }
}

std::string PositivityCertificate::label() const {
  std::string suffix = kind == "grid" ? "grid" : "exact";
  return std::string(verdict_name(verdict)) + "-" + suffix;
}

namespace {

void fill_violation(PositivityCertificate& c, const Rational& lo) {
  // first rational point with p <= 0
  if (sgn(c.poly.eval(lo)) <= 0) {
    c.violating_x = lo;
    return;
  }
  for (const auto& [a, b] : c.isolating_intervals) {
    for (const Rational& x : std::vector<Rational>{a, b, Rational((a + b) / 2)}) {
      if (x >= lo && sgn(c.poly.eval(x)) <= 0) {
        c.violating_x = x;
        return;
      }
    }
  }
}

}  // namespace

PositivityCertificate certify_unit_interval(const std::vector<Rational>& nodes,
                                            const std::vector<Rational>& values) {
  PositivityCertificate c;
  c.kind = "exact-sturm";
  c.domain = "[0,1]";
  c.nodes = nodes;
  c.values = values;
  c.poly = interpolate(nodes, values);
  c.left_value = c.poly.eval(Rational(0));
  c.right_value = c.poly.eval(Rational(1));
  if (c.poly.is_zero()) {
    c.verdict = Verdict::indefinite;
    c.violating_x = Rational(0);
    return c;
  }
  c.chain = sturm_chain(squarefree_part(c.poly));
  c.variations_left = sign_variations(c.chain, Rational(0));
  c.variations_right = sign_variations(c.chain, Rational(1));
  int roots = c.variations_left - c.variations_right + (sgn(c.left_value) == 0 ? 1 : 0);
  if (roots == 0) {
    c.verdict = sgn(c.left_value) > 0 ? Verdict::positive : Verdict::negative;
    return c;
  }
  c.verdict = Verdict::indefinite;
  c.isolating_intervals = isolate_roots(c.poly, Rational(0), Rational(1));
  if (sgn(c.left_value) == 0) c.isolating_intervals.insert(c.isolating_intervals.begin(), {Rational(0), Rational(0)});
  fill_violation(c, Rational(0));
  return c;
}

PositivityCertificate certify_half_line(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  PositivityCertificate c;
  c.kind = "exact-sturm";
  c.domain = "[0,inf)";
  c.nodes = nodes;
  c.values = values;
  c.poly = interpolate(nodes, values);
  c.left_value = c.poly.eval(Rational(0));
  c.right_value = c.poly.leading();
  if (c.poly.is_zero()) {
    c.verdict = Verdict::indefinite;
    c.violating_x = Rational(0);
    return c;
  }
  c.chain = sturm_chain(squarefree_part(c.poly));
  c.variations_left = sign_variations(c.chain, Rational(0));
  c.variations_right = sign_variations_at_infinity(c.chain, +1);
  int roots = c.variations_left - c.variations_right + (sgn(c.left_value) == 0 ? 1 : 0);
  if (roots == 0) {
    c.verdict = sgn(c.left_value) > 0 ? Verdict::positive : Verdict::negative;
    return c;
  }
  c.verdict = Verdict::indefinite;
  Rational bound = root_bound(c.poly);
  c.isolating_intervals = isolate_roots(c.poly, Rational(0), bound);
  if (sgn(c.left_value) == 0) c.isolating_intervals.insert(c.isolating_intervals.begin(), {Rational(0), Rational(0)});
  fill_violation(c, Rational(0));
  if (!c.violating_x && sgn(c.right_value) < 0) c.violating_x = bound;
  return c;
}

PositivityCertificate certify_value(const Rational& v) {
  PositivityCertificate c;
  c.kind = "exact-value";
  c.domain = "point";
  c.exact_value = v;
  int s = sgn(v);
  c.verdict = s > 0 ? Verdict::positive : (s < 0 ? Verdict::negative : Verdict::indefinite);
  return c;
}

bool replay(const PositivityCertificate& c) {
  if (c.kind == "exact-value") {
    int s = sgn(c.exact_value);
    Verdict v = s > 0 ? Verdict::positive : (s < 0 ? Verdict::negative : Verdict::indefinite);
    return v == c.verdict;
  }
  if (c.kind == "grid") {
    if (c.verdict == Verdict::positive) return c.grid_min > 0;
    if (c.verdict == Verdict::negative) return false;
    return c.grid_min <= 0;
  }
  for (size_t i = 0; i < c.nodes.size(); ++i)
    if (c.poly.eval(c.nodes[i]) != c.values[i]) return false;
  if (static_cast<int>(c.nodes.size()) <= c.poly.degree()) return false;
  if (c.poly.is_zero()) return c.verdict == Verdict::indefinite;
  // chain recurrence: chain[0] squarefree part of poly, chain[1] its derivative,
  // chain[k+1] = -rem(chain[k-1], chain[k]), last one divides its predecessor
  if (c.chain.empty() || !(divmod(c.poly, c.chain[0]).second.is_zero())) return false;
  if (c.chain.size() > 1 && !(c.chain[1] == c.chain[0].derivative())) return false;
  for (size_t k = 1; k + 1 < c.chain.size(); ++k)
    if (!(c.chain[k + 1] == -divmod(c.chain[k - 1], c.chain[k]).second)) return false;
  if (c.chain.size() > 1 && !divmod(c.chain[c.chain.size() - 2], c.chain.back()).second.is_zero()) return false;
  // the stored chain must share the distinct roots of poly
  if (!(squarefree_part(c.poly) == (Rational(1) / c.chain[0].leading()) * c.chain[0])) return false;
  if (c.left_value != c.poly.eval(Rational(0))) return false;
  int vl = sign_variations(c.chain, Rational(0));
  int vr;
  if (c.domain == "[0,1]") {
    if (c.right_value != c.poly.eval(Rational(1))) return false;
    vr = sign_variations(c.chain, Rational(1));
  } else {
    if (c.right_value != c.poly.leading()) return false;
    vr = sign_variations_at_infinity(c.chain, +1);
  }
  if (vl != c.variations_left || vr != c.variations_right) return false;
  int roots = vl - vr + (sgn(c.left_value) == 0 ? 1 : 0);
  if (roots == 0) return c.verdict == (sgn(c.left_value) > 0 ? Verdict::positive : Verdict::negative);
  if (c.verdict != Verdict::indefinite) return false;
  if (c.violating_x && sgn(c.poly.eval(*c.violating_x)) > 0) return false;
  return true;
}

namespace {
Json poly_json(const RationalPoly& p) {
  Json a = Json::array();
  for (const auto& q : p.coeffs()) a.push_back(rational_to_json(q));
  return a;
}
}  // namespace

Json to_json(const PositivityCertificate& c) {
  Json j{{"verdict", verdict_name(c.verdict)}, {"label", c.label()}, {"kind", c.kind}, {"domain", c.domain}};
  if (!c.orientation.empty()) j["orientation"] = c.orientation;
  if (c.kind == "exact-value") {
    j["value"] = rational_to_json(c.exact_value);
    return j;
  }
  if (c.kind == "grid") {
    j["grid_min"] = stable_double(c.grid_min);
    j["grid_argmin"] = stable_double(c.grid_argmin);
    j["grid_points"] = c.grid_points;
    return j;
  }
  j["poly"] = poly_json(c.poly);
  Json nodes = Json::array();
  for (size_t i = 0; i < c.nodes.size(); ++i)
    nodes.push_back(Json{{"x", rational_to_json(c.nodes[i])}, {"p", rational_to_json(c.values[i])}});
  j["nodes"] = nodes;
  Json chain = Json::array();
  for (const auto& p : c.chain) chain.push_back(poly_json(p));
  j["sturm_chain"] = chain;
  j["variations"] = {c.variations_left, c.variations_right};
  j["left_value"] = rational_to_json(c.left_value);
  j["right_value"] = rational_to_json(c.right_value);
  Json iv = Json::array();
  for (const auto& [a, b] : c.isolating_intervals) iv.push_back({rational_to_json(a), rational_to_json(b)});
  j["isolating_intervals"] = iv;
  if (c.violating_x) j["violating_x"] = rational_to_json(*c.violating_x);
  return j;
}

}  // namespace liouville
