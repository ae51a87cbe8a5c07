#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liouville/json_io.hpp"
#include "liouville/polynomial.hpp"

namespace liouville {

enum class Verdict { positive, negative, indefinite };

const char* verdict_name(Verdict v);

// Sign certificate for a univariate polynomial on [0,1] or [0,inf),
// or for a single exact value ("point") or a sampled float family ("grid").
struct PositivityCertificate {
  Verdict verdict = Verdict::indefinite;
  std::string kind;    // "exact-sturm" | "exact-value" | "grid"
  std::string domain;  // "[0,1]" | "[0,inf)" | "point"
  std::string orientation;

  RationalPoly poly;
  std::vector<Rational> nodes, values;  // interpolation data that produced poly
  std::vector<RationalPoly> chain;      // Sturm chain of the squarefree part
  Rational left_value, right_value;     // p(0), and p(1) or leading coefficient
  int variations_left = 0, variations_right = 0;
  std::vector<std::pair<Rational, Rational>> isolating_intervals;
  std::optional<Rational> violating_x;

  Rational exact_value;  // for kind "exact-value"
  double grid_min = 0, grid_argmin = 0;
  int grid_points = 0;

  std::string label() const;  // e.g. "positive-exact"
};

// Interpolates p through (nodes, values) and certifies its sign on [0,1].
PositivityCertificate certify_unit_interval(const std::vector<Rational>& nodes,
                                            const std::vector<Rational>& values);
// Same on [0, inf).
PositivityCertificate certify_half_line(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

PositivityCertificate certify_value(const Rational& v);

// Re-checks the stored data: interpolation, chain recurrence, variation counts.
bool replay(const PositivityCertificate& c);

Json to_json(const PositivityCertificate& c);

}  // namespace liouville
