#pragma once

// Base points (points of indeterminacy) of the half-maps of both equations,
// verified exactly over Q.
//
// A point lives in a chart reached from one of the four affine charts of
// P1 x P1 through a cascade of blowups. Blowing up (u, v) = (p, q) gives either
//   kind U:  u = p + u',      v = q + u' v'   (exceptional divisor u' = 0)
//   kind V:  u = p + u' v',   v = q + v'      (exceptional divisor v' = 0).
// The half-map's changed coordinate is pulled back to the chart as a formal
// quotient N/D; after removing the monomial factor shared by N and D, the
// point is a base point iff both vanish there.

#include "sakai/numeric.hpp"
#include "sakai/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sakai::painleve {

enum class Surface { standard, recurrence };

/// Which affine chart of P1 x P1: lower case is the affine coordinate, upper
/// case its inverse (e.g. Xy means X = 1/x, y).
enum class AffineChart { xy, Xy, xY, XY };

enum class BlowupKind { U, V };

struct BlowupStep {
  BlowupKind kind;
  Rational at_u;
  Rational at_v;
};

struct BasePointSpec {
  std::string label;         // "p1".."p8" or "q1".."q8"
  std::string predecessor;   // empty for points on P1 x P1
  std::string description;   // chart coordinates as printed in tables
  AffineChart chart;
  std::vector<BlowupStep> cascade;  // blowups leading to the point's chart
  Rational u;                       // point in final chart coordinates
  Rational v;
  int half_map;                     // 1 or 2
};

struct StandardParams {
  std::array<Rational, 4> a;
  Rational t;
};

struct RecurrenceParams {
  Rational alpha;
  Rational beta;
  Rational s;
  long n;
};

std::vector<BasePointSpec> standard_base_points(const StandardParams& p);
std::vector<BasePointSpec> recurrence_base_points(const RecurrenceParams& p);

/// Per-point outcome, also used by the CLI tables.
struct BasePointCheck {
  std::string label;
  bool numerator_vanishes = false;
  bool denominator_vanishes = false;
  bool neighbour_determinate = false;
  /// For infinitely-near points: the root of the numerator restricted to the
  /// last exceptional divisor, when that restriction is linear.
  std::optional<Rational> leading_root;
};

BasePointCheck check_base_point(Surface surface, const BasePointSpec& spec,
                                const StandardParams& sp, const RecurrenceParams& rp);

VerificationReport verify_base_points(const StandardParams& p);
VerificationReport verify_base_points(const RecurrenceParams& p);

/// Default generic parameters used by the suite.
StandardParams default_standard_params();
RecurrenceParams default_recurrence_params();

}  // namespace sakai::painleve
