#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nfw/polynomial.hpp"

namespace nfw {

// How the generator list of a problem file is to be read.
//   Germ     - g1..gk are power-series germs; the joint Newton polyhedron of
//              their product drives the filtration machinery.
//   Laurent  - g1..gk are global polynomials; only their support polytopes
//              matter (Minkowski-sum checks).
//   Partials - a single f is given and the working generators are its partial
//              derivatives, with the polyhedron taken from f itself.
enum class ProblemMode { Germ, Laurent, Partials };

std::string_view mode_name(ProblemMode m);

// Parse failure with 1-based line/column into the original text.
struct ProblemParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ProblemParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg), line(line_), column(column_) {}
};

// Parsed problem file.  In partials mode `gs` already holds the partial
// derivatives of `f` (all required to be nonzero).
struct ProblemFile {
  std::vector<std::string> vars;
  ProblemMode mode = ProblemMode::Germ;
  std::vector<Polynomial> gs;
  std::optional<Polynomial> f;
  std::optional<Int> window_lo;
  std::optional<Int> window_hi;
  bool minimal_m = false;
  std::vector<std::string> checks;  // preselected check names, may be empty
  std::string fan_dump;             // output path, empty when unset

  int n() const { return static_cast<int>(vars.size()); }
  int k() const { return static_cast<int>(gs.size()); }
};

// Line-oriented "key: value" format.  Keys:
//   vars: z1 z2            (required, before any polynomial)
//   mode: germ | laurent | partials     (default germ)
//   g1: z1^2 + z2^3        (g1..gk, consecutive from 1; germ/laurent modes)
//   f: z1^2 + z2^3         (partials mode only)
//   window: LO..HI         (integers, LO <= HI)
//   minimal-M: true|false
//   checks: name1 name2    (commas or spaces)
//   fan-dump: path
// '#' starts a comment line; blank lines are ignored.  Polynomials use the
// grammar of parse_polynomial.  Throws ProblemParseError.
ProblemFile parse_problem_file(const std::string& text);

// Formal partial derivative d/dz_i (0-based variable index).
Polynomial partial_derivative(const Polynomial& p, int i);

}  // namespace nfw
