#pragma once

// Numeric verification of the analytic polynomial families: the degree-5
// one-parameter family and its degeneracy curve, the degree-6 rational
// parametrization, and the introductory degree-5 example.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace zolotarev {

using Cpx = std::complex<double>;

struct ComplexPoly {
  std::vector<Cpx> coeff;  // ascending degree, trimmed
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  Cpx eval(Cpx x) const;
  ComplexPoly derivative() const;
  void trim();
};

struct CriticalData {
  std::vector<Cpx> critical_points;
  std::vector<Cpx> critical_values;  // paired by index
  // Number of clusters of critical values under threshold
  // tol * max(1, largest pairwise distance).
  int distinct_value_count(double tol) const;
};

struct CheckRecord {
  std::string check;
  std::string expected;
  std::string actual;
  double tolerance = 0;
  bool pass = false;
};

std::string format_complex(Cpx z);

// Degree-5 family p = 20 * integral of (x^2-1)(x-b)(x-c) with c = -1/(5b).
// Critical points {1, -1, b, c}; values are evaluated directly and checked
// against the closed forms 5b - 1/b, -b^5+3b^3+2b and the reciprocal form.
struct Deg5Result {
  Cpx b, c;
  ComplexPoly p;
  CriticalData crit;
  Cpx value_ends, value_b, value_c;  // closed forms
};
Deg5Result deg5_family(Cpx b);

// The degeneracy curve polynomial Q(x, y) for b = x + iy, including the
// leading xy factor, evaluated with compensated summation.
double deg5_degeneracy(double x, double y);

// Sum of absolute term magnitudes of Q at (x, y); the natural yardstick for
// deciding that |Q| is far from zero.
double deg5_degeneracy_scale(double x, double y);

// Index (0-based) of the value strictly inside the segment of the other two,
// when the triple is collinear within tol; empty otherwise.
std::optional<int> collinear_middle(Cpx v1, Cpx v2, Cpx v3, double tol);

// Positive real roots of p(b) - p(c) on (0, 3): the two parameters at which
// the family crosses into a Shabat polynomial off the axes.
std::vector<double> deg5_shabat_parameters();

// Degree-6 family p = integral of (x^2-1)(x^2+ax+b)(x-c) with a, b, c from
// the rational parametrization in z.
struct Deg6Result {
  Cpx z, a, b, c, root1, root2;
  ComplexPoly p;
  CriticalData crit;
};
Deg6Result deg6_family(Cpx z);

// The introductory example: monic quintic with critical points i, -i, 1 and
// a = -2/3 + sqrt(35) i / 3; checks the four displayed critical values and
// the defining identity p(1) = p(a).
std::vector<CheckRecord> verify_intro_example();

}  // namespace zolotarev
