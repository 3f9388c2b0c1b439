#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "analytic.hpp"

using namespace zolotarev;

namespace {

Cpx polar(double r, double theta) { return Cpx(r * std::cos(theta), r * std::sin(theta)); }

// Collinearity of the three critical values as a function of b, cleared of
// denominators: Im[b^4 (b^2-1)^3 conj((25 b^2 - 1)^3)].  Derived from the
// closed forms p(b)-p(1) = -(b^2-1)^3/b and p(c)-p(1) = -(25b^2-1)^3/(3125 b^5).
double collinearity_form(Cpx b) {
  Cpx b2 = b * b;
  Cpx f = (b2 - 1.0);
  Cpx g = 25.0 * b2 - 1.0;
  Cpx w = b2 * b2 * f * f * f * std::conj(g * g * g);
  return w.imag();
}

}  // namespace

TEST_CASE("degree-5 family closed forms") {
  auto r = deg5_family(Cpx(1, 0));
  CHECK(std::abs(r.value_ends - Cpx(4, 0)) < 1e-12);  // 5b - 1/b at b = 1

  CHECK_THROWS_AS(deg5_family(Cpx(0, 0)), DomainError);

  std::mt19937 rng(33);
  std::uniform_real_distribution<double> rad(0.1, 3.0), ang(0, 6.2831853);
  for (int i = 0; i < 100; ++i) {
    Cpx b = polar(rad(rng), ang(rng));
    auto fam = deg5_family(b);  // throws if closed forms disagree with evaluation
    CHECK(fam.crit.critical_points.size() == 4);
    // difference identities behind the degeneracy analysis
    Cpx b2 = b * b;
    Cpx lhs1 = fam.value_b - fam.value_ends;
    Cpx rhs1 = -(b2 - 1.0) * (b2 - 1.0) * (b2 - 1.0) / b;
    CHECK(std::abs(lhs1 - rhs1) <= 1e-9 * std::max(1.0, std::abs(rhs1)));
    Cpx g = 25.0 * b2 - 1.0;
    Cpx lhs2 = fam.value_c - fam.value_ends;
    Cpx rhs2 = -g * g * g / (3125.0 * b2 * b2 * b);
    CHECK(std::abs(lhs2 - rhs2) <= 1e-9 * std::max(1.0, std::abs(rhs2)));
  }

  // the y-axis Shabat point: b = c there, two distinct critical values
  Cpx shabat_b(0, 1.0 / std::sqrt(5.0));
  auto fam = deg5_family(shabat_b);
  CHECK(fam.crit.distinct_value_count(1e-6) == 2);
  // a generic parameter sees three distinct values
  CHECK(deg5_family(Cpx(0.37, 0.22)).crit.distinct_value_count(1e-6) == 3);
}

TEST_CASE("degeneracy curve polynomial matches the collinearity form") {
  // Q vanishes on both axes by its leading factor
  CHECK(deg5_degeneracy(1, 0) == 0.0);
  CHECK(deg5_degeneracy(0.2, 0) == 0.0);
  CHECK(deg5_degeneracy(0, 1.0 / std::sqrt(3.0)) == 0.0);

  // off the axes Q equals one quarter of the cleared collinearity form
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> rad(0.2, 2.2), ang(0, 6.2831853);
  for (int i = 0; i < 200; ++i) {
    Cpx b = polar(rad(rng), ang(rng));
    double q = deg5_degeneracy(b.real(), b.imag());
    double w = collinearity_form(b) / 4.0;
    double scale = std::max(1.0, deg5_degeneracy_scale(b.real(), b.imag()));
    CHECK(std::abs(q - w) <= 1e-8 * scale);
  }

  // a corrupted coefficient would break the comparison (fault detection)
  {
    Cpx b(0.7, 0.4);
    double q_bad = deg5_degeneracy(b.real(), b.imag()) +
                   b.real() * b.imag() * std::pow(b.real(), 6);  // 231 -> 232
    double w = collinearity_form(b) / 4.0;
    double scale = std::max(1.0, deg5_degeneracy_scale(b.real(), b.imag()));
    CHECK(std::abs(q_bad - w) > 1e-8 * scale);
  }

  // symmetry under both axis reflections
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    double x = coord(rng), y = coord(rng);
    double q = deg5_degeneracy(x, y);
    CHECK(deg5_degeneracy(-x, -y) == doctest::Approx(q).epsilon(1e-12));
    CHECK(std::abs(deg5_degeneracy(-x, y)) == doctest::Approx(std::abs(q)).epsilon(1e-12));
    CHECK(std::abs(deg5_degeneracy(x, -y)) == doctest::Approx(std::abs(q)).epsilon(1e-12));
  }
}

TEST_CASE("collinear middle detection") {
  CHECK(collinear_middle(Cpx(0, 0), Cpx(1, 0), Cpx(2, 0), 1e-9) == 1);
  CHECK(collinear_middle(Cpx(2, 0), Cpx(0, 0), Cpx(1, 0), 1e-9) == 2);
  CHECK_FALSE(collinear_middle(Cpx(0, 0), Cpx(0, 1), Cpx(1, 0), 1e-9).has_value());
  CHECK_THROWS_AS(collinear_middle(Cpx(0, 0), Cpx(1e-12, 0), Cpx(1, 0), 1e-6),
                  DomainError);

  // points found on the curve by radial bisection are collinear triples
  int found = 0;
  for (int ai = 0; ai < 40 && found < 10; ++ai) {
    double theta = 0.15 + 1.3 * ai / 39.0;
    double prev_r = 0.05, prev_q = deg5_degeneracy(prev_r * std::cos(theta),
                                                   prev_r * std::sin(theta));
    for (int i = 1; i <= 600 && found < 10; ++i) {
      double r = 0.05 + (2.6 - 0.05) * i / 600;
      double q = deg5_degeneracy(r * std::cos(theta), r * std::sin(theta));
      if ((prev_q < 0) != (q < 0)) {
        double lo = prev_r, hi = r, qlo = prev_q;
        while (hi - lo > 1e-13) {
          double mid = 0.5 * (lo + hi);
          double qm = deg5_degeneracy(mid * std::cos(theta), mid * std::sin(theta));
          if ((qlo < 0) == (qm < 0)) {
            lo = mid;
            qlo = qm;
          } else {
            hi = mid;
          }
        }
        auto fam = deg5_family(polar(0.5 * (lo + hi), theta));
        if (std::abs(fam.value_ends - fam.value_b) > 1e-4 &&
            std::abs(fam.value_ends - fam.value_c) > 1e-4 &&
            std::abs(fam.value_b - fam.value_c) > 1e-4) {
          CHECK(collinear_middle(fam.value_ends, fam.value_b, fam.value_c, 1e-6)
                    .has_value());
          ++found;
        }
      }
      prev_r = r;
      prev_q = q;
    }
  }
  CHECK(found == 10);

  // far from the curve the values are not collinear
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> rad(0.3, 2.3), ang(0, 6.2831853);
  int checked = 0;
  while (checked < 10) {
    Cpx b = polar(rad(rng), ang(rng));
    if (std::abs(deg5_degeneracy(b.real(), b.imag())) <
        1e-3 * deg5_degeneracy_scale(b.real(), b.imag()))
      continue;
    auto fam = deg5_family(b);
    CHECK_FALSE(
        collinear_middle(fam.value_ends, fam.value_b, fam.value_c, 1e-6).has_value());
    ++checked;
  }
}

TEST_CASE("real Shabat parameters of the degree-5 family") {
  auto roots = deg5_shabat_parameters();
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - 0.10) <= 0.01);
  CHECK(std::abs(roots[1] - 1.89) <= 0.01);
  // sign change across each root
  auto f = [](double t) {
    double t2 = t * t, t3 = t2 * t, t5 = t3 * t2;
    return (-t5 + 3 * t3 + 2 * t) -
           (1.0 / (3125.0 * t5) - 3.0 / (125.0 * t3) - 2.0 / (5.0 * t));
  };
  for (double r : roots) CHECK(f(r - 1e-6) * f(r + 1e-6) < 0);
}

TEST_CASE("degree-6 family parametrization") {
  CHECK_THROWS_AS(deg6_family(Cpx(0, 0)), DomainError);
  CHECK_THROWS_AS(deg6_family(Cpx(std::sqrt(0.6), 0)), DomainError);
  CHECK_THROWS_AS(deg6_family(Cpx(-std::sqrt(0.6), 0)), DomainError);

  // z = i collapses onto a two-value polynomial with a = 0, b = -1
  auto at_i = deg6_family(Cpx(0, 1));
  CHECK(std::abs(at_i.a) < 1e-12);
  CHECK(std::abs(at_i.b - Cpx(-1, 0)) < 1e-12);
  CHECK(at_i.crit.distinct_value_count(1e-9) == 2);

  // the two real-axis and imaginary-axis vertices reported by coordinates
  CHECK(deg6_family(Cpx(1.73, 0)).crit.distinct_value_count(0.02) == 2);
  CHECK(deg6_family(Cpx(0, 0.44)).crit.distinct_value_count(0.02) == 2);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> rad(0.3, 2.0), ang(0, 6.2831853);
  int done = 0;
  while (done < 100) {
    Cpx z = polar(rad(rng), ang(rng));
    if (std::abs(z - Cpx(std::sqrt(0.6), 0)) < 0.05 ||
        std::abs(z + Cpx(std::sqrt(0.6), 0)) < 0.05)
      continue;
    auto fam = deg6_family(z);  // throws unless both identities hold at 1e-9
    // the remainder of p by x^2 + a x + b has degree zero
    std::vector<Cpx> rem = fam.p.coeff;
    for (int d = static_cast<int>(rem.size()) - 1; d >= 2; --d) {
      Cpx q = rem[d];
      rem[d] = 0;
      rem[d - 1] -= q * fam.a;
      rem[d - 2] -= q * fam.b;
    }
    double scale = std::max(1.0, std::abs(rem[0]));
    CHECK(std::abs(rem[1]) <= 1e-8 * scale);
    ++done;
  }
}

TEST_CASE("introductory example checks") {
  auto checks = verify_intro_example();
  REQUIRE(checks.size() == 5);
  for (const auto& rec : checks) {
    INFO(rec.check, " = ", rec.actual, " want ", rec.expected);
    CHECK(rec.pass);
  }
}

TEST_CASE("distinct value clustering") {
  CriticalData cd;
  cd.critical_values = {Cpx(0, 0), Cpx(1, 0), Cpx(1.000001, 0), Cpx(5, 0)};
  CHECK(cd.distinct_value_count(1e-3) == 3);
  CHECK(cd.distinct_value_count(1e-9) == 4);
  CHECK(cd.distinct_value_count(0.5) == 2);
}
