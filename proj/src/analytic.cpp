#include "analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace zolotarev {

namespace {

double rel_scale(std::initializer_list<Cpx> vs) {
  double s = 1.0;
  for (Cpx v : vs) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

Cpx ComplexPoly::eval(Cpx x) const {
  Cpx acc = 0;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexPoly ComplexPoly::derivative() const {
  ComplexPoly d;
  for (size_t i = 1; i < coeff.size(); ++i) d.coeff.push_back(coeff[i] * Cpx(double(i), 0));
  d.trim();
  return d;
}

void ComplexPoly::trim() {
  while (coeff.size() > 1 && std::abs(coeff.back()) == 0.0) coeff.pop_back();
}

int CriticalData::distinct_value_count(double tol) const {
  const auto& vs = critical_values;
  const int n = static_cast<int>(vs.size());
  double spread = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) spread = std::max(spread, std::abs(vs[i] - vs[j]));
  const double thresh = tol * std::max(1.0, spread);

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](auto&& self, int x) -> int {
    return parent[x] == x ? x : parent[x] = self(self, parent[x]);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(vs[i] - vs[j]) <= thresh) parent[find(find, i)] = find(find, j);
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (find(find, i) == i) ++count;
  return count;
}

std::string format_complex(Cpx z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.10g", z.real());
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

Deg5Result deg5_family(Cpx b) {
  if (b == Cpx(0, 0)) throw DomainError("deg5 family is undefined at b = 0");
  Cpx c = -1.0 / (5.0 * b);
  Cpx s = b + c;  // bc = -1/5 identically

  // p = 20 * integral of (x^2-1)(x-b)(x-c) = 4x^5 - 5s x^4 - 8x^3 + 10s x^2 + 4x
  Deg5Result r;
  r.b = b;
  r.c = c;
  r.p.coeff = {Cpx(0, 0), Cpx(4, 0), 10.0 * s, Cpx(-8, 0), -5.0 * s, Cpx(4, 0)};

  r.crit.critical_points = {Cpx(1, 0), Cpx(-1, 0), b, c};
  for (Cpx x : r.crit.critical_points) r.crit.critical_values.push_back(r.p.eval(x));

  r.value_ends = 5.0 * b - 1.0 / b;
  Cpx b2 = b * b, b3 = b2 * b, b5 = b3 * b2;
  r.value_b = -b5 + 3.0 * b3 + 2.0 * b;
  r.value_c = 1.0 / (3125.0 * b5) - 3.0 / (125.0 * b3) - 2.0 / (5.0 * b);

  const Cpx closed[4] = {r.value_ends, r.value_ends, r.value_b, r.value_c};
  for (int i = 0; i < 4; ++i) {
    double scale = rel_scale({closed[i]});
    if (std::abs(r.crit.critical_values[i] - closed[i]) > 1e-9 * scale)
      throw VerificationError("closed-form critical value disagrees with evaluation");
  }
  return r;
}

namespace {

// Верbatim integer coefficient table of the inner degree-14 polynomial; the
// full curve polynomial is xy times this.
struct Term {
  int xe, ye;
  double co;
};
constexpr Term kDegeneracyTerms[] = {
    {14, 0, 15625},   {12, 2, 78125},   {10, 4, 140625},  {8, 6, 78125},
    {6, 8, -78125},   {4, 10, -140625}, {2, 12, -78125},  {0, 14, -15625},
    {12, 0, -26250},  {10, 2, -142500}, {8, 4, -333750},  {6, 6, -435000},
    {4, 8, -333750},  {2, 10, -142500}, {0, 12, -26250},
    {10, 0, 5775},    {8, 2, 16125},    {6, 4, 10350},    {4, 6, -10350},
    {2, 8, -16125},   {0, 10, -5775},
    {8, 0, 4660},     {6, 2, 20480},    {4, 4, 31512},    {2, 6, 20480},
    {0, 8, 4660},
    {6, 0, 231},      {4, 2, 183},      {2, 4, -183},     {0, 6, -231},
    {4, 0, -42},      {2, 2, -60},      {0, 4, -42},
    {2, 0, 1},        {0, 2, -1},
};

double pow_int(double v, int e) {
  double r = 1;
  for (int i = 0; i < e; ++i) r *= v;
  return r;
}

double degeneracy_inner(double x, double y) {
  // Kahan compensated summation over the fixed term list.
  double sum = 0, comp = 0;
  for (const Term& t : kDegeneracyTerms) {
    double term = t.co * pow_int(x, t.xe) * pow_int(y, t.ye);
    double yk = term - comp;
    double tk = sum + yk;
    comp = (tk - sum) - yk;
    sum = tk;
  }
  return sum;
}

}  // namespace

double deg5_degeneracy(double x, double y) { return x * y * degeneracy_inner(x, y); }

double deg5_degeneracy_scale(double x, double y) {
  double sum = 0;
  for (const Term& t : kDegeneracyTerms)
    sum += std::abs(t.co) * pow_int(std::abs(x), t.xe) * pow_int(std::abs(y), t.ye);
  return std::abs(x * y) * sum;
}

std::optional<int> collinear_middle(Cpx v1, Cpx v2, Cpx v3, double tol) {
  const Cpx v[3] = {v1, v2, v3};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(v[i] - v[j]) <= tol)
        throw DomainError("collinearity test needs pairwise distinct values");

  for (int mid = 0; mid < 3; ++mid) {
    int p = (mid + 1) % 3, q = (mid + 2) % 3;
    Cpx seg = v[q] - v[p];
    double len2 = std::norm(seg);
    Cpx rel = v[mid] - v[p];
    double cross = std::abs(rel.real() * seg.imag() - rel.imag() * seg.real());
    if (cross / len2 > tol) continue;
    double tproj = (rel.real() * seg.real() + rel.imag() * seg.imag()) / len2;
    if (tproj > 0.0 && tproj < 1.0) return mid;
  }
  return std::nullopt;
}

std::vector<double> deg5_shabat_parameters() {
  auto f = [](double t) {
    double t2 = t * t, t3 = t2 * t, t5 = t3 * t2;
    double vb = -t5 + 3 * t3 + 2 * t;
    double vc = 1.0 / (3125.0 * t5) - 3.0 / (125.0 * t3) - 2.0 / (5.0 * t);
    return vb - vc;
  };
  const double lo = 1e-3, hi = 3.0;
  const int steps = 6000;
  std::vector<double> roots;
  double prev_t = lo, prev_f = f(lo);
  for (int i = 1; i <= steps; ++i) {
    double t = lo + (hi - lo) * i / steps;
    double ft = f(t);
    if ((prev_f < 0 && ft > 0) || (prev_f > 0 && ft < 0)) {
      double a = prev_t, b = t, fa = prev_f;
      while (b - a > 1e-10) {
        double m = 0.5 * (a + b), fm = f(m);
        if ((fa < 0) == (fm < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_t = t;
    prev_f = ft;
  }
  if (roots.size() != 2)
    throw VerificationError("expected exactly two Shabat parameters on (0, 3)");
  return roots;
}

Deg6Result deg6_family(Cpx z) {
  const double s3 = std::sqrt(3.0);
  const Cpx excl = Cpx(std::sqrt(0.6), 0);
  if (std::abs(z) < 1e-12 || std::abs(z - excl) < 1e-12 || std::abs(z + excl) < 1e-12)
    throw DomainError("deg6 family is undefined at z = 0 and z = +-sqrt(3/5)");

  Deg6Result r;
  r.z = z;
  Cpx z2 = z * z;
  r.a = s3 * (z2 + 1.0) / (2.0 * z);
  r.b = (z2 - 1.0) / 2.0;
  r.c = s3 * (z2 + 1.0) / (z * (5.0 * z2 - 3.0));

  // p = integral of (x^2-1)(x^2+ax+b)(x-c)
  Cpx a = r.a, b = r.b, c = r.c;
  r.p.coeff = {Cpx(0, 0),         b * c,           (a * c - b) / 2.0,
               (c - a - b * c) / 3.0, (b - a * c - 1.0) / 4.0, (a - c) / 5.0,
               Cpx(1.0 / 6.0, 0)};

  Cpx disc = std::sqrt(a * a - 4.0 * b);
  r.root1 = (-a + disc) / 2.0;
  r.root2 = (-a - disc) / 2.0;
  r.crit.critical_points = {Cpx(1, 0), Cpx(-1, 0), r.root1, r.root2, c};
  for (Cpx x : r.crit.critical_points) r.crit.critical_values.push_back(r.p.eval(x));

  const auto& vs = r.crit.critical_values;
  double scale = rel_scale({vs[0], vs[1], vs[2], vs[3]});
  if (std::abs(vs[0] - vs[1]) > 1e-9 * scale)
    throw VerificationError("deg6 parametrization violates p(1) = p(-1)");
  if (std::abs(vs[2] - vs[3]) > 1e-9 * scale)
    throw VerificationError("deg6 parametrization violates equal quadratic-root values");
  return r;
}

std::vector<CheckRecord> verify_intro_example() {
  // Monic quintic: p = 5 * integral of (x^2+1)(x-1)(x-a).
  const Cpx a = Cpx(-2.0 / 3.0, std::sqrt(35.0) / 3.0);
  ComplexPoly p;
  Cpx one_a = 1.0 + a;
  p.coeff = {Cpx(0, 0), 5.0 * a, -2.5 * one_a, (5.0 / 3.0) * one_a, -1.25 * one_a,
             Cpx(1, 0)};

  const Cpx i(0, 1);
  struct Item {
    const char* name;
    Cpx point;
    Cpx target;
  };
  const Item items[] = {
      {"p(i)", i, Cpx(-6.1, -0.4)},
      {"p(-i)", -i, Cpx(7, 5.3)},
      {"p(1)", Cpx(1, 0), Cpx(-3, 5.7)},
      {"p(a)", a, Cpx(-3, 5.7)},
  };

  std::vector<CheckRecord> out;
  for (const Item& it : items) {
    Cpx actual = p.eval(it.point);
    CheckRecord rec;
    rec.check = it.name;
    rec.expected = format_complex(it.target);
    rec.actual = format_complex(actual);
    rec.tolerance = 0.1;
    rec.pass = std::abs(actual - it.target) <= 0.1;
    out.push_back(rec);
  }

  Cpx v1 = p.eval(Cpx(1, 0)), va = p.eval(a);
  CheckRecord rec;
  rec.check = "p(1) = p(a)";
  rec.expected = "0";
  rec.actual = format_complex(v1 - va);
  rec.tolerance = 1e-9;
  rec.pass = std::abs(v1 - va) <= 1e-9 * rel_scale({v1});
  out.push_back(rec);
  return out;
}

}  // namespace zolotarev
