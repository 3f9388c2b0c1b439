#include "verify.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "analytic.hpp"
#include "atlas.hpp"
#include "cactus.hpp"
#include "plane_tree.hpp"

namespace zolotarev {

namespace {

void set_fail(Criterion& c, const std::string& why) {
  c.pass = false;
  c.detail = why;
}

std::vector<CactusClass> classes_with_order(const std::vector<CactusClass>& all,
                                            long long order) {
  std::vector<CactusClass> out;
  for (const auto& c : all)
    if (c.group.order == order) out.push_back(c);
  return out;
}

std::multiset<int> vertex_degree_multiset(const Atlas& a, int comp) {
  std::multiset<int> deg;
  for (const auto& w : a.components[comp].vertices)
    deg.insert(a.vertex_degree(comp, w));
  return deg;
}

std::string join_ints(const std::multiset<int>& m) {
  std::ostringstream os;
  for (int v : m) os << v << ' ';
  return os.str();
}

// --- criterion bodies -------------------------------------------------

void crit_deg5_enumeration(Criterion& c) {
  auto classes = enumerate_cacti(Passport(5, 1, 1, 2));
  int aut1 = 0;
  for (const auto& cc : classes)
    if (cc.aut_order == 1) ++aut1;
  c.pass = classes.size() == 5 && aut1 == 5;
  std::ostringstream os;
  os << "classes=" << classes.size() << " with_aut1=" << aut1 << " (want 5/5)";
  c.detail = os.str();
}

void crit_deg5_borders(Criterion& c) {
  Passport pp(5, 1, 1, 2);
  Atlas a = build_atlas(enumerate_cacti(pp), "any", pp);
  int twice = 0, once = 0;
  for (const auto& e : a.edges)
    (e.self_adjacent ? once : twice)++;
  c.pass = a.edges.size() == 8 && twice == 7 && once == 1;
  std::ostringstream os;
  os << "wall_classes=" << a.edges.size() << " two_slot=" << twice
     << " one_slot=" << once << " (want 8/7/1)";
  c.detail = os.str();
}

void crit_deg5_contractions(Criterion& c) {
  Passport pp(5, 1, 1, 2);
  Atlas a = build_atlas(enumerate_cacti(pp), "any", pp);
  std::multiset<int> degs = vertex_degree_multiset(a, 0);
  c.pass = a.components.size() == 1 && a.components[0].V == 4 &&
           degs == std::multiset<int>{2, 3, 4, 7};
  std::ostringstream os;
  os << "bitree_classes=" << (a.components.empty() ? 0 : a.components[0].V)
     << " degrees={" << join_ints(degs) << "} (want 4, {2 3 4 7})";
  c.detail = os.str();
}

void crit_deg5_atlas(Criterion& c) {
  Passport pp(5, 1, 1, 2);
  Atlas a = build_atlas(enumerate_cacti(pp), "any", pp);
  c.pass = a.components.size() == 1;
  if (c.pass) {
    const auto& s = a.components[0];
    c.pass = s.F == 5 && s.E == 8 && s.V == 4 && s.chi == 1 &&
             s.surface == "projective_plane";
  }
  c.detail = summary_text(a);
  c.detail.pop_back();
}

void crit_deg6_enumeration(Criterion& c) {
  auto classes = enumerate_cacti(Passport(6, 2, 2, 1));
  int aut2 = 0, s6 = 0;
  for (const auto& cc : classes) {
    if (cc.aut_order == 2) ++aut2;
    if (cc.group.order == 720) ++s6;
  }
  c.pass = classes.size() == 15 && aut2 == 3 && s6 == 12;
  std::ostringstream os;
  os << "classes=" << classes.size() << " aut2=" << aut2 << " order720=" << s6
     << " (want 15/3/12)";
  c.detail = os.str();
}

void crit_deg6_atlas(Criterion& c) {
  Passport pp(6, 2, 2, 1);
  auto s6 = classes_with_order(enumerate_cacti(pp), 720);
  Atlas a = build_atlas(s6, "symmetric", pp);
  bool shape = a.components.size() == 1;
  if (shape) {
    const auto& s = a.components[0];
    shape = s.F == 12 && s.E == 18 && s.V == 8 && s.chi == 2 && s.surface == "sphere";
  }
  std::multiset<int> degs = shape ? vertex_degree_multiset(a, 0) : std::multiset<int>{};
  bool degs_ok = degs == std::multiset<int>{2, 3, 4, 4, 5, 6, 6, 6};
  c.pass = shape && degs_ok;
  std::ostringstream os;
  os << summary_text(a) << "vertex degrees={" << join_ints(degs)
     << "} (want {2 3 4 4 5 6 6 6})";
  c.detail = os.str();
}

void crit_deg7_enumeration(Criterion& c) {
  auto classes = enumerate_cacti(Passport(7, 2, 2, 2));
  int psl = 0, a7 = 0;
  for (const auto& cc : classes) {
    if (cc.group.order == 168) ++psl;
    if (cc.group.order == 2520) ++a7;
  }
  c.pass = classes.size() == 20 && psl == 6 && a7 == 14;
  std::ostringstream os;
  os << "classes=" << classes.size() << " order168=" << psl << " order2520=" << a7
     << " (want 20/6/14)";
  c.detail = os.str();
}

void crit_deg7_atlas(Criterion& c) {
  Passport pp(7, 2, 2, 2);
  auto a7 = classes_with_order(enumerate_cacti(pp), 2520);
  Atlas a = build_atlas(a7, "alternating", pp);

  bool shape = a.components.size() == 2;
  if (shape)
    for (const auto& s : a.components)
      shape = shape && s.F == 7 && s.E == 11 && s.V == 5 && s.chi == 1 &&
              s.surface == "projective_plane";

  bool edges22 = a.edges.size() == 22;

  std::set<std::string> all_words;
  int self_per_comp[2] = {0, 0};
  int shared = 0;
  if (shape) {
    for (const auto& s : a.components)
      for (const auto& w : s.vertices) all_words.insert(w);
    for (const auto& w : a.components[0].vertices)
      if (std::find(a.components[1].vertices.begin(), a.components[1].vertices.end(),
                    w) != a.components[1].vertices.end())
        ++shared;
    for (int ci = 0; ci < 2; ++ci)
      for (const auto& ekey : a.components[ci].edges) {
        const auto& e = *std::find_if(a.edges.begin(), a.edges.end(),
                                      [&](const EdgeRecord& x) { return x.key == ekey; });
        if (e.self_adjacent) ++self_per_comp[ci];
      }
  }
  (void)0;
  bool words_ok = all_words.size() == 8 && shared == 2;
  bool self_ok = self_per_comp[0] == 1 && self_per_comp[1] == 1;
  c.pass = shape && edges22 && words_ok && self_ok;
  std::ostringstream os;
  os << summary_text(a) << "edges=" << a.edges.size() << " distinct_bitree_words="
     << all_words.size() << " shared=" << shared << " self_adjacent="
     << self_per_comp[0] << "+" << self_per_comp[1]
     << " (want 22 words=8 shared=2 self=1+1)";
  c.detail = os.str();
}

void crit_transform_involution(Criterion& c) {
  struct Family {
    Passport pp;
    long long order_filter;  // 0 = all
  };
  const Family fams[] = {{Passport(5, 1, 1, 2), 0},
                         {Passport(6, 2, 2, 1), 720},
                         {Passport(7, 2, 2, 2), 2520}};
  int slots_checked = 0;
  for (const auto& fam : fams) {
    auto classes = enumerate_cacti(fam.pp);
    if (fam.order_filter) classes = classes_with_order(classes, fam.order_filter);
    std::map<std::string, const CactusClass*> by_key;
    for (const auto& cc : classes) by_key[cc.key()] = &cc;

    // wall words up to the side exchange between the two bordering cells
    auto wall_word = [](const TriTree& t) {
      std::string w = t.canon.substr(t.canon.find(':'));
      std::string o = side_swapped(t).canon;
      return std::min(w, o.substr(o.find(':')));
    };

    for (const auto& cc : classes)
      for (Color mid : {Color::star, Color::circ, Color::bullet}) {
        ++slots_checked;
        WallNeighbor nb = wall_neighbor(cc, mid);
        auto it = by_key.find(nb.neighbor.key());
        if (it == by_key.end())
          return set_fail(c, "transform leaves the family");
        WallNeighbor back = wall_neighbor(*it->second, nb.slot_middle);
        if (back.neighbor.key() != cc.key() || back.slot_middle != mid)
          return set_fail(c, "transform applied twice does not return the slot");
        if (wall_word(degenerate(*it->second, nb.slot_middle)) !=
            wall_word(degenerate(cc, mid)))
          return set_fail(c, "transform pairing disagrees with wall word matching");
      }
  }
  c.pass = true;
  std::ostringstream os;
  os << "involution and word pairing verified on " << slots_checked << " slots";
  c.detail = os.str();
}

void crit_intro_example(Criterion& c) {
  auto checks = verify_intro_example();
  c.pass = true;
  std::ostringstream os;
  for (const auto& r : checks) {
    if (!r.pass) c.pass = false;
    os << r.check << "=" << r.actual << " (want " << r.expected << " tol "
       << r.tolerance << (r.pass ? ", ok" : ", FAIL") << ") ";
  }
  c.detail = os.str();
}

void crit_deg5_analytic(Criterion& c) {
  std::ostringstream os;
  bool ok = true;

  // axis points of the curve polynomial
  const double q1 = deg5_degeneracy(1, 0);
  const double q15 = deg5_degeneracy(0.2, 0);
  const double qy = deg5_degeneracy(0, 1.0 / std::sqrt(3.0));
  bool axis_ok = std::abs(q1) <= 1e-9 && std::abs(q15) <= 1e-9 && std::abs(qy) <= 1e-9;
  os << "Q(1,0)=" << q1 << " Q(1/5,0)=" << q15 << " Q(0,1/sqrt3)=" << qy << "; ";
  ok = ok && axis_ok;

  // Q-zero => collinear, at 50 bisection points off the axes
  int found = 0;
  bool collinear_ok = true;
  for (int quadrant = 0; quadrant < 4 && found < 50; ++quadrant) {
    for (int ai = 0; ai < 60 && found < 50; ++ai) {
      double theta = 0.05 + (1.47 - 0.05) * ai / 59.0 + quadrant * 1.5707963267948966;
      double ct = std::cos(theta), st = std::sin(theta);
      const int steps = 1200;
      double prev_r = 0.02, prev_q = deg5_degeneracy(prev_r * ct, prev_r * st);
      for (int i = 1; i <= steps && found < 50; ++i) {
        double r = 0.02 + (2.8 - 0.02) * i / steps;
        double q = deg5_degeneracy(r * ct, r * st);
        if ((prev_q < 0 && q > 0) || (prev_q > 0 && q < 0)) {
          double a = prev_r, b = r, qa = prev_q;
          while (b - a > 1e-13) {
            double m = 0.5 * (a + b);
            double qm = deg5_degeneracy(m * ct, m * st);
            if ((qa < 0) == (qm < 0)) {
              a = m;
              qa = qm;
            } else {
              b = m;
            }
          }
          double rr = 0.5 * (a + b);
          Cpx bpt(rr * ct, rr * st);
          auto fam = deg5_family(bpt);
          bool distinct = std::abs(fam.value_ends - fam.value_b) > 1e-5 &&
                          std::abs(fam.value_ends - fam.value_c) > 1e-5 &&
                          std::abs(fam.value_b - fam.value_c) > 1e-5;
          if (distinct) {
            ++found;
            if (!collinear_middle(fam.value_ends, fam.value_b, fam.value_c, 1e-6))
              collinear_ok = false;
          }
        }
        prev_r = r;
        prev_q = q;
      }
    }
  }
  os << "curve_points=" << found << (collinear_ok ? " all collinear" : " NOT collinear")
     << "; ";
  ok = ok && found >= 50 && collinear_ok;

  // far from the curve => not collinear
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> rad(0.25, 2.5);
  int far_checked = 0;
  bool far_ok = true;
  while (far_checked < 50) {
    double r = rad(rng), th = ang(rng);
    double x = r * std::cos(th), y = r * std::sin(th);
    double q = deg5_degeneracy(x, y);
    if (std::abs(q) < 1e-3 * deg5_degeneracy_scale(x, y)) continue;
    auto fam = deg5_family(Cpx(x, y));
    ++far_checked;
    if (collinear_middle(fam.value_ends, fam.value_b, fam.value_c, 1e-6)) far_ok = false;
  }
  os << "off_curve_points=50" << (far_ok ? " none collinear" : " SOME collinear") << "; ";
  ok = ok && far_ok;

  // Shabat parameters
  auto roots = deg5_shabat_parameters();
  bool roots_ok = roots.size() == 2 && std::abs(roots[0] - 0.10) <= 0.01 &&
                  std::abs(roots[1] - 1.89) <= 0.01;
  os << "shabat_roots=" << roots[0] << "," << roots[1] << " (want 0.10, 1.89 +-0.01); ";
  ok = ok && roots_ok;

  // closed forms vs direct evaluation
  std::mt19937 rng2(7);
  std::uniform_real_distribution<double> rad2(0.1, 3.0);
  bool closed_ok = true;
  for (int i = 0; i < 100; ++i) {
    double r = rad2(rng2), th = ang(rng2);
    auto fam = deg5_family(Cpx(r * std::cos(th), r * std::sin(th)));
    auto near = [&](Cpx u, Cpx v) {
      return std::abs(u - v) <= 1e-9 * std::max(1.0, std::abs(v));
    };
    closed_ok = closed_ok && near(fam.crit.critical_values[0], fam.value_ends) &&
                near(fam.crit.critical_values[1], fam.value_ends) &&
                near(fam.crit.critical_values[2], fam.value_b) &&
                near(fam.crit.critical_values[3], fam.value_c);
  }
  os << "closed_forms_100=" << (closed_ok ? "ok" : "FAIL");
  ok = ok && closed_ok;

  c.pass = ok;
  c.detail = os.str();
}

void crit_deg6_analytic(Criterion& c) {
  std::ostringstream os;
  bool ok = true;

  std::mt19937 rng(41);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> rad(0.3, 2.0);
  int done = 0;
  bool ids_ok = true;
  while (done < 100) {
    double r = rad(rng), th = ang(rng);
    Cpx z(r * std::cos(th), r * std::sin(th));
    if (std::abs(z) < 0.05 || std::abs(z - Cpx(std::sqrt(0.6), 0)) < 0.05 ||
        std::abs(z + Cpx(std::sqrt(0.6), 0)) < 0.05)
      continue;
    try {
      auto fam = deg6_family(z);  // throws if either identity fails at 1e-9
      ++done;
      (void)fam;
    } catch (const VerificationError&) {
      ids_ok = false;
      ++done;
    }
  }
  os << "parametrization_identities_100=" << (ids_ok ? "ok" : "FAIL") << "; ";
  ok = ok && ids_ok;

  int at_i = deg6_family(Cpx(0, 1)).crit.distinct_value_count(1e-9);
  int at_gamma = deg6_family(Cpx(1.73, 0)).crit.distinct_value_count(0.02);
  int at_beta = deg6_family(Cpx(0, 0.44)).crit.distinct_value_count(0.02);
  bool shabat_ok = at_i == 2 && at_gamma == 2 && at_beta == 2;
  os << "distinct(i)=" << at_i << " distinct(1.73)=" << at_gamma
     << " distinct(0.44i)=" << at_beta << " (want 2/2/2)";
  ok = ok && shabat_ok;

  c.pass = ok;
  c.detail = os.str();
}

std::string run_command(const std::string& cmd, int* exit_code) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) {
    *exit_code = -1;
    return out;
  }
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
  int status = pclose(f);
  *exit_code = WEXITSTATUS(status);
  return out;
}

void crit_determinism(Criterion& c, const std::string& cli_path) {
  std::ostringstream os;
  bool ok = true;
  if (!cli_path.empty()) {
    const std::string base = "'" + cli_path + "' ";
    const char* invocations[] = {
        "verify --only enumeration",
        "atlas --degree 6 --passport 2,2,1 --group symmetric --format json",
    };
    for (const char* inv : invocations) {
      int rc1 = 0, rc2 = 0;
      std::string first = run_command(base + inv + " 2>/dev/null", &rc1);
      std::string second = run_command(base + inv + " 2>/dev/null", &rc2);
      bool same = rc1 == 0 && rc2 == 0 && !first.empty() && first == second;
      os << "`" << inv << "`: " << (same ? "byte-identical" : "DIFFERS") << "; ";
      ok = ok && same;
    }
  } else {
    Passport p6(6, 2, 2, 1);
    auto run_atlas = [&] {
      return export_json(
          build_atlas(classes_with_order(enumerate_cacti(p6), 720), "symmetric", p6));
    };
    bool same = run_atlas() == run_atlas();
    os << "in-process atlas json: " << (same ? "byte-identical" : "DIFFERS")
       << " (no CLI path provided); ";
    ok = ok && same;
  }
  c.pass = ok;
  c.detail = os.str();
}

}  // namespace

std::vector<Criterion> run_acceptance(const std::string& only,
                                      const std::string& cli_path) {
  struct Entry {
    int id;
    const char* category;
    const char* name;
    void (*fn)(Criterion&);
  };
  static const Entry entries[] = {
      {1, "enumeration", "degree-5 passport (1,1,2): 5 classes, all asymmetric",
       crit_deg5_enumeration},
      {2, "borders", "degree-5 walls: 15 slots collapse to 8, split 7x2 + 1x1",
       crit_deg5_borders},
      {3, "borders", "degree-5 contractions: 4 trees with degrees {7,4,3,2}",
       crit_deg5_contractions},
      {4, "atlas", "degree-5 moduli map: F=5 E=8 V=4 chi=1 projective plane",
       crit_deg5_atlas},
      {5, "enumeration", "degree-6 passport (2,2,1): 15 classes, 3 symmetric, 12 of order 720",
       crit_deg6_enumeration},
      {6, "atlas", "degree-6 moduli map on the 12: F=12 E=18 V=8 chi=2 sphere",
       crit_deg6_atlas},
      {7, "enumeration", "degree-7 passport (2,2,2): 20 classes, 6 of order 168, 14 of order 2520",
       crit_deg7_enumeration},
      {8, "atlas", "degree-7 moduli map on the 14: two projective components",
       crit_deg7_atlas},
      {9, "transform", "wall crossing is an involution matching wall words",
       crit_transform_involution},
      {10, "analytic", "introductory example: displayed values and p(1)=p(a)",
       crit_intro_example},
      {11, "analytic", "degree-5 curve: axis points, collinearity, Shabat roots",
       crit_deg5_analytic},
      {12, "analytic", "degree-6 parametrization identities and Shabat vertices",
       crit_deg6_analytic},
  };

  auto selected = [&](const std::string& cat) {
    if (only.empty()) return true;
    size_t pos = 0;
    while (pos < only.size()) {
      size_t comma = only.find(',', pos);
      if (comma == std::string::npos) comma = only.size();
      if (only.substr(pos, comma - pos) == cat) return true;
      pos = comma + 1;
    }
    return false;
  };

  std::vector<Criterion> out;
  for (const auto& e : entries) {
    if (!selected(e.category)) continue;
    Criterion c{e.id, e.category, e.name, false, ""};
    try {
      e.fn(c);
    } catch (const std::exception& ex) {
      set_fail(c, std::string("exception: ") + ex.what());
    }
    out.push_back(std::move(c));
  }
  if (selected("determinism")) {
    Criterion c{13, "determinism", "repeated verify and atlas runs are byte-identical",
                false, ""};
    try {
      crit_determinism(c, cli_path);
    } catch (const std::exception& ex) {
      set_fail(c, std::string("exception: ") + ex.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string render_criteria(const std::vector<Criterion>& cs) {
  std::ostringstream os;
  for (const auto& c : cs) {
    os << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "/" << c.category << "] "
       << c.name << "\n";
    if (!c.detail.empty()) {
      std::istringstream lines(c.detail);
      std::string line;
      while (std::getline(lines, line)) os << "       " << line << "\n";
    }
  }
  int passed = 0;
  for (const auto& c : cs)
    if (c.pass) ++passed;
  os << passed << "/" << cs.size() << " criteria passed\n";
  return os.str();
}

bool all_pass(const std::vector<Criterion>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Criterion& c) { return c.pass; });
}

}  // namespace zolotarev
