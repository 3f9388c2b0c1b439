#include "render.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "plane_tree.hpp"

namespace zolotarev {

using json = nlohmann::ordered_json;

namespace {

json class_record(const CactusClass& c) {
  json j;
  j["id"] = c.id;
  j["permutations"] = {{"star", c.g_star.cycle_string()},
                       {"circ", c.g_circ.cycle_string()},
                       {"bullet", c.g_bullet.cycle_string()}};
  j["aut_order"] = c.aut_order;
  j["group"] = {{"name", std::string(c.group.name_str())}, {"order", c.group.order}};
  return j;
}

json check_record(const CheckRecord& r) {
  return json{{"check", r.check},
              {"expected", r.expected},
              {"actual", r.actual},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

std::string checks_text(const std::vector<CheckRecord>& checks) {
  std::ostringstream os;
  for (const auto& r : checks)
    os << (r.pass ? "ok   " : "FAIL ") << r.check << ": " << r.actual << " (want "
       << r.expected << ", tol " << r.tolerance << ")\n";
  return os.str();
}

}  // namespace

std::string enumeration_text(const std::vector<CactusClass>& classes) {
  std::ostringstream os;
  os << "id  star            circ            bullet          aut  group\n";
  for (const auto& c : classes) {
    char line[160];
    std::snprintf(line, sizeof line, "%-3d %-15s %-15s %-15s %-4d %s(%lld)\n", c.id,
                  c.g_star.cycle_string().c_str(), c.g_circ.cycle_string().c_str(),
                  c.g_bullet.cycle_string().c_str(), c.aut_order,
                  std::string(c.group.name_str()).c_str(), c.group.order);
    os << line;
  }
  os << classes.size() << " classes\n";
  return os.str();
}

std::string enumeration_json(const std::vector<CactusClass>& classes) {
  json arr = json::array();
  for (const auto& c : classes) arr.push_back(class_record(c));
  return arr.dump(2) + "\n";
}

std::string class_json(const CactusClass& c) { return class_record(c).dump(2) + "\n"; }

std::string borders_text(const std::vector<CactusClass>& classes) {
  std::ostringstream os;
  for (const auto& c : classes) {
    os << "class " << c.id << ": " << c.g_star.cycle_string() << " "
       << c.g_circ.cycle_string() << " " << c.g_bullet.cycle_string() << "\n";
    for (Color mid : {Color::star, Color::circ, Color::bullet}) {
      TriTree t = degenerate(c, mid);
      BiTree bp = contract(t, ContractSide::merge_predecessor);
      BiTree bs = contract(t, ContractSide::merge_successor);
      CactusClass nb = transform(c, mid);
      os << "  middle=" << color_name(mid) << " wall=" << t.canon << "\n"
         << "    sigma_mid=" << dart_cycle_string(t.sigma_mid, t.n)
         << " sigma_ends=" << dart_cycle_string(t.sigma_ends, t.n) << "\n"
         << "    contract_pred=" << bp.canon << " rotations " << bp.rho_merged.cycle_string()
         << " / " << bp.rho_plain.cycle_string() << "\n"
         << "    contract_succ=" << bs.canon << " rotations " << bs.rho_merged.cycle_string()
         << " / " << bs.rho_plain.cycle_string() << "\n"
         << "    neighbor=(" << nb.g_star.cycle_string() << ", "
         << nb.g_circ.cycle_string() << ", " << nb.g_bullet.cycle_string() << ")\n";
    }
  }
  return os.str();
}

std::string borders_json(const std::vector<CactusClass>& classes) {
  json arr = json::array();
  for (const auto& c : classes) {
    json jc = class_record(c);
    json walls = json::array();
    for (Color mid : {Color::star, Color::circ, Color::bullet}) {
      TriTree t = degenerate(c, mid);
      json w;
      w["middle"] = color_name(mid);
      w["n"] = t.n;
      w["sigma_mid"] = dart_cycle_string(t.sigma_mid, t.n);
      w["sigma_ends"] = dart_cycle_string(t.sigma_ends, t.n);
      w["canonical"] = t.canon;
      for (auto side : {ContractSide::merge_predecessor, ContractSide::merge_successor}) {
        BiTree b = contract(t, side);
        json jb = {{"rho_merged", b.rho_merged.cycle_string()},
                   {"rho_plain", b.rho_plain.cycle_string()},
                   {"canonical", b.canon}};
        w[side == ContractSide::merge_predecessor ? "contract_merge_predecessor"
                                                  : "contract_merge_successor"] = jb;
      }
      CactusClass nb = transform(c, mid);
      w["neighbor"] = {{"star", nb.g_star.cycle_string()},
                       {"circ", nb.g_circ.cycle_string()},
                       {"bullet", nb.g_bullet.cycle_string()}};
      walls.push_back(w);
    }
    jc["walls"] = walls;
    arr.push_back(jc);
  }
  return arr.dump(2) + "\n";
}

namespace {
int count_failed(const std::vector<CheckRecord>& checks) {
  int n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}
}  // namespace

std::string analytic_deg5_report(Cpx b, double tol, bool as_json, int* failed_checks) {
  Deg5Result r = deg5_family(b);
  double q = deg5_degeneracy(b.real(), b.imag());
  auto mid = collinear_middle(r.value_ends, r.value_b, r.value_c, tol);
  static const char* kNames[3] = {"ends", "b", "c"};
  int distinct = r.crit.distinct_value_count(tol);
  auto roots = deg5_shabat_parameters();

  std::vector<CheckRecord> checks;
  const Cpx closed[4] = {r.value_ends, r.value_ends, r.value_b, r.value_c};
  const char* names[4] = {"p(1)", "p(-1)", "p(b)", "p(c)"};
  for (int i = 0; i < 4; ++i) {
    CheckRecord rec;
    rec.check = std::string(names[i]) + " closed form";
    rec.expected = format_complex(closed[i]);
    rec.actual = format_complex(r.crit.critical_values[i]);
    rec.tolerance = 1e-9;
    rec.pass = std::abs(r.crit.critical_values[i] - closed[i]) <=
               1e-9 * std::max(1.0, std::abs(closed[i]));
    checks.push_back(rec);
  }

  if (failed_checks) *failed_checks = count_failed(checks);
  if (as_json) {
    json j;
    j["b"] = format_complex(b);
    j["c"] = format_complex(r.c);
    json pts = json::array(), vals = json::array();
    for (Cpx p : r.crit.critical_points) pts.push_back(format_complex(p));
    for (Cpx v : r.crit.critical_values) vals.push_back(format_complex(v));
    j["critical_points"] = pts;
    j["critical_values"] = vals;
    j["distinct_value_count"] = distinct;
    j["degeneracy_Q"] = q;
    j["collinear_middle"] = mid ? json(kNames[*mid]) : json(nullptr);
    j["shabat_parameters"] = {roots[0], roots[1]};
    json jc = json::array();
    for (const auto& rec : checks) jc.push_back(check_record(rec));
    j["checks"] = jc;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "degree-5 family at b=" << format_complex(b) << " (c=" << format_complex(r.c)
     << ")\n";
  for (size_t i = 0; i < r.crit.critical_points.size(); ++i)
    os << "  p(" << format_complex(r.crit.critical_points[i])
       << ") = " << format_complex(r.crit.critical_values[i]) << "\n";
  os << "  distinct critical values (tol " << tol << "): " << distinct << "\n"
     << "  degeneracy Q(x,y) = " << q << "\n"
     << "  collinear middle: " << (mid ? kNames[*mid] : "none") << "\n"
     << "  Shabat parameters on (0,3): " << roots[0] << ", " << roots[1] << "\n"
     << checks_text(checks);
  return os.str();
}

std::string analytic_deg6_report(Cpx z, double tol, bool as_json, int* failed_checks) {
  Deg6Result r = deg6_family(z);
  int distinct = r.crit.distinct_value_count(tol);

  const auto& vs = r.crit.critical_values;
  std::vector<CheckRecord> checks;
  {
    CheckRecord rec;
    rec.check = "p(1) = p(-1)";
    rec.expected = "0";
    rec.actual = format_complex(vs[0] - vs[1]);
    rec.tolerance = 1e-9;
    rec.pass = true;  // deg6_family would have thrown otherwise
    checks.push_back(rec);
    rec.check = "p(root1) = p(root2)";
    rec.actual = format_complex(vs[2] - vs[3]);
    checks.push_back(rec);
  }

  if (failed_checks) *failed_checks = count_failed(checks);
  if (as_json) {
    json j;
    j["z"] = format_complex(z);
    j["a"] = format_complex(r.a);
    j["b"] = format_complex(r.b);
    j["c"] = format_complex(r.c);
    j["roots"] = {format_complex(r.root1), format_complex(r.root2)};
    json vals = json::array();
    for (Cpx v : vs) vals.push_back(format_complex(v));
    j["critical_values"] = vals;
    j["distinct_value_count"] = distinct;
    json jc = json::array();
    for (const auto& rec : checks) jc.push_back(check_record(rec));
    j["checks"] = jc;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "degree-6 family at z=" << format_complex(z) << "\n"
     << "  a=" << format_complex(r.a) << " b=" << format_complex(r.b)
     << " c=" << format_complex(r.c) << "\n"
     << "  quadratic roots: " << format_complex(r.root1) << ", "
     << format_complex(r.root2) << "\n";
  for (size_t i = 0; i < r.crit.critical_points.size(); ++i)
    os << "  p(" << format_complex(r.crit.critical_points[i])
       << ") = " << format_complex(vs[i]) << "\n";
  os << "  distinct critical values (tol " << tol << "): " << distinct << "\n"
     << checks_text(checks);
  return os.str();
}

std::string analytic_intro_report(bool as_json, int* failed_checks) {
  auto checks = verify_intro_example();
  if (failed_checks) *failed_checks = count_failed(checks);
  if (as_json) {
    json arr = json::array();
    for (const auto& rec : checks) arr.push_back(check_record(rec));
    return arr.dump(2) + "\n";
  }
  return "introductory example (monic quintic, critical points i, -i, 1, a)\n" +
         checks_text(checks);
}

}  // namespace zolotarev
