#include "atlas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace zolotarev {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

bool symmetric_passport(const Passport& p) { return p.k == p.l && p.l == p.m; }

bool rotation_fixed(const CactusClass& c) {
  auto t = c.triple();
  return rotate_colors(t) == t;
}

// Gauge-invariant edge key: the canonical walk word of the wall tree,
// minimized over the side exchange seen by the two bordering cells, with a
// color-role prefix (pivot vs swapped pair; a single role for fully
// symmetric passports where rotation makes all three colors equivalent).
std::string edge_key_of(const TriTree& t, const Passport& pp, bool cover_mode) {
  std::string body = t.canon.substr(t.canon.find(':'));
  std::string other = side_swapped(t).canon;
  body = std::min(body, other.substr(other.find(':')));
  if (symmetric_passport(pp) && !cover_mode) return "x" + body;
  ColorGauge g = color_gauge(pp);
  return (t.middle == g.pivot ? "p" : "s") + body;
}

}  // namespace

int Atlas::vertex_degree(int component, const std::string& word) const {
  const auto& comp = components[component];
  int deg = 0;
  for (const auto& ekey : comp.edges) {
    auto it = std::find_if(edges.begin(), edges.end(),
                           [&](const EdgeRecord& e) { return e.key == ekey; });
    for (const auto& w : it->vertices)
      if (w == word) ++deg;
  }
  return deg;
}

Atlas build_atlas(const std::vector<CactusClass>& classes, const std::string& filter,
                  const Passport& passport) {
  Atlas a{passport, filter, {}, {}, {}};
  if (classes.empty()) return a;

  for (const auto& c : classes)
    if (!(c.passport == passport))
      throw UsageError("atlas classes must share one passport");

  // Fully symmetric passports are enumerated up to color rotation.  When a
  // rotation-symmetric class is present the reduced wall pairing is not
  // free, so the atlas is built on the conjugation-level classes instead.
  const bool symmetric = symmetric_passport(passport);
  bool cover_mode = false;
  std::vector<CactusClass> faces = classes;
  if (symmetric) {
    bool any_fixed = std::any_of(classes.begin(), classes.end(), rotation_fixed);
    if (any_fixed) {
      cover_mode = true;
      std::set<std::array<Perm, 3>> expanded;
      for (const auto& c : classes) {
        auto t = c.triple();
        for (int j = 0; j < 3; ++j) {
          expanded.insert(t);
          t = rotate_colors(t);
        }
      }
      faces.clear();
      for (const auto& t : expanded)
        faces.push_back(make_canonical_class(passport, t[0], t[1], t[2]));
      a.filter = filter + " (conjugation-level: rotation-symmetric classes present)";
    }
  }
  const int F = static_cast<int>(faces.size());

  std::map<std::string, int> id_by_key;
  for (int i = 0; i < F; ++i) id_by_key[faces[i].key()] = i;

  // Slots, wall trees and the pairing across each wall.
  struct Slot {
    TriTree tree;
    int partner_face = -1;
    Color partner_middle = Color::star;
  };
  std::vector<std::array<Slot, 3>> slots(F);
  for (int i = 0; i < F; ++i) {
    for (Color mid : {Color::star, Color::circ, Color::bullet}) {
      Slot s;
      s.tree = degenerate(faces[i], mid);
      WallNeighbor nb = wall_neighbor(faces[i], mid, !cover_mode);
      auto it = id_by_key.find(nb.neighbor.key());
      if (it == id_by_key.end())
        throw ClosureError(
            "transform image (" + nb.neighbor.g_star.cycle_string() + ", " +
                nb.neighbor.g_circ.cycle_string() + ", " +
                nb.neighbor.g_bullet.cycle_string() +
                ") is not in the atlas input; the filter is not closed under "
                "wall crossing",
            nb.neighbor.key());
      s.partner_face = it->second;
      s.partner_middle = nb.slot_middle;
      slots[i][static_cast<int>(mid)] = std::move(s);
    }
  }
  // pairing must be an involution on slots
  for (int i = 0; i < F; ++i)
    for (int m = 0; m < 3; ++m) {
      const Slot& s = slots[i][m];
      const Slot& back = slots[s.partner_face][static_cast<int>(s.partner_middle)];
      if (back.partner_face != i || static_cast<int>(back.partner_middle) != m)
        throw InternalError("wall pairing is not an involution on border slots");
    }

  // Edges: orbits of the pairing, keyed by the gauge-invariant word.
  struct EdgeData {
    int face, middle;  // canonical representative slot
    bool single;
  };
  std::vector<EdgeData> edge_data;
  std::map<std::pair<int, int>, int> edge_of_slot;
  for (int i = 0; i < F; ++i)
    for (int m = 0; m < 3; ++m) {
      if (edge_of_slot.count({i, m})) continue;
      const Slot& s = slots[i][m];
      EdgeData ed{i, m, s.partner_face == i && static_cast<int>(s.partner_middle) == m};
      int idx = static_cast<int>(edge_data.size());
      edge_of_slot[{i, m}] = idx;
      edge_of_slot[{s.partner_face, static_cast<int>(s.partner_middle)}] = idx;
      edge_data.push_back(ed);
    }

  // assemble face records
  a.faces.reserve(F);
  std::vector<std::string> edge_keys(edge_data.size());
  for (size_t e = 0; e < edge_data.size(); ++e)
    edge_keys[e] = edge_key_of(slots[edge_data[e].face][edge_data[e].middle].tree,
                               passport, cover_mode);
  // duplicate keys across distinct walls (possible at conjugation level for
  // rotation-symmetric strata) get a deterministic suffix
  {
    std::map<std::string, int> seen;
    std::vector<size_t> order(edge_data.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return std::make_pair(edge_keys[x], std::make_pair(edge_data[x].face,
                                                         edge_data[x].middle)) <
             std::make_pair(edge_keys[y], std::make_pair(edge_data[y].face,
                                                         edge_data[y].middle));
    });
    for (size_t idx : order) {
      int n = seen[edge_keys[idx]]++;
      if (n > 0) edge_keys[idx] += "#" + std::to_string(n + 1);
    }
  }

  for (int i = 0; i < F; ++i) {
    FaceRecord fr{faces[i], {}};
    fr.cls.id = i;
    for (int m = 0; m < 3; ++m) {
      const Slot& s = slots[i][m];
      int e = edge_of_slot.at({i, m});
      fr.borders[m] = FaceBorder{static_cast<Color>(m), edge_keys[e], s.partner_face};
    }
    a.faces.push_back(std::move(fr));
  }

  for (size_t e = 0; e < edge_data.size(); ++e) {
    const EdgeData& ed = edge_data[e];
    const Slot& s = slots[ed.face][ed.middle];
    EdgeRecord er;
    er.key = edge_keys[e];
    er.self_adjacent = ed.single;
    er.faces = {std::min(ed.face, s.partner_face), std::max(ed.face, s.partner_face)};
    er.vertices = {contract(s.tree, ContractSide::merge_predecessor).canon,
                   contract(s.tree, ContractSide::merge_successor).canon};
    a.edges.push_back(std::move(er));
  }
  // deterministic edge order
  {
    std::vector<size_t> order(a.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return a.edges[x].key < a.edges[y].key; });
    std::vector<EdgeRecord> sorted;
    std::vector<int> edge_pos(a.edges.size());
    for (size_t k = 0; k < order.size(); ++k) {
      edge_pos[order[k]] = static_cast<int>(k);
      sorted.push_back(a.edges[order[k]]);
    }
    a.edges = std::move(sorted);
  }

  // components from face-edge incidence
  Dsu face_dsu(F);
  for (int i = 0; i < F; ++i)
    for (int m = 0; m < 3; ++m) face_dsu.join(i, slots[i][m].partner_face);
  std::map<int, std::vector<int>> comp_faces;
  for (int i = 0; i < F; ++i) comp_faces[face_dsu.find(i)].push_back(i);
  std::vector<std::vector<int>> comps;
  for (auto& [root, fs] : comp_faces) comps.push_back(fs);
  std::sort(comps.begin(), comps.end());

  for (const auto& fs : comps) {
    ComponentSummary cs;
    cs.faces = fs;
    std::set<int> fset(fs.begin(), fs.end());
    std::set<std::string> vkeys;
    for (const auto& e : a.edges) {
      if (!fset.count(e.faces[0])) continue;
      cs.edges.push_back(e.key);
      vkeys.insert(e.vertices[0]);
      vkeys.insert(e.vertices[1]);
    }
    cs.vertices.assign(vkeys.begin(), vkeys.end());
    cs.F = static_cast<int>(cs.faces.size());
    cs.E = static_cast<int>(cs.edges.size());
    cs.V = static_cast<int>(cs.vertices.size());
    cs.chi = cs.V - cs.E + cs.F;
    cs.surface = cs.chi == 2 ? "sphere" : cs.chi == 1 ? "projective_plane" : "chi_only";
    a.components.push_back(std::move(cs));
  }
  return a;
}

std::string export_json(const Atlas& a) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["passport"] = {a.passport.n, a.passport.k, a.passport.l, a.passport.m};
  doc["filter"] = a.filter;

  json faces = json::array();
  for (const auto& f : a.faces) {
    json jf;
    jf["id"] = f.cls.id;
    jf["permutations"] = {{"star", f.cls.g_star.cycle_string()},
                          {"circ", f.cls.g_circ.cycle_string()},
                          {"bullet", f.cls.g_bullet.cycle_string()}};
    jf["aut_order"] = f.cls.aut_order;
    jf["group"] = {{"name", std::string(f.cls.group.name_str())},
                   {"order", f.cls.group.order}};
    json borders = json::array();
    for (const auto& b : f.borders)
      borders.push_back({{"middle", color_name(b.middle)},
                         {"edge_key", b.edge_key},
                         {"neighbor_id", b.neighbor_id}});
    jf["borders"] = borders;
    faces.push_back(jf);
  }
  doc["faces"] = faces;

  json edges = json::array();
  for (const auto& e : a.edges) {
    json je;
    je["key"] = e.key;
    je["faces"] = e.faces;
    je["vertices"] = {e.vertices[0], e.vertices[1]};
    je["self_adjacent"] = e.self_adjacent;
    edges.push_back(je);
  }
  doc["edges"] = edges;

  json comps = json::array();
  for (const auto& c : a.components) {
    json jc;
    jc["faces"] = c.faces;
    jc["edges"] = c.edges;
    jc["vertices"] = c.vertices;
    jc["F"] = c.F;
    jc["E"] = c.E;
    jc["V"] = c.V;
    jc["chi"] = c.chi;
    jc["surface"] = c.surface;
    comps.push_back(jc);
  }
  doc["components"] = comps;
  return doc.dump(2) + "\n";
}

std::string export_dot(const Atlas& a) {
  std::ostringstream os;
  for (size_t ci = 0; ci < a.components.size(); ++ci) {
    const auto& comp = a.components[ci];
    os << "graph component_" << ci << " {\n";
    std::map<std::string, std::string> node;
    for (size_t vi = 0; vi < comp.vertices.size(); ++vi) {
      std::string id = "c" + std::to_string(ci) + "_v" + std::to_string(vi);
      node[comp.vertices[vi]] = id;
      os << "  " << id << " [label=\"v" << vi << "\"];"
         << "  // " << comp.vertices[vi] << "\n";
    }
    for (const auto& ekey : comp.edges) {
      const auto& e = *std::find_if(a.edges.begin(), a.edges.end(),
                                    [&](const EdgeRecord& x) { return x.key == ekey; });
      os << "  " << node.at(e.vertices[0]) << " -- " << node.at(e.vertices[1])
         << " [label=\"f" << e.faces[0] << "|f" << e.faces[1] << "\"";
      if (e.self_adjacent) os << ", style=bold, comment=\"self-adjacent\"";
      os << "];\n";
    }
    os << "}\n";
  }
  return os.str();
}

std::string summary_text(const Atlas& a) {
  std::ostringstream os;
  os << "passport (" << a.passport.n << "; " << a.passport.k << ',' << a.passport.l
     << ',' << a.passport.m << ") filter=" << a.filter << " faces=" << a.faces.size()
     << "\n";
  for (size_t i = 0; i < a.components.size(); ++i) {
    const auto& c = a.components[i];
    os << "component " << i << ": F=" << c.F << " E=" << c.E << " V=" << c.V
       << " chi=" << c.chi << " " << c.surface << "\n";
  }
  return os.str();
}

}  // namespace zolotarev
