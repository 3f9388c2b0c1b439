#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "atlas.hpp"

using namespace zolotarev;

namespace {

std::vector<CactusClass> with_order(const Passport& pp, long long order) {
  std::vector<CactusClass> out;
  for (const auto& c : enumerate_cacti(pp))
    if (!order || c.group.order == order) out.push_back(c);
  return out;
}

std::multiset<int> degree_multiset(const Atlas& a, int comp) {
  std::multiset<int> out;
  for (const auto& w : a.components[comp].vertices)
    out.insert(a.vertex_degree(comp, w));
  return out;
}

// per-face profile: (#single-slot walls, #doubled neighbors, #distinct others)
std::multiset<std::array<int, 3>> face_profiles(const Atlas& a) {
  std::multiset<std::array<int, 3>> out;
  for (const auto& f : a.faces) {
    std::multiset<int> nbrs;
    int singles = 0;
    for (const auto& b : f.borders) {
      const auto& e = *std::find_if(a.edges.begin(), a.edges.end(),
                                    [&](const EdgeRecord& x) { return x.key == b.edge_key; });
      if (e.self_adjacent)
        ++singles;
      else
        nbrs.insert(b.neighbor_id);
    }
    std::set<int> distinct(nbrs.begin(), nbrs.end());
    int doubled = 0;
    for (int x : distinct)
      if (nbrs.count(x) >= 2) ++doubled;
    out.insert({singles, doubled, static_cast<int>(distinct.size()) - doubled});
  }
  return out;
}

std::multiset<std::array<int, 3>> endpoint_pairs(const Atlas& a, int comp) {
  std::multiset<std::array<int, 3>> out;
  for (const auto& ekey : a.components[comp].edges) {
    const auto& e = *std::find_if(a.edges.begin(), a.edges.end(),
                                  [&](const EdgeRecord& x) { return x.key == ekey; });
    int d1 = a.vertex_degree(comp, e.vertices[0]);
    int d2 = a.vertex_degree(comp, e.vertices[1]);
    out.insert({std::min(d1, d2), std::max(d1, d2), e.self_adjacent ? 1 : 0});
  }
  return out;
}

void check_structural_invariants(const Atlas& a) {
  // every face has three borders with a symmetric neighbor relation
  for (const auto& f : a.faces)
    for (const auto& b : f.borders) {
      REQUIRE(b.neighbor_id >= 0);
      REQUIRE(b.neighbor_id < (int)a.faces.size());
    }
  // every edge is owned by one or two slots: 3F = 2E - singles
  int singles = 0;
  for (const auto& e : a.edges)
    if (e.self_adjacent) ++singles;
  CHECK(3 * (int)a.faces.size() == 2 * (int)a.edges.size() - singles);
  // handshake per component: 2E = sum of vertex degrees
  for (size_t ci = 0; ci < a.components.size(); ++ci) {
    const auto& comp = a.components[ci];
    int total = 0;
    for (const auto& w : comp.vertices) total += a.vertex_degree((int)ci, w);
    CHECK(total == 2 * comp.E);
    CHECK(comp.chi == comp.V - comp.E + comp.F);
  }
  // components partition the faces
  size_t face_total = 0;
  for (const auto& comp : a.components) face_total += comp.faces.size();
  CHECK(face_total == a.faces.size());
}

}  // namespace

TEST_CASE("degree-5 moduli map") {
  Passport pp(5, 1, 1, 2);
  Atlas a = build_atlas(enumerate_cacti(pp), "any", pp);
  check_structural_invariants(a);
  REQUIRE(a.components.size() == 1);
  const auto& c = a.components[0];
  CHECK(c.F == 5);
  CHECK(c.E == 8);
  CHECK(c.V == 4);
  CHECK(c.chi == 1);
  CHECK(c.surface == "projective_plane");
  CHECK(degree_multiset(a, 0) == std::multiset<int>{2, 3, 4, 7});

  // one single-slot wall, with both contraction ends at the same tree
  int singles = 0;
  for (const auto& e : a.edges)
    if (e.self_adjacent) {
      ++singles;
      CHECK(e.vertices[0] == e.vertices[1]);
      CHECK(e.faces[0] == e.faces[1]);
    }
  CHECK(singles == 1);

  // face adjacency: two faces with three distinct neighbors, one face with
  // the single-slot wall, two joined by a doubled wall
  auto profiles = face_profiles(a);
  std::multiset<std::array<int, 3>> expected = {
      {0, 0, 3}, {0, 0, 3}, {1, 0, 2}, {0, 1, 1}, {0, 1, 1}};
  CHECK(profiles == expected);

  // endpoint degree pairs per edge
  std::multiset<std::array<int, 3>> pairs = {{4, 7, 0}, {4, 7, 0}, {3, 7, 0},
                                             {3, 7, 0}, {3, 4, 0}, {7, 7, 1},
                                             {2, 4, 0}, {2, 7, 0}};
  CHECK(endpoint_pairs(a, 0) == pairs);
}

TEST_CASE("degree-6 moduli map on the order-720 classes") {
  Passport pp(6, 2, 2, 1);
  Atlas a = build_atlas(with_order(pp, 720), "symmetric", pp);
  check_structural_invariants(a);
  REQUIRE(a.components.size() == 1);
  const auto& c = a.components[0];
  CHECK(c.F == 12);
  CHECK(c.E == 18);
  CHECK(c.V == 8);
  CHECK(c.chi == 2);
  CHECK(c.surface == "sphere");
  CHECK(degree_multiset(a, 0) == std::multiset<int>{2, 3, 4, 4, 5, 6, 6, 6});
  for (const auto& e : a.edges) CHECK_FALSE(e.self_adjacent);

  auto profiles = face_profiles(a);
  std::multiset<std::array<int, 3>> expected;
  for (int i = 0; i < 10; ++i) expected.insert({0, 0, 3});
  expected.insert({0, 1, 1});
  expected.insert({0, 1, 1});
  CHECK(profiles == expected);

  std::multiset<std::array<int, 3>> pairs = {
      {6, 6, 0}, {6, 6, 0}, {6, 6, 0}, {5, 6, 0}, {5, 6, 0}, {5, 6, 0},
      {5, 6, 0}, {4, 6, 0}, {4, 6, 0}, {4, 6, 0}, {4, 6, 0}, {4, 6, 0},
      {3, 4, 0}, {3, 6, 0}, {3, 6, 0}, {4, 4, 0}, {2, 6, 0}, {2, 5, 0}};
  CHECK(endpoint_pairs(a, 0) == pairs);
}

TEST_CASE("degree-7 moduli map on the order-2520 classes") {
  Passport pp(7, 2, 2, 2);
  Atlas a = build_atlas(with_order(pp, 2520), "alternating", pp);
  check_structural_invariants(a);
  REQUIRE(a.components.size() == 2);
  CHECK(a.edges.size() == 22);
  for (int ci = 0; ci < 2; ++ci) {
    const auto& c = a.components[ci];
    CHECK(c.F == 7);
    CHECK(c.E == 11);
    CHECK(c.V == 5);
    CHECK(c.chi == 1);
    CHECK(c.surface == "projective_plane");
    int selfadj = 0;
    for (const auto& ekey : c.edges)
      for (const auto& e : a.edges)
        if (e.key == ekey && e.self_adjacent) ++selfadj;
    CHECK(selfadj == 1);
  }
  // eight distinct contracted trees in all, two shared across components
  std::set<std::string> s1(a.components[0].vertices.begin(),
                           a.components[0].vertices.end());
  std::set<std::string> s2(a.components[1].vertices.begin(),
                           a.components[1].vertices.end());
  std::set<std::string> all(s1);
  all.insert(s2.begin(), s2.end());
  int shared = 0;
  for (const auto& w : s1)
    if (s2.count(w)) ++shared;
  CHECK(all.size() == 8);
  CHECK(shared == 2);

  // the two components are structurally different maps
  std::multiset<std::multiset<int>> comp_degs = {degree_multiset(a, 0),
                                                 degree_multiset(a, 1)};
  std::multiset<std::multiset<int>> expected = {{3, 3, 5, 5, 6}, {3, 3, 4, 5, 7}};
  CHECK(comp_degs == expected);
}

TEST_CASE("degree-7 order-168 stratum builds and satisfies the invariants") {
  Passport pp(7, 2, 2, 2);
  auto psl = with_order(pp, 168);
  REQUIRE(psl.size() == 6);
  Atlas a = build_atlas(psl, "psl27", pp);
  // rotation-symmetric classes force the conjugation-level presentation
  CHECK(a.faces.size() == 14);
  check_structural_invariants(a);
  CHECK(a.filter.find("conjugation-level") != std::string::npos);
}

TEST_CASE("atlas closure error names the missing class") {
  Passport pp(6, 2, 2, 1);
  auto s6 = with_order(pp, 720);
  s6.pop_back();
  CHECK_THROWS_AS(build_atlas(s6, "broken", pp), ClosureError);
}

TEST_CASE("empty atlas is a valid document") {
  Passport pp(6, 2, 2, 1);
  Atlas a = build_atlas({}, "psl27", pp);
  CHECK(a.faces.empty());
  CHECK(a.components.empty());
  auto doc = nlohmann::json::parse(export_json(a));
  CHECK(doc["components"].empty());
  CHECK(doc["passport"] == nlohmann::json({6, 2, 2, 1}));
}

TEST_CASE("json export is deterministic and well-formed") {
  Passport pp(5, 1, 1, 2);
  auto run = [&] { return export_json(build_atlas(enumerate_cacti(pp), "any", pp)); };
  std::string first = run(), second = run();
  CHECK(first == second);
  auto doc = nlohmann::json::parse(first);
  CHECK(doc["faces"].size() == 5);
  CHECK(doc["edges"].size() == 8);
  REQUIRE(doc["components"].size() == 1);
  CHECK(doc["components"][0]["chi"] == 1);
  CHECK(doc["components"][0]["surface"] == "projective_plane");
  for (const auto& f : doc["faces"]) CHECK(f["borders"].size() == 3);
}

TEST_CASE("dot export renders the incidence multigraph") {
  Passport pp(6, 2, 2, 1);
  Atlas a = build_atlas(with_order(pp, 720), "symmetric", pp);
  std::string dot = export_dot(a);
  CHECK(dot.find("graph component_0 {") != std::string::npos);
  size_t nodes = 0, links = 0, pos = 0;
  while ((pos = dot.find("[label=\"v", pos)) != std::string::npos) {
    ++nodes;
    pos += 1;
  }
  pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++links;
    pos += 1;
  }
  CHECK(nodes == 8);
  CHECK(links == 18);
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
}
