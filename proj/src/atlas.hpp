#pragma once

// Assembly of the combinatorial moduli space: faces are cactus classes,
// edges are degenerated-cactus words shared between borders, vertices are
// contracted-tree words counted per component.

#include <array>
#include <string>
#include <vector>

#include "plane_tree.hpp"

namespace zolotarev {

struct FaceBorder {
  Color middle = Color::star;
  std::string edge_key;
  int neighbor_id = -1;
};

struct FaceRecord {
  CactusClass cls;
  std::array<FaceBorder, 3> borders;  // indexed by Color
};

struct EdgeRecord {
  std::string key;
  std::vector<int> faces;              // two entries; equal when self-adjacent
  std::array<std::string, 2> vertices; // words from merge_predecessor / merge_successor
  bool self_adjacent = false;
};

struct ComponentSummary {
  std::vector<int> faces;
  std::vector<std::string> edges;
  std::vector<std::string> vertices;
  int F = 0, E = 0, V = 0, chi = 0;
  std::string surface;  // "sphere", "projective_plane", or "chi_only"
};

struct Atlas {
  Passport passport;
  std::string filter;
  std::vector<FaceRecord> faces;
  std::vector<EdgeRecord> edges;       // sorted by key
  std::vector<ComponentSummary> components;

  // Incidence degree of a vertex word within a component.
  int vertex_degree(int component, const std::string& word) const;
};

// classes must share the given passport and be closed under transform; a
// transform image outside the set raises ClosureError naming the missing
// class.
Atlas build_atlas(const std::vector<CactusClass>& classes, const std::string& filter,
                  const Passport& passport);

std::string export_json(const Atlas& a);
std::string export_dot(const Atlas& a);
std::string summary_text(const Atlas& a);

}  // namespace zolotarev
