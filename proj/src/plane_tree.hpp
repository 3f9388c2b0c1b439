#pragma once

// Degenerated cacti (3-colored plane trees on 2n darts), their canonical
// words, contractions to 2-colored plane trees, and the wall-crossing
// transform to the neighboring cactus.
//
// A TriTree is stored as a bipartite rotation system on darts 0..2n-1:
// dart i < n is L_{i+1}, the edge from a predecessor-color vertex to a
// middle-color vertex of oval i+1; dart n+i is R_{i+1}, the edge from that
// middle vertex to a successor-color vertex.  sigma_mid / sigma_ends are the
// rotations at middle / end vertices.  The face permutation
// d -> sigma_ends(sigma_mid(d)) of a plane tree is a single 2n-cycle.

#include <string>
#include <vector>

#include "cactus.hpp"

namespace zolotarev {

struct TriTree {
  int n = 0;
  Color middle = Color::star;
  std::vector<int> sigma_mid;
  std::vector<int> sigma_ends;
  std::string canon;

  // Face cycle starting from dart 0: face[t] = (sigma_mid then sigma_ends)^t (0).
  std::vector<int> face_cycle() const;
};

// Core builder from the three rotation permutations around the degenerating
// segment: g_u at predecessor-color vertices, g_mid at middle, g_v at
// successor.  Interleaving at middle vertices is fixed project-wide:
// sigma_mid(L_i) = R_i, sigma_mid(R_i) = L_{g_mid(i)}.
TriTree degenerate_triple(const Perm& g_u, const Perm& g_mid, const Perm& g_v,
                          Color middle);

TriTree degenerate(const CactusClass& c, Color middle);

// Complete canonical word: relabel darts along the unique face walk from
// every starting dart in turn and record, per step, the dart side and the
// walk position of its sigma_mid image; the word is the least encoding,
// prefixed with the middle color.  Two TriTrees have equal words iff they
// are isomorphic as middle-colored plane trees (side- and orientation-
// preserving).
std::string tri_canonical(const TriTree& t);

// The same tree with its two end-color roles exchanged (L and R darts
// swapped, rotations kept).  A wall is seen from its two sides in gauges
// that differ by exactly this exchange.
TriTree side_swapped(const TriTree& t);

// The mirror image: both rotations reversed, sides kept.
TriTree mirrored(const TriTree& t);

enum class ContractSide { merge_predecessor, merge_successor };

struct BiTree {
  int n = 0;
  Perm rho_merged, rho_plain;  // rotations on edge labels 1..n
  std::string canon;
};

// Rotation-system contraction of every L-dart (merge_predecessor) or every
// R-dart (merge_successor); surviving darts are relabeled 1..n by their oval
// index.  The result is a plane tree: rho_merged then rho_plain is an n-cycle.
BiTree contract(const TriTree& t, ContractSide side);

// Complete canonical word over the n face-walk starts (same scheme as
// tri_canonical, with the merged-color rotation recorded).
std::string bi_canonical(const BiTree& t);

BiTree bi_mirrored(const BiTree& t);

// Canonical key of the underlying tree regardless of the orientation in
// which a wall end presents it.
std::string bi_vertex_key(const BiTree& t);

// The passport-determined color gauge for wall crossing: the two colors with
// equal counts swap when the triangle flips, the remaining color is the
// pivot.  Passports with three distinct counts have no family-internal wall
// crossing and are rejected with CapabilityError.
struct ColorGauge {
  Color swapped_a, swapped_b, pivot;
  Color apply(Color c) const;
};
ColorGauge color_gauge(const Passport& p);

// The neighboring cactus across the wall degenerate(c, middle): the tree is
// reassembled with the opposite interleaving at its middle vertices and the
// two equal-count colors are renamed per the re-applied orientation rule.
struct WallNeighbor {
  CactusClass neighbor;
  Color slot_middle;  // the neighbor's border slot carrying the same wall
};

// rotation_reduce selects whether fully symmetric passports are reduced to
// rotation-canonical representatives (the enumeration's class set) or kept
// at conjugation level.
WallNeighbor wall_neighbor(const CactusClass& c, Color middle,
                           bool rotation_reduce = true);

CactusClass transform(const CactusClass& c, Color middle);

// Rotations rendered in cycle notation over dart names L1..Ln,R1..Rn.
std::string dart_cycle_string(const std::vector<int>& sigma, int n);

}  // namespace zolotarev
