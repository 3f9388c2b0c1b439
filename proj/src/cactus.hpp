#pragma once

// Enumeration of cactus classes: conjugation-canonical triples of involutions
// (g_star, g_circ, g_bullet) whose product is the base cycle (1 2 ... n).

#include <array>
#include <vector>

#include "perm.hpp"

namespace zolotarev {

// The three critical-value colors, in their cyclic orientation order
// star -> circ -> bullet -> star.
enum class Color { star = 0, circ = 1, bullet = 2 };

Color color_succ(Color c);
Color color_pred(Color c);
const char* color_name(Color c);

struct Passport {
  int n, k, l, m;  // degree and per-color counts of simple critical points
  Passport(int n, int k, int l, int m);  // validates k+l+m = n-1 and 2k,2l,2m <= n
  int count(Color c) const { return c == Color::star ? k : c == Color::circ ? l : m; }
  bool operator==(const Passport&) const = default;
};

struct CactusClass {
  Passport passport;
  Perm g_star, g_circ, g_bullet;
  int id = -1;        // ordinal in deterministic enumeration order
  int aut_order = 1;
  GroupClass group;

  const Perm& part(Color c) const {
    return c == Color::star ? g_star : c == Color::circ ? g_circ : g_bullet;
  }
  std::array<Perm, 3> triple() const { return {g_star, g_circ, g_bullet}; }
  // Deterministic sort / lookup key: concatenated 1-based image sequences.
  std::string key() const;
};

// All permutations of cycle type 2^k 1^(n-2k), sorted by image sequence.
std::vector<Perm> involutions_with(int n, int k);

// Lexicographically least simultaneous conjugate of (a, b, c) among the
// conjugators that preserve the product (the powers of the base cycle; any
// conjugation taking one product-zeta triple to another centralizes zeta).
std::array<Perm, 3> canonical_triple(const Perm& a, const Perm& b, const Perm& c);

// Conjugates a triple whose product is any n-cycle so the product becomes
// the base cycle, then takes the canonical representative.
std::array<Perm, 3> normalized_triple(const Perm& a, const Perm& b, const Perm& c);

// Cyclic renaming of the three colors: the triple read in the order
// (circ, bullet, star), renormalized.  Maps passport (k,l,m) to (l,m,k).
std::array<Perm, 3> rotate_colors(const std::array<Perm, 3>& t);

// For fully symmetric passports (k = l = m) the three colors carry no
// intrinsic identity and classes are reduced by color rotation.  Returns the
// least representative among the rotation orbit and the number of rotation
// steps applied to reach it.
std::pair<std::array<Perm, 3>, int> rotation_canonical(const std::array<Perm, 3>& t);

// Builds the canonical class for a valid triple, filling aut_order and group.
CactusClass make_canonical_class(const Passport& pp, const Perm& a, const Perm& b,
                                 const Perm& c);

// One CactusClass per simultaneous-conjugacy class of valid triples, sorted
// by canonical key, ids assigned in that order.  Honors ZOLOTAREV_THREADS.
std::vector<CactusClass> enumerate_cacti(const Passport& p);

// Number of s with s^-1 g s = g for all three parts; such s centralize the
// base cycle, so only its n powers are scanned.
int automorphism_order(const CactusClass& c);

GroupClass monodromy(const CactusClass& c);

}  // namespace zolotarev
