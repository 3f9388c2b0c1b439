#pragma once

// Permutations of {1..n} and the handful of group-theoretic primitives the
// rest of the project is built on.  Composition is left-to-right everywhere:
// compose(p, q) means "apply p, then q", and the conjugate of p by s is
// s^-1 * p * s under that reading.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace zolotarev {

class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);  // identity on {1..n}

  // images_1based[i] is the image of point i+1; must be a bijection.
  static Perm from_images(const std::vector<int>& images_1based);

  // Parses cycle notation, e.g. "(1 2)(3 4)" or "()" for the identity.
  // Whitespace between cycles and points is accepted; repeated or
  // out-of-range points are rejected.
  static Perm parse(const std::string& text, int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[point - 1] + 1; }  // 1-based

  bool is_identity() const;
  bool is_even() const;

  Perm inverse() const;
  Perm conjugated_by(const Perm& s) const;  // s^-1 * this * s

  // Nontrivial cycles, each starting at its smallest point, sorted by that
  // point; e.g. {{1,2},{3,4}}.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;

  const std::vector<uint8_t>& images0() const { return img_; }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<uint8_t> img_;  // 0-based images
};

// "p then q": result(i) = q(p(i)).  Degrees must match.
Perm compose(const Perm& p, const Perm& q);

// Lengths of disjoint cycles in descending order; sums to the degree.
std::vector<int> cycle_type(const Perm& p);

// True iff p is a product of exactly k disjoint transpositions.
bool has_involution_type(const Perm& p, int k);

// The base cycle (1 2 ... n).
Perm base_cycle(int n);

long long factorial(int n);

struct GroupClass {
  enum class Name { symmetric, alternating, psl27, other };
  long long order = 1;
  Name name = Name::other;
  std::string_view name_str() const;
  bool operator==(const GroupClass&) const = default;
};

// Order of the subgroup generated by breadth-first closure under
// composition, classified per GroupClass.  Degree must be <= 9.
GroupClass group_order(const std::vector<Perm>& generators);

// Lexicographically least tuple (comparing concatenated image sequences)
// among all simultaneous conjugates (s^-1 t_i s) for s in S_n.  Degree <= 9.
std::vector<Perm> min_conjugate_tuple(const std::vector<Perm>& tuple);

}  // namespace zolotarev
