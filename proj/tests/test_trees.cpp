#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "plane_tree.hpp"

using namespace zolotarev;

namespace {

// Exact side- and orientation-preserving isomorphism of one-face maps: any
// isomorphism conjugates the face cycle, so it is a walk alignment.
bool tri_iso(const TriTree& A, const TriTree& B) {
  if (A.n != B.n || A.middle != B.middle) return false;
  int m = 2 * A.n;
  auto fa = A.face_cycle(), fb = B.face_cycle();
  for (int s = 0; s < m; ++s) {
    std::vector<int> h(m);
    for (int t = 0; t < m; ++t) h[fa[t]] = fb[(s + t) % m];
    bool ok = true;
    for (int d = 0; d < m && ok; ++d) {
      if ((d < A.n) != (h[d] < A.n)) ok = false;
      else if (h[A.sigma_mid[d]] != B.sigma_mid[h[d]]) ok = false;
      else if (h[A.sigma_ends[d]] != B.sigma_ends[h[d]]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

bool bi_iso(const BiTree& A, const BiTree& B) {
  if (A.n != B.n) return false;
  int n = A.n;
  auto face = [&](const BiTree& t) {
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i)
      f[i] = t.rho_plain.images0()[t.rho_merged.images0()[i]];
    return f;
  };
  auto walk_from = [&](const std::vector<int>& f) {
    std::vector<int> w(n);
    w[0] = 0;
    for (int t = 1; t < n; ++t) w[t] = f[w[t - 1]];
    return w;
  };
  auto fa = walk_from(face(A)), fb = walk_from(face(B));
  for (int s = 0; s < n; ++s) {
    std::vector<int> h(n);
    for (int t = 0; t < n; ++t) h[fa[t]] = fb[(s + t) % n];
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (h[A.rho_merged.images0()[i]] != B.rho_merged.images0()[h[i]]) ok = false;
      else if (h[A.rho_plain.images0()[i]] != B.rho_plain.images0()[h[i]]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

std::vector<TriTree> family_trees(const Passport& pp, long long order_filter = 0) {
  std::vector<TriTree> out;
  for (const auto& c : enumerate_cacti(pp)) {
    if (order_filter && c.group.order != order_filter) continue;
    for (Color m : {Color::star, Color::circ, Color::bullet})
      out.push_back(degenerate(c, m));
  }
  return out;
}

}  // namespace

TEST_CASE("two-oval toy degeneration") {
  Perm id2(2), swap2 = Perm::parse("(1 2)", 2);
  TriTree t = degenerate_triple(id2, swap2, id2, Color::star);
  // one middle vertex of degree 4 with rotation (L1 R1 L2 R2)
  CHECK(t.sigma_mid == std::vector<int>{2, 3, 1, 0});
  CHECK(t.sigma_ends == std::vector<int>{0, 1, 2, 3});
  CHECK(t.face_cycle().size() == 4);

  // both contractions coincide: a path of two edges
  BiTree bp = contract(t, ContractSide::merge_predecessor);
  BiTree bs = contract(t, ContractSide::merge_successor);
  CHECK(bp.canon == bs.canon);
  CHECK(cycle_type(compose(bp.rho_merged, bp.rho_plain)) == std::vector<int>{2});
}

TEST_CASE("degeneration produces plane trees with the expected local degrees") {
  for (const auto& cc : enumerate_cacti(Passport(5, 1, 1, 2))) {
    for (Color m : {Color::star, Color::circ, Color::bullet}) {
      TriTree t = degenerate(cc, m);
      CHECK(t.face_cycle().size() == 10);
      // middle-vertex degrees are twice the g_mid cycle lengths
      std::multiset<int> mid_cycles, expected;
      std::vector<bool> seen(10, false);
      for (int d = 0; d < 10; ++d) {
        if (seen[d]) continue;
        int len = 0;
        for (int j = d; !seen[j]; j = t.sigma_mid[j]) {
          seen[j] = true;
          ++len;
        }
        mid_cycles.insert(len);
      }
      for (int len : cycle_type(cc.part(m))) expected.insert(2 * len);
      CHECK(mid_cycles == expected);
    }
  }
}

TEST_CASE("canonical word is relabeling-invariant") {
  std::mt19937 rng(5);
  auto classes = enumerate_cacti(Passport(5, 1, 1, 2));
  for (const auto& cc : classes) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> img(5);
      std::iota(img.begin(), img.end(), 1);
      std::shuffle(img.begin(), img.end(), rng);
      Perm s = Perm::from_images(img);
      for (Color m : {Color::star, Color::circ, Color::bullet}) {
        TriTree original = degenerate(cc, m);
        TriTree relabeled = degenerate_triple(
            cc.part(color_pred(m)).conjugated_by(s), cc.part(m).conjugated_by(s),
            cc.part(color_succ(m)).conjugated_by(s), m);
        CHECK(relabeled.canon == original.canon);
      }
    }
  }
}

TEST_CASE("canonical words characterize isomorphism exactly") {
  for (auto pp : {Passport(5, 1, 1, 2), Passport(6, 2, 2, 1)}) {
    auto trees = family_trees(pp);
    for (size_t i = 0; i < trees.size(); ++i)
      for (size_t j = i + 1; j < trees.size(); ++j) {
        if (trees[i].middle != trees[j].middle) continue;
        CHECK((trees[i].canon == trees[j].canon) == tri_iso(trees[i], trees[j]));
      }
  }
  // degree-7 contractions exercise the bitree words
  auto trees7 = family_trees(Passport(7, 2, 2, 2), 2520);
  std::vector<BiTree> bis;
  for (const auto& t : trees7) {
    bis.push_back(contract(t, ContractSide::merge_predecessor));
    bis.push_back(contract(t, ContractSide::merge_successor));
  }
  std::mt19937 rng(9);
  std::uniform_int_distribution<size_t> pick(0, bis.size() - 1);
  for (int trial = 0; trial < 400; ++trial) {
    size_t i = pick(rng), j = pick(rng);
    CHECK((bis[i].canon == bis[j].canon) == bi_iso(bis[i], bis[j]));
  }
}

TEST_CASE("mirror and side exchange are involutions on trees") {
  auto trees = family_trees(Passport(6, 2, 2, 1), 720);
  for (size_t i = 0; i < trees.size(); i += 5) {
    const TriTree& t = trees[i];
    CHECK(mirrored(mirrored(t)).canon == t.canon);
    CHECK(side_swapped(side_swapped(t)).canon == t.canon);
  }
}

TEST_CASE("contractions are plane trees") {
  for (const auto& t : family_trees(Passport(6, 2, 2, 1))) {
    for (auto side : {ContractSide::merge_predecessor, ContractSide::merge_successor}) {
      BiTree b = contract(t, side);
      CHECK(cycle_type(compose(b.rho_merged, b.rho_plain)) == std::vector<int>{6});
    }
  }
}

TEST_CASE("wall crossing reproduces the worked degree-5 example") {
  // Initial cactus: two ovals side by side plus a column of three; contacts
  // star{1,2}, star{4,5}, circ{3,4}, bullet{2,4}.  Crossing the wall where
  // the star value moves inside the segment yields a chain of five ovals
  // with contacts star{1,2}, bullet{2,3}, star{3,4}, circ{4,5}.
  Passport pp(5, 2, 1, 1);
  auto cls = [&](const char* s, const char* o, const char* bu) {
    auto t = normalized_triple(Perm::parse(s, 5), Perm::parse(o, 5), Perm::parse(bu, 5));
    return make_canonical_class(pp, t[0], t[1], t[2]);
  };
  CactusClass initial = cls("(1 2)(4 5)", "(3 4)", "(2 4)");

  // the drawing fixes the transformed cactus up to the reading orientation,
  // which exchanges the two equal-count colors
  CactusClass reading1 = cls("(1 2)(3 4)", "(4 5)", "(2 3)");
  CactusClass reading2 = cls("(1 2)(3 4)", "(2 3)", "(4 5)");

  CactusClass crossed = transform(initial, Color::star);
  bool matches = crossed.key() == reading1.key() || crossed.key() == reading2.key();
  CHECK(matches);
  CHECK_FALSE(crossed.key() == initial.key());
}

TEST_CASE("wall crossing is an involution on border slots") {
  for (auto pp : {Passport(5, 1, 1, 2), Passport(6, 2, 2, 1)}) {
    for (const auto& cc : enumerate_cacti(pp)) {
      for (Color m : {Color::star, Color::circ, Color::bullet}) {
        WallNeighbor nb = wall_neighbor(cc, m);
        CHECK(nb.neighbor.passport == pp);
        CHECK(nb.neighbor.group.order == cc.group.order);
        WallNeighbor back = wall_neighbor(nb.neighbor, nb.slot_middle);
        CHECK(back.neighbor.key() == cc.key());
        CHECK(back.slot_middle == m);
      }
    }
  }
}

TEST_CASE("wall crossing rejects passports with three distinct counts") {
  Passport pp(7, 1, 2, 3);
  auto classes = enumerate_cacti(pp);
  REQUIRE(!classes.empty());
  CHECK_THROWS_AS(transform(classes[0], Color::star), CapabilityError);
}

TEST_CASE("dart cycle rendering") {
  Perm id2(2), swap2 = Perm::parse("(1 2)", 2);
  TriTree t = degenerate_triple(id2, swap2, id2, Color::star);
  CHECK(dart_cycle_string(t.sigma_mid, t.n) == "(L1 R1 L2 R2)");
  CHECK(dart_cycle_string(t.sigma_ends, t.n) == "()");
}
