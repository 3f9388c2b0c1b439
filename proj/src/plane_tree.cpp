#include "plane_tree.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace zolotarev {

namespace {

bool is_single_cycle(const std::vector<int>& sigma) {
  const int m = static_cast<int>(sigma.size());
  if (m == 0) return false;
  int d = 0, steps = 0;
  do {
    d = sigma[d];
    ++steps;
  } while (d != 0 && steps <= m);
  return steps == m;
}

// Complete canonical encoding of a one-face map given its face successor
// permutation and one rotation (the other is determined); `side` may be
// empty.  For every start, darts are relabeled by walk position and the
// walk-position images of `rot` are recorded; the least sequence wins.
std::string canonical_walk_word(const std::vector<int>& face,
                                const std::vector<int>& rot,
                                const std::vector<int>& side) {
  const int m = static_cast<int>(face.size());
  std::vector<int> walk(m), pos(m);
  walk[0] = 0;
  for (int t = 1; t < m; ++t) walk[t] = face[walk[t - 1]];
  for (int t = 0; t < m; ++t) pos[walk[t]] = t;

  std::vector<int> best, cand;
  for (int s = 0; s < m; ++s) {
    cand.clear();
    // start dart walk[s]; position of dart walk[s+t] is t
    for (int t = 0; t < m; ++t) {
      int d = walk[(s + t) % m];
      int image_pos = (pos[rot[d]] - s + m) % m;
      if (!side.empty()) cand.push_back(side[d]);
      cand.push_back(image_pos);
    }
    if (best.empty() || cand < best) best = cand;
  }
  std::ostringstream os;
  for (size_t i = 0; i < best.size(); ++i) {
    if (i) os << ',';
    os << best[i];
  }
  return os.str();
}

}  // namespace

std::vector<int> TriTree::face_cycle() const {
  std::vector<int> face;
  face.reserve(sigma_mid.size());
  int d = 0;
  do {
    face.push_back(d);
    d = sigma_ends[sigma_mid[d]];
  } while (d != 0);
  return face;
}

TriTree degenerate_triple(const Perm& g_u, const Perm& g_mid, const Perm& g_v,
                          Color middle) {
  const int n = g_mid.degree();
  if (g_u.degree() != n || g_v.degree() != n)
    throw UsageError("degeneration requires permutations of one degree");

  TriTree t;
  t.n = n;
  t.middle = middle;
  t.sigma_mid.resize(2 * n);
  t.sigma_ends.resize(2 * n);
  const auto& u0 = g_u.images0();
  const auto& m0 = g_mid.images0();
  const auto& v0 = g_v.images0();
  for (int i = 0; i < n; ++i) {
    t.sigma_mid[i] = n + i;           // L_i -> R_i
    t.sigma_mid[n + i] = m0[i];       // R_i -> L_{g_mid(i)}
    t.sigma_ends[i] = u0[i];          // rotation at predecessor-color vertices
    t.sigma_ends[n + i] = n + v0[i];  // rotation at successor-color vertices
  }

  std::vector<int> face(2 * n);
  for (int d = 0; d < 2 * n; ++d) face[d] = t.sigma_ends[t.sigma_mid[d]];
  if (!is_single_cycle(face))
    throw InternalError("degenerated cactus is not a plane tree (one face expected)");

  t.canon = tri_canonical(t);
  return t;
}

TriTree degenerate(const CactusClass& c, Color middle) {
  return degenerate_triple(c.part(color_pred(middle)), c.part(middle),
                           c.part(color_succ(middle)), middle);
}

std::string tri_canonical(const TriTree& t) {
  const int m = 2 * t.n;
  std::vector<int> face(m), side(m);
  for (int d = 0; d < m; ++d) {
    face[d] = t.sigma_ends[t.sigma_mid[d]];
    side[d] = d < t.n ? 0 : 1;
  }
  return std::string(color_name(t.middle)) + ":" +
         canonical_walk_word(face, t.sigma_mid, side);
}

TriTree side_swapped(const TriTree& t) {
  const int n = t.n, m = 2 * n;
  auto mp = [&](int d) { return (d + n) % m; };
  TriTree r;
  r.n = n;
  r.middle = t.middle;
  r.sigma_mid.resize(m);
  r.sigma_ends.resize(m);
  for (int d = 0; d < m; ++d) {
    r.sigma_mid[mp(d)] = mp(t.sigma_mid[d]);
    r.sigma_ends[mp(d)] = mp(t.sigma_ends[d]);
  }
  r.canon = tri_canonical(r);
  return r;
}

TriTree mirrored(const TriTree& t) {
  const int m = 2 * t.n;
  TriTree r;
  r.n = t.n;
  r.middle = t.middle;
  r.sigma_mid.resize(m);
  r.sigma_ends.resize(m);
  for (int d = 0; d < m; ++d) {
    r.sigma_mid[t.sigma_mid[d]] = d;
    r.sigma_ends[t.sigma_ends[d]] = d;
  }
  r.canon = tri_canonical(r);
  return r;
}

BiTree contract(const TriTree& t, ContractSide side) {
  const int n = t.n;
  const int m = 2 * n;
  // Half-edge structure: dart d has half-edge 2d at its middle vertex and
  // 2d+1 at its end vertex; next/prev are the vertex rotations.
  std::vector<int> nxt(2 * m), prv(2 * m);
  for (int d = 0; d < m; ++d) {
    nxt[2 * d] = 2 * t.sigma_mid[d];
    nxt[2 * d + 1] = 2 * t.sigma_ends[d] + 1;
  }
  for (int h = 0; h < 2 * m; ++h) prv[nxt[h]] = h;

  const bool drop_l = (side == ContractSide::merge_predecessor);
  for (int i = 0; i < n; ++i) {
    int d = drop_l ? i : n + i;
    int h1 = 2 * d, h2 = 2 * d + 1;
    bool lone1 = (nxt[h1] == h1), lone2 = (nxt[h2] == h2);
    if (lone1 && lone2) throw InternalError("contracting an isolated edge");
    if (lone1) {
      int c = prv[h2], e = nxt[h2];
      nxt[c] = e;
      prv[e] = c;
    } else if (lone2) {
      int a = prv[h1], b = nxt[h1];
      nxt[a] = b;
      prv[b] = a;
    } else {
      int a = prv[h1], b = nxt[h1];
      int c = prv[h2], e = nxt[h2];
      nxt[a] = e;
      prv[e] = a;
      nxt[c] = b;
      prv[b] = c;
    }
  }

  // Surviving darts keep their oval index: survivor i is R_i or L_i.
  auto dart_of = [&](int i) { return drop_l ? n + i : i; };
  std::vector<int> merged_images(n), plain_images(n);
  for (int i = 0; i < n; ++i) {
    int hn = nxt[2 * dart_of(i)];      // rotation at the merged vertex
    int gn = nxt[2 * dart_of(i) + 1];  // rotation at the plain vertex
    merged_images[i] = (drop_l ? hn / 2 - n : hn / 2) + 1;
    plain_images[i] = (drop_l ? gn / 2 - n : gn / 2) + 1;
  }

  BiTree b;
  b.n = n;
  b.rho_merged = Perm::from_images(merged_images);
  b.rho_plain = Perm::from_images(plain_images);
  if (cycle_type(compose(b.rho_merged, b.rho_plain)) != std::vector<int>{n})
    throw InternalError("contracted tree does not have a single face");
  b.canon = bi_canonical(b);
  return b;
}

std::string bi_canonical(const BiTree& t) {
  const int n = t.n;
  const auto& rm = t.rho_merged.images0();
  const auto& rp = t.rho_plain.images0();
  std::vector<int> rot(n), face(n);
  for (int i = 0; i < n; ++i) rot[i] = rm[i];
  for (int i = 0; i < n; ++i) face[i] = rp[rot[i]];
  return "bi:" + canonical_walk_word(face, rot, {});
}

BiTree bi_mirrored(const BiTree& t) {
  BiTree r;
  r.n = t.n;
  r.rho_merged = t.rho_merged.inverse();
  r.rho_plain = t.rho_plain.inverse();
  r.canon = bi_canonical(r);
  return r;
}

std::string bi_vertex_key(const BiTree& t) {
  return std::min(t.canon, bi_mirrored(t).canon);
}

Color ColorGauge::apply(Color c) const {
  if (c == swapped_a) return swapped_b;
  if (c == swapped_b) return swapped_a;
  return c;
}

ColorGauge color_gauge(const Passport& p) {
  if (p.k == p.l) return {Color::star, Color::circ, Color::bullet};
  if (p.l == p.m) return {Color::circ, Color::bullet, Color::star};
  if (p.k == p.m) return {Color::star, Color::bullet, Color::circ};
  throw CapabilityError(
      "wall crossing needs two colors with equal counts; this passport has "
      "three distinct counts");
}

WallNeighbor wall_neighbor(const CactusClass& c, Color middle, bool rotation_reduce) {
  const ColorGauge gauge = color_gauge(c.passport);

  // Reassemble with the opposite interleaving at middle vertices: the
  // predecessor-color rotation is conjugated by the middle one.
  Perm parts[3] = {c.g_star, c.g_circ, c.g_bullet};
  const int u = static_cast<int>(color_pred(middle));
  parts[u] = parts[u].conjugated_by(c.part(middle));

  // Crossing the wall flips the triangle's orientation, which renames the
  // two equal-count colors when the naming rule is re-applied.
  Perm renamed[3];
  for (int i = 0; i < 3; ++i)
    renamed[i] = parts[static_cast<int>(gauge.apply(static_cast<Color>(i)))];

  auto tri = normalized_triple(renamed[0], renamed[1], renamed[2]);
  Color slot = gauge.apply(middle);
  if (rotation_reduce && c.passport.k == c.passport.l && c.passport.l == c.passport.m) {
    auto [reduced, steps] = rotation_canonical(tri);
    tri = reduced;
    for (int s = 0; s < steps; ++s) slot = color_pred(slot);
  }
  return {make_canonical_class(c.passport, tri[0], tri[1], tri[2]), slot};
}

CactusClass transform(const CactusClass& c, Color middle) {
  return wall_neighbor(c, middle).neighbor;
}

std::string dart_cycle_string(const std::vector<int>& sigma, int n) {
  const int m = static_cast<int>(sigma.size());
  auto name = [&](int d) {
    std::ostringstream os;
    os << (d < n ? 'L' : 'R') << (d < n ? d + 1 : d - n + 1);
    return os.str();
  };
  std::vector<bool> seen(m, false);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < m; ++i) {
    if (seen[i] || sigma[i] == i) continue;
    os << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << name(j);
      first = false;
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace zolotarev
